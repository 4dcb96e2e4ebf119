"""Enumeration of the cyclic-quotient orbifolds of a given closed surface.

For a covering surface of Euler characteristic chi and a symmetry period l,
the admissible quotient signatures satisfy

    -chi = l * (alpha*g - 2 + h + sum_i (1 - 1/m_i)),

with alpha = 2 for orientable quotients and 1 for non-orientable ones.  The
candidates are enumerated exactly (rational arithmetic), pruned by structural
conditions (branch indices divide l, boundaries need an even period,
orientable closed quotients only arise under even covering characteristic),
and kept only when the number of order-preserving epimorphisms onto Z_l is
positive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .epimorphisms import epi_count
from .numtheory import divisors
from .surfaces import OrbifoldSignature, SurfaceClass


@dataclass(frozen=True)
class CensusRow:
    covering_chi: int
    period: int
    signature: OrbifoldSignature
    epi: int
    epi_plus: int

    def as_dict(self) -> dict:
        return {
            "covering_chi": self.covering_chi,
            "l": self.period,
            "orientable": "+" if self.signature.orientable else "-",
            "chi_orbifold": self.signature.underlying_chi,
            "h": self.signature.boundary,
            "branch_indices": list(self.signature.branch_indices),
            "epi": self.epi,
            "epi_plus": self.epi_plus,
        }


def riemann_hurwitz_holds(covering_chi: int, period: int, sig: OrbifoldSignature) -> bool:
    """Exact check of the branched-covering Euler characteristic relation."""
    if period < 1:
        raise ValueError("period must be >= 1")
    alpha = 2 if sig.orientable else 1
    bracket = Fraction(alpha * sig.genus - 2 + sig.boundary)
    for m in sig.branch_indices:
        bracket += 1 - Fraction(1, m)
    return Fraction(-covering_chi) == period * bracket


def period_bound(surface: SurfaceClass, n_edges: int) -> int:
    """Largest symmetry period worth considering for maps with n_edges edges.

    Orientable genus >= 2 and non-orientable genus >= 3 surfaces have genus
    bounds on cyclic group orders; on the four small surfaces the period is
    only limited by the requirement that a quotient map keep >= 2 flags,
    i.e. l <= 2 n_edges.
    """
    if n_edges < 1:
        raise ValueError("n_edges must be >= 1")
    g = surface.genus
    if surface.orientable and g >= 2:
        return 4 * g + 4 if g % 2 == 0 else 4 * g - 4
    if not surface.orientable and g >= 3:
        return 2 * g - 2 if g % 2 == 0 else 2 * g
    return 2 * n_edges


def _branch_multisets(target: Fraction, period: int) -> Iterator[tuple[int, ...]]:
    """Multisets (m_1 <= ... <= m_r) of divisors of the period, each >= 2,
    with sum(1 - 1/m_i) equal to target."""
    choices = [d for d in divisors(period) if d >= 2]

    def rec(remaining: Fraction, max_idx: int, acc: list[int]):
        if remaining == 0:
            yield tuple(sorted(acc))
            return
        if remaining < 0:
            return
        for i in range(max_idx, -1, -1):
            m = choices[i]
            weight = 1 - Fraction(1, m)
            if weight > remaining:
                continue
            acc.append(m)
            yield from rec(remaining - weight, i, acc)
            acc.pop()

    yield from rec(target, len(choices) - 1, [])


def generate_signatures(covering_chi: int, period: int) -> list[OrbifoldSignature]:
    """All quotient signatures of period-l symmetries on chi-surfaces.

    Candidates satisfy the Euler characteristic relation exactly and pass the
    structural filters; a candidate survives only if the corresponding group
    admits at least one order-preserving epimorphism onto Z_l.
    """
    bracket = Fraction(-covering_chi, period)
    found = []
    for orientable in (True, False):
        alpha = 2 if orientable else 1
        g = 0 if orientable else 1
        while Fraction(alpha * g - 2) <= bracket:
            for h in range(0, int(bracket - alpha * g + 2) + 1):
                if h > 0 and period % 2 != 0:
                    continue
                rest = bracket - (alpha * g - 2 + h)
                if rest < 0:
                    break
                if orientable and h == 0 and covering_chi % 2 != 0:
                    # A closed orientable orbifold is only covered by
                    # orientable surfaces, which all have even chi.
                    continue
                for branches in _branch_multisets(rest, period):
                    sig = OrbifoldSignature(orientable, g, h, branches)
                    if epi_count(sig, period) > 0:
                        found.append(sig)
            g += 1
    return sorted(set(found), key=OrbifoldSignature.sort_key)


def build_census(covering: SurfaceClass, n_edges: int) -> list[CensusRow]:
    """Census rows for every period up to the bound for this surface.

    Rows carry the total epimorphism count and the sub-count of epimorphisms
    whose covering surface is orientable (zero automatically when the
    covering characteristic is odd).
    """
    chi = covering.euler_characteristic
    rows = []
    for period in range(1, period_bound(covering, n_edges) + 1):
        for sig in generate_signatures(chi, period):
            epi = epi_count(sig, period)
            if epi <= 0:
                continue
            plus = epi_count(sig, period, sign_preserving=True)
            rows.append(CensusRow(chi, period, sig, epi, plus))
    return rows


def census_to_json(rows: list[CensusRow]) -> str:
    return json.dumps([row.as_dict() for row in rows], indent=2)


def census_to_csv(rows: list[CensusRow]) -> str:
    lines = ["covering_chi,l,orientable,chi_orbifold,h,branch_indices,epi,epi_plus"]
    for row in rows:
        d = row.as_dict()
        branches = " ".join(str(m) for m in d["branch_indices"])
        lines.append(
            f"{d['covering_chi']},{d['l']},{d['orientable']},{d['chi_orbifold']},"
            f"{d['h']},[{branches}],{d['epi']},{d['epi_plus']}"
        )
    return "\n".join(lines) + "\n"
