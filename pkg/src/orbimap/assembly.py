"""Burnside assembly: sensed and unsensed map counts from orbifold data.

The master formulas average rooted quotient-map counts over all cyclic
symmetry types, weighted by epimorphism counts.  All divisions here must be
exact; a remainder means a bug upstream, and raises ``ExactnessError``.
"""

from __future__ import annotations

from .census import generate_signatures, period_bound
from .epimorphisms import epi_count
from .quotient_dp import tau_closed
from .surfaces import OrbifoldSignature, SurfaceClass


class ExactnessError(ArithmeticError):
    """An averaging step failed to divide exactly."""


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ExactnessError(f"{what}: {num} not divisible by {den}")
    return q


def tau_orbifold(sig: OrbifoldSignature, m_darts: int, cache=None) -> int:
    """Rooted quotient maps with m darts (2m flags) on the orbifold."""
    if sig.is_closed:
        return tau_closed(sig, m_darts)
    from .bordered_dp import tau_bordered

    return tau_bordered(sig, m_darts, cache)


def sensed_count(surface: SurfaceClass, n_edges: int) -> int:
    """Sensed maps with n edges on a closed orientable surface.

    Averages over the orientation-preserving symmetries: periods l dividing
    2n, closed orientable quotient orbifolds, quotient maps with 2n/l darts.
    """
    if not surface.orientable:
        raise ValueError("sensed counting needs an orientable surface")
    if n_edges < 1:
        raise ValueError("n_edges must be >= 1")
    chi = surface.euler_characteristic
    bound = period_bound(surface, n_edges)
    total = 0
    for period in range(1, min(bound, 2 * n_edges) + 1):
        if (2 * n_edges) % period != 0:
            continue
        m_darts = 2 * n_edges // period
        for sig in generate_signatures(chi, period):
            if not (sig.orientable and sig.is_closed):
                continue
            weight = epi_count(sig, period)
            if weight:
                total += weight * tau_orbifold(sig, m_darts)
    return _exact_div(total, 2 * n_edges, f"sensed count on {surface} with {n_edges} edges")
