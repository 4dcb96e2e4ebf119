"""Exhaustive enumeration of closed-surface maps in the flag model.

A map with e full edges and s dangling semiedges is encoded on 4e + 2s flags.
Each full edge owns four flags wired so that xor 1 swaps the two sides of the
edge and xor 2 swaps its two end vertices.  A semiedge owns two flags on
which both swaps coincide (walking past the dangling end returns on the other
side).  The embedding itself is a free choice of a fixed-point-free corner
involution t1 on all flags; vertices are orbits of <t1, side>, faces orbits
of <end, t1>.  Transitive systems are exactly the connected maps, and every
such system is a map on a unique closed surface.

Isomorphism, automorphism counting and canonical forms use breadth-first
relabelling codes, which is cheap at the sizes this oracle is meant for
(a handful of edges).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class SizeLimitError(ValueError):
    """Raised when an enumeration request exceeds the supported size."""


def _edge_involutions(num_full: int, num_semi: int) -> tuple[list[int], list[int]]:
    """Side-swap and end-swap involutions for the standard flag labelling."""
    total = 4 * num_full + 2 * num_semi
    side = [0] * total
    end = [0] * total
    for e in range(num_full):
        base = 4 * e
        for f in range(base, base + 4):
            side[f] = f ^ 1
            end[f] = f ^ 2
    for sdx in range(num_semi):
        base = 4 * num_full + 2 * sdx
        side[base], side[base + 1] = base + 1, base
        end[base], end[base + 1] = base + 1, base
    return side, end


def _pairings(flags: list[int]):
    """All fixed-point-free involutions of the given flag list."""
    if not flags:
        yield []
        return
    first, rest = flags[0], flags[1:]
    for i, other in enumerate(rest):
        pair = (first, other)
        for sub in _pairings(rest[:i] + rest[i + 1 :]):
            yield [pair] + sub


def _orbit_count(n: int, perms: list[list[int]]) -> int:
    seen = [False] * n
    count = 0
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        stack = [start]
        seen[start] = True
        while stack:
            f = stack.pop()
            for p in perms:
                g = p[f]
                if not seen[g]:
                    seen[g] = True
                    stack.append(g)
    return count


def _is_transitive(n: int, perms: list[list[int]]) -> bool:
    return _orbit_count(n, perms) == 1


def _is_bipartite(n: int, perms: list[list[int]]) -> bool:
    color = [-1] * n
    for start in range(n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            f = stack.pop()
            for p in perms:
                g = p[f]
                if color[g] < 0:
                    color[g] = 1 - color[f]
                    stack.append(g)
                elif color[g] == color[f]:
                    return False
    return True


def _bfs_code(n: int, perms: list[list[int]], start: int) -> tuple[int, ...]:
    """Relabelling-invariant code of the system seen from one root flag."""
    label = [-1] * n
    order = [start]
    label[start] = 0
    nxt = 1
    code = []
    idx = 0
    while idx < len(order):
        f = order[idx]
        idx += 1
        for p in perms:
            g = p[f]
            if label[g] < 0:
                label[g] = nxt
                nxt += 1
                order.append(g)
            code.append(label[g])
    return tuple(code)


@dataclass(frozen=True)
class FlagSystem:
    """One connected map up to isomorphism, with its surface invariants."""

    n_darts: int
    full_edges: int
    semiedges: int
    vertices: int
    faces: int
    chi: int
    orientable: bool
    genus: int
    aut: int
    aut_plus: int | None  # orientation-preserving automorphisms, orientable only
    canon: tuple[int, ...]
    degree_flags: tuple[tuple[int, int], ...]  # (vertex degree, #flags at such vertices)

    @property
    def achiral(self) -> bool:
        if not self.orientable:
            raise ValueError("chirality only makes sense on orientable surfaces")
        return self.aut == 2 * self.aut_plus

    @property
    def rooted_count(self) -> int:
        """Number of distinct flag rootings: 2 * darts / |Aut|."""
        return (2 * self.n_darts) // self.aut


def _analyze(num_full: int, num_semi: int, t1: list[int]) -> FlagSystem:
    side, end = _edge_involutions(num_full, num_semi)
    n = len(t1)
    perms = [end, t1, side]
    vertices = _orbit_count(n, [t1, side])
    faces = _orbit_count(n, [end, t1])
    chi = vertices - num_full + faces
    orientable = _is_bipartite(n, perms)
    genus = (2 - chi) // 2 if orientable else 2 - chi

    codes = [_bfs_code(n, perms, f) for f in range(n)]
    canon = min(codes)
    ref = codes[0]
    aut = sum(1 for c in codes if c == ref)
    aut_plus = None
    if orientable:
        color = [-1] * n
        color[0] = 0
        stack = [0]
        while stack:
            f = stack.pop()
            for p in perms:
                if color[p[f]] < 0:
                    color[p[f]] = 1 - color[f]
                    stack.append(p[f])
        aut_plus = sum(1 for f, c in enumerate(codes) if c == ref and color[f] == color[0])

    # Vertex degrees: each vertex orbit holds 2 * degree flags.
    seen = [False] * n
    degree_of_flag = [0] * n
    for start in range(n):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        stack = [start]
        while stack:
            f = stack.pop()
            for p in (t1, side):
                g = p[f]
                if not seen[g]:
                    seen[g] = True
                    orbit.append(g)
                    stack.append(g)
        deg = len(orbit) // 2
        for f in orbit:
            degree_of_flag[f] = deg
    per_degree: dict[int, int] = {}
    for f in range(n):
        per_degree[degree_of_flag[f]] = per_degree.get(degree_of_flag[f], 0) + 1

    return FlagSystem(
        n_darts=2 * num_full + num_semi,
        full_edges=num_full,
        semiedges=num_semi,
        vertices=vertices,
        faces=faces,
        chi=chi,
        orientable=orientable,
        genus=genus,
        aut=aut,
        aut_plus=aut_plus,
        canon=canon,
        degree_flags=tuple(sorted(per_degree.items())),
    )


@lru_cache(maxsize=None)
def enumerate_flag_maps(num_full: int, num_semi: int) -> tuple[FlagSystem, ...]:
    """All connected maps with the given edge mix, up to isomorphism."""
    total = 4 * num_full + 2 * num_semi
    if total == 0:
        return ()
    if total > 20:
        raise SizeLimitError(f"{num_full} edges + {num_semi} semiedges is past the supported size")
    side, end = _edge_involutions(num_full, num_semi)
    found: dict[tuple[int, ...], FlagSystem] = {}
    for pairs in _pairings(list(range(total))):
        t1 = [0] * total
        for a, b in pairs:
            t1[a], t1[b] = b, a
        if not _is_transitive(total, [end, t1, side]):
            continue
        system = _analyze(num_full, num_semi, t1)
        found.setdefault(system.canon, system)
    return tuple(found.values())


@lru_cache(maxsize=None)
def enumerate_maps(n_edges: int, allow_semiedges: bool = False) -> tuple[FlagSystem, ...]:
    """All connected maps with n_edges edges (each counting 2 darts).

    With ``allow_semiedges`` the enumeration instead covers all edge mixes
    with the same dart total 2*n_edges, which is the shape quotient maps take.
    """
    if n_edges < 1 or n_edges > 4:
        raise SizeLimitError("brute-force enumeration supports 1..4 edges")
    if not allow_semiedges:
        return enumerate_flag_maps(n_edges, 0)
    out: list[FlagSystem] = []
    darts = 2 * n_edges
    for semi in range(0, darts + 1):
        if (darts - semi) % 2 == 0:
            out.extend(enumerate_flag_maps((darts - semi) // 2, semi))
    return tuple(out)
