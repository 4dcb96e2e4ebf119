"""Memoized counting of rooted decorated maps by root-edge contraction.

This module is the computational core: it counts flag-rooted maps on closed
surfaces (orientable mode, or combined "all surfaces" mode in the style of
Gao's locally orientable enumeration), decorated with

* a root vertex of tracked degree,
* a multiset of distinguished interior vertices with tracked degrees
  (created when a loop wrapping a handle is contracted),
* a count of dangling semiedges (one-dart edges whose free end will be
  matched with an index-2 branch point).

The recursion follows the fate of the root edge.  Every case below was
derived as an explicit bijection between rooted parent maps and rooted child
maps (with the creation of an indistinguishable mark contributing the usual
multiplicity factor), and the whole table is validated against exhaustive
flag-model enumeration in the test suite.

Counts are of (map, root flag) isomorphism classes.  On orientable surfaces
this equals the classical rooted-map count.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

ORIENTABLE = "orientable"
ALL_SURFACES = "all"


def _mark_splits(marks: tuple[int, ...]):
    """All ways to split a sorted degree multiset into two sorted halves."""
    distinct: list[tuple[int, int]] = []
    for d in marks:
        if distinct and distinct[-1][0] == d:
            distinct[-1] = (d, distinct[-1][1] + 1)
        else:
            distinct.append((d, 1))
    for take in product(*(range(c + 1) for _, c in distinct)):
        left: list[int] = []
        right: list[int] = []
        for (d, c), t in zip(distinct, take):
            left.extend([d] * t)
            right.extend([d] * (c - t))
        yield tuple(left), tuple(right)


def _with_mark(marks: tuple[int, ...], degree: int) -> tuple[int, ...]:
    return tuple(sorted(marks + (degree,)))


def _without_mark(marks: tuple[int, ...], degree: int) -> tuple[int, ...]:
    out = list(marks)
    out.remove(degree)
    return tuple(out)


@lru_cache(maxsize=None)
def closed_rooted(mode: str, eps: int, n: int, k: int, marks: tuple[int, ...] = (), semi: int = 0) -> int:
    """Rooted decorated maps on closed surfaces.

    ``eps`` is the number of handles in orientable mode and the Euler genus
    (cross-cap count, a handle counting two) in combined mode.  ``n`` is the
    dart total, ``k`` the root degree, ``marks`` the distinguished interior
    vertex degrees and ``semi`` the number of dangling semiedges.
    """
    if eps < 0 or n < 0 or k < 0 or semi < 0:
        return 0
    if k > n or semi > n:
        return 0
    if k + sum(marks) > n:
        return 0
    if any(d < 1 for d in marks):
        return 0
    if n == 0:
        return 1 if (eps == 0 and k == 0 and not marks and semi == 0) else 0
    if k == 0:
        return 0  # the root vertex would be isolated

    total = 0

    # Root dart is a semiedge: erase it.
    if semi >= 1:
        total += closed_rooted(mode, eps, n - 1, k - 1, marks, semi - 1)

    # Root edge joins the root to an ordinary vertex of degree j >= 1.
    for big_k in range(k - 1, n - 1):
        total += closed_rooted(mode, eps, n - 2, big_k, marks, semi)

    # Root edge joins the root to a distinguished vertex: the mark is used up.
    for j in set(marks):
        total += closed_rooted(mode, eps, n - 2, k + j - 2, _without_mark(marks, j), semi)

    # Root edge is a loop whose contraction splits the map in two.  The side
    # of the root flag makes the pair ordered, and each part keeps one of the
    # two flags of the contracted dart as its root.
    for n1 in range(0, n - 1):
        for k1 in range(0, k - 1):
            for e1 in range(0, eps + 1):
                for m1, m2 in _mark_splits(marks):
                    for s1 in range(0, semi + 1):
                        a = closed_rooted(mode, e1, n1, k1, m1, s1)
                        if not a:
                            continue
                        b = closed_rooted(mode, eps - e1, n - 2 - n1, k - 2 - k1, m2, semi - s1)
                        if b:
                            total += a * b

    # Root edge is a two-sided loop around a handle: the genus drops and the
    # root vertex splits into the new root and a fresh distinguished vertex.
    # Re-attaching the handle may cut the mark's cyclic fan in j places (and,
    # off orientable surfaces, glue with either twist), and the new mark is
    # interchangeable with any same-degree mark of the child.
    handle_drop = 1 if mode == ORIENTABLE else 2
    glue_ways = 1 if mode == ORIENTABLE else 2
    if eps >= handle_drop:
        for j in range(1, k - 2 + 1):
            child_marks = _with_mark(marks, j)
            mult = child_marks.count(j)
            total += glue_ways * j * mult * closed_rooted(
                mode, eps - handle_drop, n - 2, k - 2 - j, child_marks, semi
            )

    # Root edge is a one-sided loop (combined mode only): cutting along it,
    # flipping one side and regluing removes one cross-cap.  Reinserting the
    # twisted loop can interleave the remaining fan in k-1 ways.
    if mode == ALL_SURFACES and eps >= 1 and k >= 2:
        total += (k - 1) * closed_rooted(mode, eps - 1, n - 2, k - 2, marks, semi)

    return total


def closed_rooted_total(mode: str, eps: int, n: int, semi: int = 0) -> int:
    """Rooted maps with any root degree (no decoration marks)."""
    return sum(closed_rooted(mode, eps, n, k, (), semi) for k in range(0, n + 1))


def nonorientable_rooted(eps: int, n: int, k: int, semi: int = 0) -> int:
    """Rooted maps on the non-orientable surface with ``eps`` cross-caps."""
    combined = closed_rooted(ALL_SURFACES, eps, n, k, (), semi)
    if eps % 2 == 0:
        combined -= closed_rooted(ORIENTABLE, eps // 2, n, k, (), semi)
    return combined


def place_branch_points(counts_by_cells: dict[tuple[int, int], int], branch_indices: tuple[int, ...]) -> int:
    """Weight map counts by the number of admissible branch-point layouts.

    ``counts_by_cells`` maps (interior cell count, semiedge count) to a map
    count.  Every semiedge end must absorb one index-2 branch point, and each
    remaining branch point occupies its own interior cell (a face can carry
    at most one: its lift must stay a disk, and a cyclic stabilizer of a disk
    fixes at most one interior point).  Branch points of equal index are
    interchangeable, so layouts differing only by such a swap count once.
    """
    total = 0
    for (cells, semi), count in counts_by_cells.items():
        if count == 0:
            continue
        total += count * placement_ways(cells, semi, branch_indices)
    return total


def tau_closed(sig, m_darts: int) -> int:
    """Rooted quotient maps with m darts on a closed orbifold signature.

    Maps on the underlying surface are counted stratified by semiedge count;
    the interior cell count (vertices plus faces) follows from the Euler
    characteristic, and branch points are distributed by ``placement_ways``.
    """
    if m_darts < 1:
        raise ValueError("need at least one dart")
    if not sig.is_closed:
        raise ValueError("tau_closed expects a closed signature")
    eps = sig.euler_genus
    chi = 2 - eps
    twos = sum(1 for m in sig.branch_indices if m == 2)
    total = 0
    for semi in range(0, min(m_darts, twos) + 1):
        if (m_darts - semi) % 2 != 0:
            continue
        cells = chi + (m_darts - semi) // 2
        layouts = placement_ways(cells, semi, sig.branch_indices)
        if layouts == 0:
            continue
        if sig.orientable:
            count = sum(closed_rooted(ORIENTABLE, sig.genus, m_darts, k, (), semi) for k in range(1, m_darts + 1))
        else:
            count = sum(nonorientable_rooted(sig.genus, m_darts, k, semi) for k in range(1, m_darts + 1))
        total += count * layouts
    return total


def placement_ways(cells: int, semi: int, branch_indices: tuple[int, ...]) -> int:
    """Layouts of the branch multiset over semiedge ends plus interior cells."""
    twos = sum(1 for m in branch_indices if m == 2)
    if semi > twos or cells < 0:
        return 0
    rest = list(branch_indices)
    for _ in range(semi):
        rest.remove(2)
    r = len(rest)
    if r > cells:
        return 0
    ways = 1
    free = cells
    for _ in range(r):
        ways *= free
        free -= 1
    for value in set(rest):
        mult = rest.count(value)
        for i in range(2, mult + 1):
            ways //= i
        # division is exact: same-index points are unordered
    return ways
