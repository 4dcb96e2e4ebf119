import pytest

from orbimap.census import (
    build_census,
    census_to_csv,
    generate_signatures,
    period_bound,
    riemann_hurwitz_holds,
)
from orbimap.surfaces import OrbifoldSignature, SurfaceClass
from table1_golden import ROWS_CHI_0, ROWS_CHI_1, ROWS_CHI_MINUS_1, ROWS_CHI_MINUS_2


def sig(orientable, g, h, branches=()):
    return OrbifoldSignature(orientable, g, h, tuple(branches))


def test_riemann_hurwitz_examples():
    assert riemann_hurwitz_holds(0, 4, sig(True, 0, 0, [2, 4, 4]))
    assert riemann_hurwitz_holds(0, 1, sig(True, 1, 0))
    assert riemann_hurwitz_holds(0, 4, sig(False, 1, 1))
    # O(0;[2,4,4]) has orbifold characteristic 0, so it pairs with chi=0 for
    # every period; a sphere quotient does not.
    assert riemann_hurwitz_holds(0, 3, sig(True, 0, 0, [2, 4, 4]))
    assert not riemann_hurwitz_holds(0, 2, sig(True, 0, 0))


def test_period_bounds():
    assert period_bound(SurfaceClass(True, 2), 5) == 12
    assert period_bound(SurfaceClass(True, 3), 5) == 8
    assert period_bound(SurfaceClass(True, 4), 5) == 20
    assert period_bound(SurfaceClass(True, 1), 5) == 10
    assert period_bound(SurfaceClass(True, 0), 3) == 6
    assert period_bound(SurfaceClass(False, 1), 4) == 8
    assert period_bound(SurfaceClass(False, 2), 4) == 8
    assert period_bound(SurfaceClass(False, 3), 9) == 6
    assert period_bound(SurfaceClass(False, 4), 9) == 6
    assert period_bound(SurfaceClass(False, 5), 9) == 10


def test_generate_signatures_small():
    assert generate_signatures(0, 1) == [sig(True, 1, 0), sig(False, 2, 0)]
    assert generate_signatures(1, 2) == [sig(True, 0, 1, [2])]
    got = generate_signatures(0, 4)
    assert sig(True, 0, 2) in got
    assert sig(False, 2, 0) in got
    assert sig(False, 1, 1) in got


def _census_rows(chi_to_surface, n_edges):
    rows = build_census(chi_to_surface, n_edges)
    return {
        (r.covering_chi, r.period, "+" if r.signature.orientable else "-",
         r.signature.underlying_chi, r.signature.boundary, r.signature.branch_indices):
        (r.epi, r.epi_plus)
        for r in rows
    }


def _nonplus_subset(rowmap):
    """Restrict to non-orientable-or-bordered signatures (the published rows)."""
    return {k: v for k, v in rowmap.items() if not (k[2] == "+" and k[4] == 0)}


@pytest.mark.parametrize(
    "surface,n_edges,golden,complete",
    [
        (SurfaceClass(False, 1), 6, ROWS_CHI_1, False),
        (SurfaceClass(True, 1), 6, ROWS_CHI_0, False),
        (SurfaceClass(False, 3), 6, ROWS_CHI_MINUS_1, True),
        (SurfaceClass(True, 2), 6, ROWS_CHI_MINUS_2, True),
    ],
)
def test_census_against_reference(surface, n_edges, golden, complete):
    rows = _census_rows(surface, n_edges)
    for chi, l, ori, chi_orb, h, branches, epi, epi_plus in golden:
        key = (chi, l, ori, chi_orb, h, tuple(branches))
        assert key in rows, f"missing census row {key}"
        assert rows[key] == (epi, epi_plus), f"row {key}: got {rows[key]}"
    if complete:
        got = _nonplus_subset(rows)
        want = {
            (chi, l, ori, chi_orb, h, tuple(branches))
            for chi, l, ori, chi_orb, h, branches, _, _ in golden
        }
        assert set(got) == want


def test_census_rows_all_satisfy_rh():
    for surface in (SurfaceClass(True, 2), SurfaceClass(False, 3)):
        for row in build_census(surface, 4):
            assert riemann_hurwitz_holds(row.covering_chi, row.period, row.signature)
            assert row.epi > 0
            assert 0 <= row.epi_plus <= row.epi


def test_census_odd_chi_has_zero_epi_plus():
    for surface in (SurfaceClass(False, 1), SurfaceClass(False, 3)):
        for row in build_census(surface, 5):
            assert row.epi_plus == 0


def test_period_one_row_is_covering_surface():
    for surface in (SurfaceClass(True, 2), SurfaceClass(False, 4), SurfaceClass(True, 1)):
        rows = [r for r in build_census(surface, 3) if r.period == 1]
        chis = {r.signature.underlying_chi for r in rows}
        assert chis == {surface.euler_characteristic}
        for r in rows:
            assert r.epi == 1
            assert not r.signature.branch_indices
            assert r.signature.boundary == 0


def test_census_deterministic_and_csv():
    a = build_census(SurfaceClass(True, 1), 4)
    b = build_census(SurfaceClass(True, 1), 4)
    assert a == b
    text = census_to_csv(a)
    assert text.splitlines()[0].startswith("covering_chi,")
    assert len(text.splitlines()) == len(a) + 1
