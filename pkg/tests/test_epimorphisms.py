import pytest

from orbimap.epimorphisms import (
    UnsupportedSignature,
    epi_count,
    epi_count_closed_form,
    epi_count_oracle,
    hom_count_closed_form,
    hom_count_oracle,
)
from orbimap.numtheory import divisors
from orbimap.surfaces import OrbifoldSignature


def sig(orientable, g, h, branches=()):
    return OrbifoldSignature(orientable, g, h, tuple(branches))


def test_hom_closed_form_examples():
    assert hom_count_closed_form(sig(True, 0, 2), 2) == 2
    assert hom_count_closed_form(sig(True, 0, 1, [2]), 2) == 1
    assert hom_count_closed_form(sig(False, 2, 0), 3) == 3


def test_hom_closed_form_rejects_closed_orientable():
    with pytest.raises(UnsupportedSignature):
        hom_count_closed_form(sig(True, 1, 0), 2)


def test_oracle_torus_group():
    for d in range(1, 13):
        assert hom_count_oracle(sig(True, 1, 0), d) == d * d


def test_oracle_exact_order_triples():
    # Triples of residues with exact orders (2, 4, 4) summing to 0 mod 4:
    # (2,1,1) and (2,3,3), so two homomorphisms.
    brute = 0
    def order(r):
        k = 1
        acc = r % 4
        while acc:
            acc = (acc + r) % 4
            k += 1
        return k
    for r1 in range(4):
        for r2 in range(4):
            for r3 in range(4):
                if order(r1) == 2 and order(r2) == 4 and order(r3) == 4 and (r1 + r2 + r3) % 4 == 0:
                    brute += 1
    assert brute == 2
    assert hom_count_oracle(sig(True, 0, 0, [2, 4, 4]), 4) == brute


def test_oracle_agrees_with_closed_form_everywhere():
    signatures = [
        sig(True, 0, 1), sig(True, 0, 2), sig(True, 0, 3),
        sig(True, 1, 1), sig(True, 0, 1, [2]), sig(True, 0, 1, [2, 2]),
        sig(True, 0, 1, [2, 4]), sig(True, 0, 2, [3]), sig(True, 0, 1, [3, 3]),
        sig(False, 1, 0), sig(False, 2, 0), sig(False, 3, 0), sig(False, 4, 0),
        sig(False, 1, 1), sig(False, 2, 1), sig(False, 1, 2),
        sig(False, 1, 0, [2, 2]), sig(False, 2, 0, [2]), sig(False, 1, 0, [3, 3]),
        sig(False, 1, 0, [2, 4]), sig(False, 1, 1, [2]), sig(False, 1, 0, [2, 2, 2]),
        sig(False, 2, 0, [2, 2]), sig(False, 1, 1, [3]),
    ]
    for s in signatures:
        for d in divisors(24):
            for plus in (False, True):
                assert hom_count_oracle(s, d, plus) == hom_count_closed_form(s, d, plus), (s, d, plus)


def test_epi_examples():
    assert epi_count(sig(True, 0, 2), 2) == 2
    assert epi_count(sig(False, 2, 0), 2) == 3
    assert epi_count(sig(False, 2, 0), 4, sign_preserving=True) == 4


def test_epi_closed_form_examples():
    assert epi_count_closed_form(sig(True, 0, 1, [2]), 2) == 1
    assert epi_count_closed_form(sig(False, 2, 0), 3) == 2
    assert epi_count_closed_form(sig(False, 2, 0), 5) == 4


def test_epi_plus_zero_for_odd_targets():
    assert epi_count(sig(False, 2, 0), 3, sign_preserving=True) == 0
    assert epi_count_closed_form(sig(False, 2, 0), 3, sign_preserving=True) == 0


def test_epi_trivial_target():
    # Only the trivial signature of the covering itself maps onto Z_1.
    assert epi_count(sig(False, 3, 0), 1) == 1
    assert epi_count(sig(True, 2, 0), 1) == 1
    assert epi_count(sig(True, 0, 1, [2]), 1) == 0


def test_epi_zero_when_branch_index_misses_period():
    assert epi_count(sig(False, 1, 0, [3, 3]), 4) == 0


def test_epi_plus_at_most_epi():
    signatures = [
        sig(True, 0, 2), sig(False, 2, 0), sig(False, 3, 0), sig(True, 1, 1),
        sig(False, 1, 0, [2, 2]), sig(True, 0, 1, [2, 2]), sig(False, 2, 0, [2]),
    ]
    for s in signatures:
        for l in range(1, 13):
            assert epi_count(s, l, True) <= epi_count(s, l)


def test_closed_form_equals_oracle_moebius():
    # Same family of signatures as the hom test, now at the epimorphism level.
    signatures = [
        sig(True, 0, 1), sig(True, 0, 2), sig(True, 0, 3), sig(True, 1, 1),
        sig(True, 0, 1, [2]), sig(True, 0, 1, [2, 4]), sig(True, 0, 1, [3, 3]),
        sig(False, 1, 0), sig(False, 2, 0), sig(False, 3, 0), sig(False, 4, 0),
        sig(False, 1, 1), sig(False, 2, 1), sig(False, 1, 2),
        sig(False, 1, 0, [2, 2]), sig(False, 2, 0, [2]), sig(False, 1, 0, [3, 3]),
        sig(False, 1, 0, [2, 4]), sig(False, 1, 0, [2, 2, 2]), sig(False, 2, 0, [4]),
        sig(False, 1, 0, [2, 2, 2, 2, 2]), sig(False, 1, 0, [2, 2, 4]), sig(False, 1, 0, [2, 8]),
    ]
    for s in signatures:
        for l in range(1, 17):
            for plus in (False, True):
                assert epi_count_closed_form(s, l, plus) == epi_count_oracle(s, l, plus), (s, l, plus)
