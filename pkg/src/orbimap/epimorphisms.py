"""Counting order-preserving (epi)morphisms from orbifold fundamental groups
onto cyclic groups.

Two independent routes are provided:

* ``hom_count_oracle`` counts homomorphisms directly, by dynamic programming
  over residues of the abelianized defining relations.  It covers every
  signature, including closed orientable ones.
* ``hom_count_closed_form`` / ``epi_count_closed_form`` evaluate the product
  formulas (phi / Jordan-totient expressions) that exist for bordered and for
  closed non-orientable signatures.

``epi_count`` is the production entry point: Moebius inversion over homomorphism
counts, with the closed forms used where they exist and the oracle elsewhere.

Sign conventions: the elements of the cyclic group Z_N (N even) are signed by
parity.  Generators of the fundamental group carry sign -1 exactly when they
reverse orientation: boundary reflections always, cross-cap generators on
non-orientable orbifolds.  A sign-preserving homomorphism matches those signs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import prod

from .numtheory import divisors, euler_phi, jordan_totient, lcm_list, moebius_mu
from .surfaces import OrbifoldSignature


class UnsupportedSignature(ValueError):
    """Raised when a closed-form is requested outside its domain."""


def _order_m_residues(m: int, n: int) -> list[int]:
    """Residues of exact order m in Z_n (empty unless m divides n)."""
    if n % m != 0:
        return []
    step = n // m
    return [step * t for t in range(m) if _gcd(t, m) == 1]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def hom_count_oracle(sig: OrbifoldSignature, target_order: int, sign_preserving: bool = False) -> int:
    """Count homomorphisms from the orbifold group to Z_target_order directly.

    The group is abelianized on the fly (the target is abelian), which turns
    the defining relations into one linear congruence over Z_N plus exact-order
    conditions on the torsion generators.  Counting is a convolution over
    residue classes; N here never exceeds a few dozen.
    """
    n = target_order
    if n < 1:
        raise ValueError("target order must be >= 1")

    # An odd cyclic group carries only the trivial sign structure, so it
    # admits no sign-preserving homomorphism once any generator reverses
    # orientation (reflections or cross-caps).
    if sign_preserving and n % 2 != 0 and (sig.boundary > 0 or not sig.orientable):
        return 0
    parity_matters = sign_preserving and n % 2 == 0

    def allowed(residues, want_odd):
        if not parity_matters:
            return list(residues)
        want = 1 if want_odd else 0
        return [r for r in residues if r % 2 == want]

    # Reflections c_j: one per boundary component, order exactly 2, sign -1,
    # absent from the long relation.
    c_ways = 1
    if sig.boundary > 0:
        c_choices = allowed(_order_m_residues(2, n), want_odd=True)
        c_ways = len(c_choices) ** sig.boundary
        if c_ways == 0:
            return 0

    # Distribution of the long-relation sum over Z_n.
    dist = [0] * n
    dist[0] = 1

    def convolve(residues, weight, copies):
        nonlocal dist
        for _ in range(copies):
            new = [0] * n
            for acc, ways in enumerate(dist):
                if not ways:
                    continue
                for r in residues:
                    new[(acc + weight * r) % n] += ways
            dist = new

    for m in sig.branch_indices:
        choices = allowed(_order_m_residues(m, n), want_odd=False)
        if not choices:
            return 0
        convolve(choices, 1, 1)

    free = allowed(range(n), want_odd=False)
    convolve(free, 1, sig.boundary)  # e_j, one per boundary component

    if sig.orientable:
        # Handle generators a_k, b_k vanish from the abelianized relation.
        ab = allowed(range(n), want_odd=False)
        side_ways = len(ab) ** (2 * sig.genus)
    else:
        # Cross-cap generators contribute twice their image to the relation.
        a_choices = allowed(range(n), want_odd=True)
        if sig.genus > 0 and not a_choices:
            return 0
        convolve(a_choices, 2, sig.genus)
        side_ways = 1

    return dist[0] * c_ways * side_ways


def hom_count_closed_form(sig: OrbifoldSignature, target_order: int, sign_preserving: bool = False) -> int:
    """Product formulas for homomorphism counts.

    Defined for bordered signatures (either orientability) and for closed
    non-orientable ones.  Closed orientable signatures have no such product
    form here and are served by the oracle.
    """
    n = target_order
    if n < 1:
        raise ValueError("target order must be >= 1")
    if sig.orientable and sig.is_closed:
        raise UnsupportedSignature("closed orientable signatures use the residue oracle")

    phis = prod(euler_phi(m) for m in sig.branch_indices)

    if sig.boundary > 0:
        exponent = (2 * sig.genus if sig.orientable else sig.genus) + sig.boundary - 1
        if not sign_preserving:
            # Reflections force an order-2 image, so the target must be even.
            if n % 2 != 0 or any(n % m for m in sig.branch_indices):
                return 0
            return n**exponent * phis
        # Sign-preserving: target Z_{2d} with d odd; torsion images are even.
        if n % 2 != 0:
            return 0
        d = n // 2
        if d % 2 == 0 or any(d % m for m in sig.branch_indices):
            return 0
        return d**exponent * phis

    # Closed non-orientable surface with cross-caps.
    g = sig.genus
    if not sign_preserving:
        if any(n % m for m in sig.branch_indices):
            return 0
        if n % 2 == 1:
            return n ** (g - 1) * phis
        # Even target: solvable only when the torsion images sum to an even
        # residue, which happens iff sum(n/m_i) is even; then two solutions.
        if sum(n // m for m in sig.branch_indices) % 2 != 0:
            return 0
        return 2 * n ** (g - 1) * phis
    # Sign-preserving into Z_{2d}: cross-cap images odd, torsion images even.
    if n % 2 != 0:
        return 0
    d = n // 2
    if any(d % m for m in sig.branch_indices):
        return 0
    if d % 2 == 1:
        return d ** (g - 1) * phis
    if sum(d // m for m in sig.branch_indices) % 2 != g % 2:
        return 0
    return 2 * d ** (g - 1) * phis


def hom_count(sig: OrbifoldSignature, target_order: int, sign_preserving: bool = False) -> int:
    """Homomorphism count: closed form where available, oracle otherwise."""
    if sig.orientable and sig.is_closed:
        return _hom_closed_orientable(sig, target_order, sign_preserving)
    return hom_count_closed_form(sig, target_order, sign_preserving)


@lru_cache(maxsize=None)
def _hom_closed_orientable(sig: OrbifoldSignature, target_order: int, sign_preserving: bool) -> int:
    return hom_count_oracle(sig, target_order, sign_preserving)


def epi_count(sig: OrbifoldSignature, target_order: int, sign_preserving: bool = False) -> int:
    """Exact count of order-preserving epimorphisms onto Z_target_order.

    With ``sign_preserving`` the count is of epimorphisms that also respect
    the parity sign structure of an even cyclic group; it is 0 for odd target
    orders.  For closed orientable signatures every covering is orientation
    compatible, so the sign-preserving count equals the plain one.
    """
    return _epi_count_with(hom_count, sig, target_order, sign_preserving)


def epi_count_oracle(sig: OrbifoldSignature, target_order: int, sign_preserving: bool = False) -> int:
    """Epimorphism count computed purely through the residue oracle."""
    return _epi_count_with(hom_count_oracle, sig, target_order, sign_preserving)


def _epi_count_with(hom, sig: OrbifoldSignature, target_order: int, sign_preserving: bool) -> int:
    l = target_order
    if l < 1:
        raise ValueError("target order must be >= 1")
    if not sign_preserving:
        total = sum(moebius_mu(l // d) * hom(sig, d, False) for d in divisors(l))
    elif sig.orientable and sig.is_closed:
        # Trivial sign structure: every epimorphism is orientation compatible.
        total = sum(moebius_mu(l // d) * hom(sig, d, False) for d in divisors(l))
    else:
        if l % 2 != 0:
            return 0
        half = l // 2
        total = sum(
            moebius_mu(half // d) * hom(sig, 2 * d, True)
            for d in divisors(half)
            if (half // d) % 2 == 1
        )
    if total < 0:
        raise ArithmeticError(f"negative epimorphism count for {sig} -> Z_{l}")
    return total


def _two_adic(m: int) -> tuple[int, int]:
    """Split m = 2**v * odd and return (v, odd)."""
    v = 0
    while m % 2 == 0:
        v += 1
        m //= 2
    return v, m


def epi_count_closed_form(sig: OrbifoldSignature, target_order: int, sign_preserving: bool = False) -> int:
    """Closed-form epimorphism counts (Jordan-totient expressions).

    Available for bordered signatures and closed non-orientable ones.  A zero
    is returned whenever the Jordan totient would be taken at a non-integral
    argument, and all parity side conditions are checked explicitly.
    """
    l = target_order
    if l < 1:
        raise ValueError("target order must be >= 1")
    if sig.orientable and sig.is_closed:
        raise UnsupportedSignature("closed orientable signatures have no closed form here")

    phis = prod(euler_phi(m) for m in sig.branch_indices)
    ms = sig.branch_indices

    def jord(exp: int, num: int, den: int) -> int:
        if num % den != 0:
            return 0
        return jordan_totient(exp, num // den)

    if sig.boundary > 0:
        t = (2 * sig.genus if sig.orientable else sig.genus) + sig.boundary - 1
        if not sign_preserving:
            if l % 2 != 0:
                return 0
            m_even = lcm_list((2, *ms))
            return m_even**t * jord(t, l, m_even) * phis
        if l % 2 != 0:
            return 0
        half = l // 2
        if half % 2 == 0:
            return 0
        m_all = lcm_list(ms)
        return m_all**t * jord(t, half, m_all) * phis

    # Closed non-orientable.
    g = sig.genus
    e = g - 1
    m_all = lcm_list(ms)

    if not sign_preserving:
        if l % 2 == 1:
            return m_all**e * jord(e, l, m_all) * phis
        # b is the reduced denominator of sum(1 / (2 m_i)).
        b = sum(Fraction(1, 2 * m) for m in ms).denominator if ms else 1
        m_prime = lcm_list((2, b, *ms))
        q, _ = _two_adic(l)
        main = 2 * m_prime**e * jord(e, l, m_prime) * phis
        if q >= 2:
            return main
        return main - m_all**e * jord(e, l, 2 * m_all) * phis

    if l % 2 != 0:
        return 0
    half = l // 2
    if half % 2 == 1:
        return m_all**e * jord(e, half, m_all) * phis
    # Even half: only divisors d with half/d odd survive the inversion, all of
    # which share the 2-adic part of half, so the parity condition is constant.
    q, w = _two_adic(half)
    vs = [_two_adic(m) for m in ms]
    if any(v > q for v, _ in vs):
        return 0
    if sum(1 for v, _ in vs if v == q) % 2 != g % 2:
        return 0
    m_odd = lcm_list([odd for _, odd in vs]) if vs else 1
    return 2 * (2**q * m_odd) ** e * jord(e, w, m_odd) * phis
