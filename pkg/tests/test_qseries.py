import random
from fractions import Fraction

import pytest

from borcherds_kit.lattice import GramLattice
from borcherds_kit.qseries import (
    FracQSeries,
    delta_series,
    eisenstein,
    j_series,
    lattice_binomial,
    series_invert,
    series_mul,
)


def delta_by_jacobi(b):
    """Independent oracle for Delta: (eta^3)^8 via Jacobi's identity.

    eta(tau)^3 = q^(1/8) * sum_{k>=0} (-1)^k (2k+1) q^(k(k+1)/2), so Delta =
    q * (sum ...)^8.  This route never touches the Euler-product code path.
    """
    cube = {}
    k = 0
    while k * (k + 1) // 2 <= b:
        cube[k * (k + 1) // 2] = (-1) ** k * (2 * k + 1)
        k += 1
    acc = {0: 1}
    for _ in range(8):
        nxt = {}
        for e1, c1 in acc.items():
            for e2, c2 in cube.items():
                if e1 + e2 <= b:
                    nxt[e1 + e2] = nxt.get(e1 + e2, 0) + c1 * c2
        acc = nxt
    return {n + 1: c for n, c in acc.items() if c != 0 and n + 1 <= b}


# tau(1..9), frozen from the Jacobi oracle above
TAU = {1: 1, 2: -24, 3: 252, 4: -1472, 5: 4830, 6: -6048, 7: -16744, 8: 84480,
       9: -113643}


def test_jacobi_oracle_self_check():
    assert delta_by_jacobi(9) == TAU


def test_delta_matches_jacobi_oracle():
    d = delta_series(9)
    oracle = delta_by_jacobi(9)
    for n in range(1, 10):
        assert d.coefficient(n) == oracle.get(n, 0)


def test_delta_examples():
    d = delta_series(4)
    assert d.coefficient(1) == 1
    assert d.coefficient(2) == -24
    assert d.coefficient(3) == 252
    assert d.coefficient(4) == -1472
    assert delta_series(6).coefficient(6) == -6048


def test_delta_integral_and_multiplicative():
    d = delta_series(8)
    assert d.is_integral()
    assert d.coefficient(2) * d.coefficient(3) == d.coefficient(6)


def test_eisenstein():
    e4 = eisenstein(4, 2)
    assert e4.coefficient(0) == 1
    assert e4.coefficient(1) == 240
    assert e4.coefficient(2) == 2160
    e6 = eisenstein(6, 1)
    assert e6.coefficient(1) == -504
    with pytest.raises(ValueError):
        eisenstein(8, 2)


def test_e4_cubed_minus_e6_squared():
    b = 6
    e4 = eisenstein(4, b)
    e6 = eisenstein(6, b)
    lhs = e4 ** 3 - e6 ** 2
    rhs = delta_series(b) * 1728
    for n in range(b + 1):
        assert lhs.coefficient(n) == rhs.coefficient(n)


def test_j_series():
    j = j_series(1)
    assert j.coefficient(-1) == 1
    assert j.coefficient(0) == 744
    assert j.coefficient(1) == 196884
    j5 = j_series(5)
    assert j5.coefficient(2) == 21493760
    assert j5.coefficient(3) == 864299970
    assert j5.coefficient(4) == 20245856256
    assert j5.coefficient(5) == 333202640600
    assert j_series(8).is_integral()


def test_mul_basic():
    one_plus = FracQSeries({0: 1, 1: 1}, 5)
    one_minus = FracQSeries({0: 1, 1: -1}, 5)
    prod = series_mul(one_plus, one_minus)
    assert prod.coefficient(0) == 1
    assert prod.coefficient(1) == 0
    assert prod.coefficient(2) == -1


def test_invert_geometric():
    s = FracQSeries({0: 1, 1: -1}, 6)
    inv = series_invert(s)
    for n in range(6):
        assert inv.coefficient(n) == 1


def test_invert_delta():
    d = delta_series(8)
    inv = d.inverse()
    assert inv.m_min == -1
    # 1/Delta = q^-1 + 24 + 324 q + 3200 q^2 + 25650 q^3 + 176256 q^4 + ...
    expected = {-1: 1, 0: 24, 1: 324, 2: 3200, 3: 25650, 4: 176256, 5: 1073720}
    for e, c in expected.items():
        assert inv.coefficient(e) == c
    prod = d * inv
    assert prod.coefficient(0) == 1
    for n in range(1, 5):
        assert prod.coefficient(n) == 0


def test_invert_constant():
    two = FracQSeries({0: 2}, 4)
    assert two.inverse().coefficient(0) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        FracQSeries.zero(3).inverse()


def test_delta_times_inverse_is_one():
    d = delta_series(7)
    assert (d * d.inverse()).coefficient(0) == 1


def test_fractional_exponents():
    s = FracQSeries({Fraction(1, 4): 2, Fraction(9, 4): 2}, 4)
    assert s.denominator == 4
    sq = s * s
    assert sq.coefficient(Fraction(1, 2)) == 4
    assert sq.coefficient(Fraction(5, 2)) == 8


def random_series(rng, prec=4, unit=False):
    coeffs = {n: Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for n in range(prec)}
    if unit:
        coeffs[0] = Fraction(rng.choice([1, -1, 2, 3]))
    return FracQSeries(coeffs, prec)


def test_ring_axioms_random():
    rng = random.Random(11)
    for _ in range(60):
        a = random_series(rng)
        b = random_series(rng)
        c = random_series(rng)
        lhs = (a * b) * c
        rhs = a * (b * c)
        assert lhs.prec == rhs.prec and lhs.coeffs == rhs.coeffs
        lhs = a * (b + c)
        rhs = a * b + a * c
        common = min(lhs.prec, rhs.prec)
        assert lhs.truncate(common).coeffs == rhs.truncate(common).coeffs
        lhs = a * b
        rhs = b * a
        assert lhs.coeffs == rhs.coeffs


def test_inverse_is_two_sided_random():
    rng = random.Random(12)
    for _ in range(50):
        a = random_series(rng, unit=True)
        inv = a.inverse()
        left = a * inv
        right = inv * a
        for n in range(int(min(left.prec, right.prec))):
            assert left.coefficient(n) == (1 if n == 0 else 0)
            assert right.coefficient(n) == (1 if n == 0 else 0)


U_GRAM = GramLattice(((0, 1), (1, 0)), name="U")
W = (2, -1)


def test_lattice_binomial_basic():
    alpha = (1, 1)
    s = lattice_binomial(U_GRAM, W, 6, alpha, 1, 1)
    assert s.coefficient((0, 0)) == 1
    assert s.coefficient((1, 1)) == -1
    t = lattice_binomial(U_GRAM, W, 6, alpha, 1, -1)
    prod = s * t
    assert prod.coefficient((0, 0)) == 1
    assert prod.coefficient((1, 1)) == 0
    assert prod.coefficient((2, 2)) == 0


def test_lattice_binomial_power_24():
    # coefficient of q_{2 alpha} in (1 - q_alpha)^24 is C(24, 2) = 276
    alpha = (1, 1)
    s = lattice_binomial(U_GRAM, W, 2, alpha, 1, 24)
    assert s.coefficient((2, 2)) == 276


def test_lattice_binomial_geometric():
    alpha = (-1, 1)  # grading 3 with w = (2, -1)
    s = lattice_binomial(U_GRAM, W, 10, alpha, 1, -1)
    assert s.coefficient((0, 0)) == 1
    assert s.coefficient((-1, 1)) == 1
    assert s.coefficient((-2, 2)) == 1
    assert s.coefficient((-3, 3)) == 1
    assert s.coefficient((-4, 4)) == 0  # grading 12 > cutoff


def test_lattice_binomial_inverse_pairs_random():
    rng = random.Random(13)
    for _ in range(50):
        a = rng.randint(-3, 3)
        b = rng.randint(max(1, a + 1), 4)  # ensure positive grading cone membership
        alpha = (a, b)
        if U_GRAM.bilinear(alpha, W) <= 0:
            continue
        e = rng.randint(1, 6)
        s = lattice_binomial(U_GRAM, W, 8, alpha, 1, e)
        t = lattice_binomial(U_GRAM, W, 8, alpha, 1, -e)
        prod = s * t
        zero = tuple([Fraction(0)] * 2)
        for key, val in prod.coeffs.items():
            assert val == (1 if key == zero else 0)


def test_grading_mismatch_rejected():
    s = lattice_binomial(U_GRAM, W, 4, (1, 1), 1, 1)
    t = lattice_binomial(U_GRAM, (3, -1), 4, (1, 1), 1, 1)
    with pytest.raises(ValueError):
        s * t
    with pytest.raises(ValueError):
        lattice_binomial(U_GRAM, W, 4, (1, 0), 1, 1)  # grading -1
