"""q-series identities, Betti polynomials, and dimension formulas."""

import pytest

from springer_rca import (
    Params,
    QPolynomial,
    UnsupportedParametersError,
    betti_2k,
    compactified_jacobian_dim,
    enumerate_fixed_points,
    euler_series,
    qbinomial,
)
from springer_rca.qseries import chain_cell_count


def test_qpolynomial_arithmetic():
    a = QPolynomial([1, 2])
    b = QPolynomial([0, 1, 1])
    assert (a + b).coeffs == (1, 3, 1)
    assert (a * b).coeffs == (0, 1, 3, 2)
    assert (a - a).coeffs == ()
    assert QPolynomial([1, 0, 0]).coeffs == (1,)
    assert a(3) == 7
    assert QPolynomial.monomial(3, 2).coeffs == (0, 0, 0, 2)


def test_qbinomial_examples():
    assert qbinomial(2, 1).coeffs == (1, 1)
    assert qbinomial(4, 1).coeffs == (1, 1, 1, 1)
    assert qbinomial(7, 0).coeffs == (1,)
    # [6 choose 2]_q expanded by hand from the product formula
    assert qbinomial(6, 2).coeffs == (1, 1, 2, 2, 3, 2, 2, 1, 1)


def test_qbinomial_range_check():
    with pytest.raises(ValueError):
        qbinomial(3, 4)
    with pytest.raises(ValueError):
        qbinomial(3, -1)


@pytest.mark.parametrize("a", range(1, 9))
def test_qbinomial_palindromic_nonnegative(a):
    for b in range(a + 1):
        poly = qbinomial(a, b)
        assert poly.is_palindromic()
        assert all(c >= 0 for c in poly.coeffs)
        assert poly(1) == __import__("math").comb(a, b)


def test_qbinomial_pascal_recurrence():
    for a in range(2, 9):
        for b in range(1, a):
            lhs = qbinomial(a, b)
            rhs = qbinomial(a - 1, b - 1) + QPolynomial.monomial(b) * qbinomial(a - 1, b)
            assert lhs == rhs


def test_euler_series_examples():
    assert euler_series(Params(2, 3), 5).coeffs == (1, 1, 2, 2, 2, 2)
    assert euler_series(Params(2, 3), 0).coeffs == (1,)
    assert euler_series(Params(3, 4), 4).coeffs == (1, 1, 2, 3, 4)


def test_euler_series_rejects_non_coprime():
    with pytest.raises(UnsupportedParametersError):
        euler_series(Params(2, 6), 4)


def test_compactified_jacobian_dims():
    assert compactified_jacobian_dim(Params(2, 3)) == 2
    assert compactified_jacobian_dim(Params(4, 5)) == 14
    for n in range(1, 7):
        assert compactified_jacobian_dim(Params(n, 1)) == 1
    expected = {(2, 3): 2, (2, 5): 3, (2, 7): 4, (3, 4): 5, (3, 5): 7, (4, 5): 14}
    for (n, k), value in expected.items():
        assert compactified_jacobian_dim(Params(n, k)) == value


def test_betti_examples():
    assert betti_2k(3, -2).coeffs == (1, 0, 1)
    assert betti_2k(9, 0).coeffs == (1,)
    assert betti_2k(4, -6).coeffs == (1, 0, 3, 0, 3)


def test_betti_rejects_positive_degree():
    with pytest.raises(ValueError):
        betti_2k(3, 1)


@pytest.mark.parametrize("k", [1, 3, 5, 7, 9])
def test_betti_odd_matches_fixed_point_counts(k):
    p = Params(2, k)
    for m in range(0, -13, -1):
        total = betti_2k(k, m)(1)
        assert total == min((-m) // 2, k // 2) + 1
        assert total == len(enumerate_fixed_points(p, -m))


@pytest.mark.parametrize("k", [2, 4, 6, 8])
def test_betti_even_chain_euler_characteristic(k):
    ell = k // 2
    for m in range(-k, -13, -1):
        copies = -m - k + 1
        poly = betti_2k(k, m)
        assert poly(1) == 1 + copies * ell
        assert poly(1) == chain_cell_count(k, m)
        assert poly.coefficient(0) == 1
        assert all(poly.coefficient(2 * i) == copies for i in range(1, ell + 1))


def test_betti_even_small_projective():
    # below the chain threshold the component is a single projective space
    assert betti_2k(4, -2).coeffs == (1, 0, 1)
    assert betti_2k(4, -4).coeffs == (1, 0, 1, 0, 1)
    assert betti_2k(6, -5).coeffs == (1, 0, 1, 0, 1)
