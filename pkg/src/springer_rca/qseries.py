"""q-series combinatorics: Gaussian binomials, Euler characteristics, Betti numbers.

All arithmetic is exact over the integers.  A ``QPolynomial`` is a plain
coefficient list indexed by the power of q, with trailing zeros trimmed.
"""

from __future__ import annotations

from math import comb, gcd

from .errors import UnsupportedParametersError


class QPolynomial:
    """Polynomial in q with exact integer (or rational) coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, power, coeff=1):
        return cls([0] * power + [coeff])

    @property
    def degree(self):
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def truncated(self, max_degree):
        return QPolynomial(self.coeffs[: max_degree + 1])

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)]
        )

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(
            [self.coefficient(i) - other.coefficient(i) for i in range(n)]
        )

    def __mul__(self, other):
        if not isinstance(other, QPolynomial):
            return QPolynomial([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def is_palindromic(self):
        return self.coeffs == tuple(reversed(self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "QPolynomial([0])"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*q" if c != 1 else "q")
            else:
                terms.append(f"{c}*q^{i}" if c != 1 else f"q^{i}")
        return " + ".join(terms)


def qbinomial(a, b):
    """Gaussian binomial [a choose b]_q via the Pascal recurrence.

    Coefficients are nonnegative integers and the polynomial is palindromic
    of degree b*(a-b).
    """
    if not 0 <= b <= a:
        raise ValueError(f"qbinomial requires 0 <= b <= a, got ({a}, {b})")
    # row[j] holds [i choose j]_q while i sweeps upward
    row = [QPolynomial([1])] + [QPolynomial()] * b
    for i in range(1, a + 1):
        for j in range(min(i, b), 0, -1):
            # [i,j] = [i-1,j-1] + q^j [i-1,j]
            row[j] = row[j - 1] + QPolynomial.monomial(j) * row[j]
    return row[b]


def require_coprime(n, k):
    if gcd(n, k) != 1:
        raise UnsupportedParametersError(
            f"(n, k) = ({n}, {k}) is not coprime; fixed points are not "
            "isolated and these counts/operators are not defined"
        )


def euler_series(params, max_degree):
    """Graded Euler characteristic of the Hilbert scheme union, truncated.

    The generating function of fixed-point counts is
    [n-1+k choose n-1]_q / (1 - q^n); the truncation keeps powers up to
    ``max_degree``.
    """
    n, k = params.n, params.k
    require_coprime(n, k)
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    numerator = qbinomial(n - 1 + k, n - 1)
    coeffs = [0] * (max_degree + 1)
    for d in range(max_degree + 1):
        coeffs[d] = sum(
            numerator.coefficient(d - j) for j in range(0, d + 1, n)
        )
    return QPolynomial(coeffs)


def compactified_jacobian_dim(params):
    """Total cohomology dimension of the compactified Jacobian: C(n+k-1, n-1)/n."""
    n, k = params.n, params.k
    require_coprime(n, k)
    total = comb(n + k - 1, n - 1)
    assert total % n == 0, "binomial C(n+k-1,n-1) must be divisible by n for coprime (n,k)"
    return total // n


def betti_2k(k, m):
    """Poincare polynomial of the degree-m component for the x^2 = t^k curve.

    ``m`` is the (nonpositive) lattice degree; the component for odd
    k = 2l+1 is projective space P^min(floor(|m|/2), l).  For even k = 2l it
    is P^floor(|m|/2) while |m| <= 2l, and for |m| > 2l a chain of
    c = |m| - 2l + 1 copies of P^l glued transversely at points, with
    b_0 = 1 and b_{2i} = c for 1 <= i <= l.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if m > 0:
        raise ValueError("component degree m must be nonpositive")
    size = -m
    ell = k // 2
    if k % 2 == 1:
        dim = min(size // 2, ell)
        return QPolynomial([1 if i % 2 == 0 else 0 for i in range(2 * dim + 1)])
    if size <= 2 * ell:
        dim = size // 2
        return QPolynomial([1 if i % 2 == 0 else 0 for i in range(2 * dim + 1)])
    copies = size - 2 * ell + 1
    coeffs = [0] * (2 * ell + 1)
    coeffs[0] = 1
    for i in range(1, ell + 1):
        coeffs[2 * i] = copies
    return QPolynomial(coeffs)


def chain_cell_count(k, m):
    """Number of cells of the chain component: c copies of P^l share c-1 points."""
    if k % 2 != 0:
        raise ValueError("chain components only occur for even k")
    size = -m
    ell = k // 2
    if size < 2 * ell:
        raise ValueError("chain components require |m| >= k")
    copies = size - 2 * ell + 1
    return copies * (ell + 1) - (copies - 1)
