"""Monopole operators on the graded fixed-point basis, with exact arithmetic.

A minuscule monopole operator acts on a fixed-point class |A> by a sum over
the Weyl orbit of its coweight.  For an orbit element lam with target
B = A + lam, the coefficient is

    f(phi(B)) * N(lam, phi(B)) / D(lam, phi(B))

where, writing phi for the target weights and m = -k/n,

    N = prod_{lam_a < 0} prod_{alpha=1..|lam_a|} (phi_a - alpha)
      * prod_{lam_a > lam_b} prod_{beta=1..lam_a-lam_b} (phi_b - phi_a + m - beta)
    D = prod_{lam_a > lam_b} prod_{gamma=1..lam_a-lam_b} (phi_b - phi_a - gamma).

Evaluating every factor at the *target* weights is the convention that
reproduces the closed rank-two formulas; the equivalent source-side route
goes through ``excess_factor`` (the numerator above, evaluated at the target,
equals the excess factor of the source point).  Whenever the target leaves
the admissible region the numerator vanishes identically, so the operator
never maps outside the moduli; this is asserted, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .core import is_admissible, phi_weights
from .errors import DimensionError, TruncationError
from .linalg import RatMat


def bracket_pow(x, r):
    """Rising/falling product [x]^r with unit step.

    r > 0 gives x(x+1)...(x+r-1), r = 0 gives 1, and r < 0 gives
    (x-1)(x-2)...(x-|r|).
    """
    x = Fraction(x)
    value = Fraction(1)
    if r > 0:
        for j in range(r):
            value *= x + j
    elif r < 0:
        for j in range(1, -r + 1):
            value *= x - j
    return value


def abelian_monopole_coeff(entries, lam, params):
    """Coefficient of the abelianized shift operator |A> -> |A + lam>.

    This is the displayed product formula for the action of a single lattice
    translation: the vector-representation part contributes
    (a-1)k/n - A_a + alpha for each negative entry, the adjoint part
    (a-b+1)k/n - A_a + A_b + beta for each decreasing pair.
    """
    if len(entries) != params.n or len(lam) != params.n:
        raise DimensionError("cocharacter and shift must both have length n")
    kn = Fraction(params.k, params.n)
    value = Fraction(1)
    for a, la in enumerate(lam):
        if la < 0:
            for alpha in range(-la):
                value *= a * kn - entries[a] + alpha
    n = params.n
    for a in range(n):
        for b in range(n):
            diff = lam[a] - lam[b]
            if diff > 0:
                for beta in range(diff):
                    value *= (a - b + 1) * kn - entries[a] + entries[b] + beta
    return value


def excess_factor(entries, nu, params):
    """Excess intersection factor of the shift nu at the source point A.

    Product of bracket powers over the weights of the representation
    (adjoint plus vector): adjoint weights phi_a - phi_b + m for a != b and
    vector weights phi_a, each raised to -<mu, nu> when that pairing is
    negative.
    """
    if len(entries) != params.n or len(nu) != params.n:
        raise DimensionError("cocharacter and shift must both have length n")
    phis = phi_weights(entries, params)
    m = params.m
    value = Fraction(1)
    n = params.n
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            pairing = nu[a] - nu[b]
            if pairing < 0:
                value *= bracket_pow(phis[a] - phis[b] + m, -pairing)
    for a in range(n):
        if nu[a] < 0:
            value *= bracket_pow(phis[a], -nu[a])
    return value


class DressPolynomial:
    """Exact polynomial in the weight components phi_0..phi_{n-1}.

    Terms map exponent tuples to rational coefficients.  The scalar
    parameters (m and hbar) are numbers at operator-build time, so they live
    inside the coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for expo, coeff in terms.items():
                expo = tuple(expo)
                if len(expo) != nvars:
                    raise DimensionError("exponent tuple has wrong length")
                coeff = Fraction(coeff)
                if coeff != 0:
                    self.terms[expo] = self.terms.get(expo, Fraction(0)) + coeff
        self.terms = {e: c for e, c in self.terms.items() if c != 0}

    @classmethod
    def constant(cls, nvars, value):
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars):
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars, index):
        expo = [0] * nvars
        expo[index] = 1
        return cls(nvars, {tuple(expo): 1})

    @classmethod
    def elementary(cls, nvars, degree, indices=None):
        """Elementary symmetric polynomial e_degree of the chosen variables."""
        indices = tuple(range(nvars)) if indices is None else tuple(indices)
        terms = {}
        for subset in combinations(indices, degree):
            expo = [0] * nvars
            for i in subset:
                expo[i] = 1
            terms[tuple(expo)] = 1
        return cls(nvars, terms)

    def is_zero(self):
        return not self.terms

    def evaluate(self, values):
        if len(values) != self.nvars:
            raise DimensionError("evaluation point has wrong length")
        total = Fraction(0)
        for expo, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, expo):
                for _ in range(e):
                    term *= v
            total += term
        return total

    def permuted(self, perm):
        """Polynomial g with g(x_0,...,x_{n-1}) = f(x_{perm[0]},...,x_{perm[n-1]})."""
        out = {}
        for expo, coeff in self.terms.items():
            new = [0] * self.nvars
            for slot, e in enumerate(expo):
                new[perm[slot]] += e
            key = tuple(new)
            out[key] = out.get(key, Fraction(0)) + coeff
        return DressPolynomial(self.nvars, out)

    def shift_all(self, c):
        """Substitute x_a -> x_a - c in every variable."""
        c = Fraction(c)
        terms = dict(self.terms)
        for var in range(self.nvars):
            shifted = {}
            for expo, coeff in terms.items():
                e = expo[var]
                for j in range(e + 1):
                    new = list(expo)
                    new[var] = j
                    key = tuple(new)
                    contrib = coeff * comb(e, j) * (-c) ** (e - j)
                    shifted[key] = shifted.get(key, Fraction(0)) + contrib
            terms = {k: v for k, v in shifted.items() if v != 0}
        return DressPolynomial(self.nvars, terms)

    def is_invariant(self, perms):
        return all(self.permuted(p) == self for p in perms)

    def __add__(self, other):
        if self.nvars != other.nvars:
            raise DimensionError("polynomials over different variable counts")
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            out[expo] = out.get(expo, Fraction(0)) + coeff
        return DressPolynomial(self.nvars, out)

    def __mul__(self, other):
        if isinstance(other, DressPolynomial):
            if self.nvars != other.nvars:
                raise DimensionError("polynomials over different variable counts")
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    key = tuple(a + b for a, b in zip(e1, e2))
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return DressPolynomial(self.nvars, out)
        return DressPolynomial(
            self.nvars, {e: c * other for e, c in self.terms.items()}
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DressPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"DressPolynomial({self.nvars}, {self.terms!r})"


@dataclass(frozen=True)
class MinusculeCoweight:
    """Coweight +/-(1,...,1,0,...,0) with r nonzero entries out of n."""

    sign: int
    r: int
    n: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if not 1 <= self.r <= self.n:
            raise ValueError(f"r must lie in [1, n], got r={self.r}, n={self.n}")

    @classmethod
    def from_vector(cls, vector):
        vector = tuple(vector)
        nonzero = [v for v in vector if v != 0]
        if not nonzero:
            raise ValueError("the zero coweight is not a monopole charge")
        sign = 1 if nonzero[0] > 0 else -1
        if any(v not in (0, sign) for v in vector):
            raise ValueError(
                f"{vector} is not minuscule: entries must be 0 and a single sign"
            )
        return cls(sign=sign, r=len(nonzero), n=len(vector))

    @property
    def expansion(self):
        return tuple(self.sign if i < self.r else 0 for i in range(self.n))

    @property
    def shift(self):
        """Degree change d(A + lam) - d(A), the same for the whole orbit."""
        return self.sign * self.r

    def orbit(self):
        """Weyl orbit as (vector, representative) pairs, deterministic order.

        The representative w lists which variable each slot of a dressing
        polynomial reads: slots 0..r-1 map to the nonzero positions in
        increasing order, the rest to the complement.
        """
        out = []
        for positions in combinations(range(self.n), self.r):
            vector = [0] * self.n
            for p in positions:
                vector[p] = self.sign
            complement = [i for i in range(self.n) if i not in positions]
            rep = tuple(positions) + tuple(complement)
            out.append((tuple(vector), rep))
        return out

    def stabilizer_transpositions(self):
        """Adjacent transpositions generating the stabilizer S_r x S_{n-r}."""
        perms = []
        for i in list(range(self.r - 1)) + list(range(self.r, self.n - 1)):
            p = list(range(self.n))
            p[i], p[i + 1] = p[i + 1], p[i]
            perms.append(tuple(p))
        return perms


class GradedOperator:
    """Degree-homogeneous operator stored as one exact block per source degree.

    The block at source degree d has shape dim(d + shift) x dim(d) in the
    canonical bases; strata of negative degree are zero-dimensional, so low
    blocks of lowering operators simply have no rows.
    """

    __slots__ = ("basis", "shift", "blocks")

    def __init__(self, basis, shift, blocks):
        self.basis = basis
        self.shift = shift
        self.blocks = dict(blocks)
        for d, block in self.blocks.items():
            expected = (basis.dim(d + shift) if d + shift >= 0 else 0, basis.dim(d))
            if block.shape != expected:
                raise DimensionError(
                    f"block at degree {d} has shape {block.shape}, expected {expected}"
                )

    @property
    def max_source(self):
        return max(self.blocks, default=-1)

    def domain(self):
        return range(0, self.max_source + 1)

    def block(self, d):
        try:
            return self.blocks[d]
        except KeyError:
            raise TruncationError(
                f"operator with shift {self.shift} has no block at source degree {d}"
            )

    def _check_basis(self, other):
        if self.basis is not other.basis and self.basis != other.basis:
            raise DimensionError("operators live on different graded bases")

    def __matmul__(self, other):
        """Composition self . other (other acts first)."""
        self._check_basis(other)
        shift = self.shift + other.shift
        hi = min(other.max_source, self.max_source - other.shift)
        blocks = {}
        for d in range(hi + 1):
            mid = d + other.shift
            tgt_dim = self.basis.dim(d + shift) if d + shift >= 0 else 0
            if mid < 0:
                blocks[d] = RatMat(tgt_dim, self.basis.dim(d))
            else:
                blocks[d] = self.block(mid) @ other.block(d)
        return GradedOperator(self.basis, shift, blocks)

    def __add__(self, other):
        self._check_basis(other)
        if self.shift != other.shift:
            raise DimensionError(
                f"cannot add operators of shifts {self.shift} and {other.shift}"
            )
        hi = min(self.max_source, other.max_source)
        return GradedOperator(
            self.basis,
            self.shift,
            {d: self.block(d) + other.block(d) for d in range(hi + 1)},
        )

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        return GradedOperator(
            self.basis, self.shift, {d: b.scaled(c) for d, b in self.blocks.items()}
        )

    def __mul__(self, c):
        return self.scaled(c)

    __rmul__ = __mul__

    def __neg__(self):
        return self.scaled(-1)

    def is_zero(self):
        return all(not b.entries for b in self.blocks.values())

    def apply(self, vector):
        """Apply to a graded vector given as {label: coefficient}."""
        by_degree = {}
        for label, coeff in vector.items():
            d = sum(label)
            by_degree.setdefault(d, {})[label] = Fraction(coeff)
        out = {}
        for d, component in sorted(by_degree.items()):
            if d < 0 or d > self.max_source:
                raise TruncationError(
                    f"vector component of degree {d} is outside the operator "
                    f"domain [0, {self.max_source}]"
                )
            coords = [Fraction(0)] * self.basis.dim(d)
            for label, coeff in component.items():
                coords[self.basis.index(d, label)] = coeff
            image = self.block(d).matvec(coords)
            if d + self.shift >= 0:
                stratum = self.basis.stratum(d + self.shift)
                for i, value in enumerate(image):
                    if value != 0:
                        label = stratum[i]
                        total = out.get(label, Fraction(0)) + value
                        if total == 0:
                            out.pop(label, None)
                        else:
                            out[label] = total
        return out

    def sorted_entries(self):
        """All block entries as (degree, row, col, value), canonically ordered."""
        out = []
        for d in sorted(self.blocks):
            for (i, j), value in self.blocks[d].sorted_entries():
                out.append((d, i, j, value))
        return out

    def __repr__(self):
        return (
            f"GradedOperator(shift={self.shift}, degrees<={self.max_source}, "
            f"nnz={sum(len(b.entries) for b in self.blocks.values())})"
        )


def identity_operator(basis, scale=1):
    return GradedOperator(
        basis,
        0,
        {d: RatMat.identity(basis.dim(d), scale) for d in basis.degrees()},
    )


def zero_operator(basis, shift=0):
    D = basis.max_degree
    return GradedOperator(
        basis,
        shift,
        {
            d: RatMat(basis.dim(d + shift) if d + shift >= 0 else 0, basis.dim(d))
            for d in range(D - max(0, shift) + 1)
        },
    )


def commutator(a, b):
    return a @ b - b @ a


def sca_numerator(lam, phis, m):
    """Numerator of the localization coefficient, at given weight values."""
    value = Fraction(1)
    n = len(lam)
    for a in range(n):
        if lam[a] < 0:
            for alpha in range(1, -lam[a] + 1):
                value *= phis[a] - alpha
    for a in range(n):
        for b in range(n):
            diff = lam[a] - lam[b]
            if diff > 0:
                for beta in range(1, diff + 1):
                    value *= phis[b] - phis[a] + m - beta
    return value


def sca_denominator(lam, phis):
    """Denominator (tangent Euler factor) of the localization coefficient."""
    value = Fraction(1)
    n = len(lam)
    for a in range(n):
        for b in range(n):
            diff = lam[a] - lam[b]
            if diff > 0:
                for gamma in range(1, diff + 1):
                    value *= phis[b] - phis[a] - gamma
    return value


def minuscule_monopole(basis, coweight, dress=None):
    """Matrix of the dressed minuscule monopole operator on the truncation.

    The dressing must be invariant under the stabilizer of the coweight in
    the symmetric group; each orbit term evaluates it at the target weights
    through the orbit representative.
    """
    params = basis.params
    params.require_coprime()
    n = params.n
    if not isinstance(coweight, MinusculeCoweight):
        coweight = MinusculeCoweight.from_vector(coweight)
    if coweight.n != n:
        raise DimensionError(f"coweight has length {coweight.n}, expected {n}")
    if dress is None:
        dress = DressPolynomial.one(n)
    if dress.nvars != n:
        raise DimensionError("dressing polynomial has the wrong variable count")
    if not dress.is_invariant(coweight.stabilizer_transpositions()):
        raise ValueError(
            "dressing polynomial is not invariant under the coweight stabilizer"
        )
    shift = coweight.shift
    orbit = coweight.orbit()
    m = params.m
    blocks = {}
    for d in range(basis.max_degree - max(0, shift) + 1):
        source = basis.stratum(d)
        target_degree = d + shift
        target_dim = basis.dim(target_degree) if target_degree >= 0 else 0
        block = RatMat(target_dim, len(source))
        for j, label in enumerate(source):
            for lam, rep in orbit:
                target = tuple(label[a] + lam[a] for a in range(n))
                phis = phi_weights(target, params)
                numerator = sca_numerator(lam, phis, m)
                if is_admissible(target, params):
                    denominator = sca_denominator(lam, phis)
                    # nonzero by weight separation, which needs gcd(n,k)=1
                    assert denominator != 0
                    value = (
                        dress.evaluate(tuple(phis[rep[i]] for i in range(n)))
                        * numerator
                        / denominator
                    )
                    if value != 0:
                        block[basis.index(target_degree, target), j] = value
                else:
                    # boundary vanishing: leaving the moduli kills the term
                    assert numerator == 0, (label, lam, numerator)
        blocks[d] = block
    return GradedOperator(basis, shift, blocks)


def operator_x(basis):
    """Raising Weyl generator, charge (1, 0, ..., 0) undressed."""
    return minuscule_monopole(basis, MinusculeCoweight(1, 1, basis.params.n))


def operator_y(basis):
    """Lowering Weyl generator, charge -(1, 0, ..., 0) undressed."""
    return minuscule_monopole(basis, MinusculeCoweight(-1, 1, basis.params.n))


def operator_e(basis, r=None, dress=None):
    """Raising operator E_r[f] for the coweight with r ones (default r = n)."""
    n = basis.params.n
    r = n if r is None else r
    return minuscule_monopole(basis, MinusculeCoweight(1, r, n), dress)


def operator_f(basis, r=None, dress=None):
    """Lowering operator F_r[f], whose dressing is shifted by hbar.

    The lowering family acts with f(phi - hbar) where the raising family
    uses f(phi); with no dressing the twist is invisible.
    """
    params = basis.params
    n = params.n
    r = n if r is None else r
    twisted = None if dress is None else dress.shift_all(params.hbar)
    return minuscule_monopole(basis, MinusculeCoweight(-1, r, n), twisted)


def operator_h(basis):
    """Cartan operator hbar - phi_1 - phi_2, diagonal; defined only for n = 2.

    On |A_1, A_2> the eigenvalue is A_1 + A_2 + 1 - k/2.
    """
    from .errors import UnsupportedParametersError

    params = basis.params
    if params.n != 2:
        raise UnsupportedParametersError(
            f"the Cartan operator H is only defined for n = 2, got n = {params.n}"
        )
    params.require_coprime()
    blocks = {}
    for d in basis.degrees():
        block = RatMat(basis.dim(d), basis.dim(d))
        for j, label in enumerate(basis.stratum(d)):
            block[j, j] = Fraction(2 * (sum(label) + 1) - params.k, 2)
        blocks[d] = block
    return GradedOperator(basis, 0, blocks)
