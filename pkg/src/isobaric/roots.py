"""Convolution roots of the Fibonacci-side family, for any rational exponent.

The q-th convolution power of the generalized Fibonacci sequence has an exact
closed form: the coefficient of t^alpha in degree n is the rising factorial
q(q+1)...(q+|alpha|-1) divided by the product of the multiplicity factorials.
Three matrix routes recover the same polynomial (determinant, permanent, and
a variant whose cells are ratios of the factorial operators), and a weighted
generalization handles arbitrary weight vectors through iterated total
derivatives in the weights.

Everything is exact; q may be any Fraction, so "square root of the Fibonacci
sequence" is literal: the q = 1/2 power convolved with itself returns the
original sequence.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable, Mapping, Sequence, Union

from .hessenberg import Cell, HessenbergMatrix
from .partitions import ExponentVector, exponent_vectors
from .polynomials import IsobaricPoly, PolySequence, RationalLike

__all__ = [
    "DegenerateQError",
    "stirling_B",
    "stirling1_expand",
    "gfp_root_closed",
    "gfp_root_matrix",
    "gfp_root_stirling_matrix",
    "gfp_root_sequence",
    "OmegaPolynomial",
    "total_derivative",
    "wip_root_coeff",
    "wip_root",
]


class DegenerateQError(ValueError):
    """The Stirling-ratio matrix divides by B_{m}(q) factors; it is undefined
    when q is one of the integers 0, -1, ..., -(n-2), where some denominator
    vanishes.  The other three routes stay valid there."""


def stirling_B(j: int, q: RationalLike) -> Fraction:
    """Factorial operator value B_j(q).

    B_j(q) = q(q+1)...(q+j) for j >= 0 (j+1 ascending factors starting at q)
    and B_{-j}(q) = q(q-1)...(q-j) for the negative index (descending).
    B_0(q) = q either way.
    """
    q = Fraction(q)
    out = Fraction(1)
    if j >= 0:
        for i in range(j + 1):
            out *= q + i
    else:
        for i in range(-j + 1):
            out *= q - i
    return out


def stirling1_expand(m: int) -> list[int]:
    """Coefficients [c(m,1), ..., c(m,m)] of q(q+1)...(q+m-1) = sum c(m,i) q^i.

    These are the unsigned Stirling numbers of the first kind; expanding the
    rising factorial product directly keeps them exact.
    """
    if m < 1:
        raise ValueError("need m >= 1 factors")
    poly = [0, 1]
    for i in range(1, m):
        nxt = [0] * (len(poly) + 1)
        for p, c in enumerate(poly):
            nxt[p] += c * i
            nxt[p + 1] += c
        poly = nxt
    return poly[1:]


def gfp_root_closed(q: RationalLike, k: int, n: int) -> IsobaricPoly:
    """Degree-n term of the q-th convolution power of the Fibonacci family.

    Coefficient of t^alpha: B_{|alpha|-1}(q) / prod(alpha_i!).  Degree 0 is
    the constant 1 (the convolution identity), q = 1 returns the plain
    polynomial, q = 0 the identity sequence.
    """
    q = Fraction(q)
    if n < 0:
        raise ValueError("degree must be >= 0")
    if k < 1:
        raise ValueError("part bound k must be >= 1")
    if n == 0:
        return IsobaricPoly.constant(1, k)
    terms = {}
    for alpha in exponent_vectors(n, k):
        denom = 1
        for a in alpha.multiplicities:
            denom *= factorial(a)
        coeff = stirling_B(alpha.norm - 1, q) / denom
        if coeff != 0:
            terms[alpha] = coeff
    return IsobaricPoly(n, k, terms)


def gfp_root_matrix(q: RationalLike, k: int, n: int, sign: int = -1) -> HessenbergMatrix:
    """Hessenberg representation of the degree-n root polynomial.

    Cell (i, i-j+1) holds (1/i)(j q + (i - j)) t_j for j = 1..i, zeroed past
    the part bound; column 1 is q t_i and the diagonal is (1/i)(q + i - 1) t_1.
    Superdiagonal -1 makes the determinant equal gfp_root_closed(q, k, n);
    +1 does the same through the permanent.
    """
    q = Fraction(q)
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    rows = []
    for i in range(1, n + 1):
        row = []
        for c in range(1, i + 1):
            j = i - c + 1
            if j > k:
                row.append(Cell.make(0))
            else:
                row.append(Cell.make(Fraction(j * q + (i - j), i), j))
        rows.append(row)
    return HessenbergMatrix(n, k, sign, rows, symbolic=True)


def _degenerate_q(q: Fraction, n: int) -> bool:
    return q.denominator == 1 and -(n - 2) <= q <= 0


def gfp_root_stirling_matrix(q: RationalLike, k: int, n: int) -> HessenbergMatrix:
    """Determinant-side root matrix with cells written through B-ratios.

    Row i holds s_j = (1/i)(j * B_{i-j}(q)/B_{i-j-1}(q) - (i-j)(j-1)) t_j at
    column i-j+1 for j < i, and s_i = B_0(q) t_i in column 1.  Since
    B_m(q)/B_{m-1}(q) = q + m wherever defined, the cells agree with
    :func:`gfp_root_matrix`; the ratios blow up exactly when q is an integer
    in 0, -1, ..., -(n-2), and that raises :class:`DegenerateQError`.
    """
    q = Fraction(q)
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    if _degenerate_q(q, n):
        raise DegenerateQError(
            f"B-ratio cells undefined at q={q} for size {n}: a denominator B_m(q) vanishes"
        )
    rows = []
    for i in range(1, n + 1):
        row = []
        for c in range(1, i + 1):
            j = i - c + 1
            if j > k:
                row.append(Cell.make(0))
            elif j == i:
                row.append(Cell.make(stirling_B(0, q), i))
            else:
                ratio = stirling_B(i - j, q) / stirling_B(i - j - 1, q)
                row.append(Cell.make(Fraction(j * ratio - (i - j) * (j - 1), i), j))
        rows.append(row)
    return HessenbergMatrix(n, k, -1, rows, symbolic=True)


def gfp_root_sequence(q: RationalLike, k: int) -> PolySequence:
    """The whole q-th power as a lazy graded sequence (degree-0 term is 1)."""
    return PolySequence(lambda n: gfp_root_closed(q, k, n))


# -- weighted roots --------------------------------------------------------


class OmegaPolynomial:
    """Exact polynomial in weight variables w1, w2, ... (sparse, integer keys).

    Keys are exponent tuples with trailing zeros stripped, so (3, 2) and
    (3, 2, 0) are the same monomial.  Only the little algebra needed by the
    total derivative lives here: addition of term maps, the derivative
    itself, and evaluation at a weight vector.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[tuple, RationalLike], Sequence[tuple]] = ()) -> None:
        merged: dict[tuple[int, ...], Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, c in items:
            c = Fraction(c)
            if c == 0:
                continue
            key = tuple(exps)
            while key and key[-1] == 0:
                key = key[:-1]
            if any(e < 0 for e in key):
                raise ValueError(f"negative exponent in {key}")
            merged[key] = merged.get(key, Fraction(0)) + c
        self._terms = {e: c for e, c in merged.items() if c != 0}

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: RationalLike = 1) -> "OmegaPolynomial":
        return cls([(tuple(exponents), coeff)])

    def d1(self) -> "OmegaPolynomial":
        """Total derivative: sum over variables of e_i * (monomial with the
        i-th exponent lowered by one)."""
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self._terms.items():
            for i, e in enumerate(exps):
                if e:
                    lowered = exps[:i] + (e - 1,) + exps[i + 1 :]
                    while lowered and lowered[-1] == 0:
                        lowered = lowered[:-1]
                    out[lowered] = out.get(lowered, Fraction(0)) + c * e
        return OmegaPolynomial(out)

    def evaluate(self, omega: Callable[[int], Fraction]) -> Fraction:
        total = Fraction(0)
        for exps, c in self._terms.items():
            prod = c
            for i, e in enumerate(exps, start=1):
                if e:
                    prod *= Fraction(omega(i)) ** e
            total += prod
        return total

    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OmegaPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "OmegaPolynomial(0)"
        bits = []
        for exps, c in sorted(self._terms.items(), reverse=True):
            mono = " ".join(f"w{i}^{e}" if e > 1 else f"w{i}" for i, e in enumerate(exps, start=1) if e)
            bits.append(f"{c} {mono}".strip())
        return "OmegaPolynomial(" + " + ".join(bits) + ")"


def total_derivative(p: OmegaPolynomial, j: int) -> OmegaPolynomial:
    """j-th iterate of the total derivative (j = 0 returns p unchanged)."""
    if j < 0:
        raise ValueError("derivative order must be >= 0")
    out = p
    for _ in range(j):
        out = out.d1()
    return out


def wip_root_coeff(omega: Callable[[int], Fraction], alpha: ExponentVector, q: RationalLike) -> Fraction:
    """Coefficient of t^alpha in the q-th power of the weighted family.

    With m = |alpha| and w^alpha the weight monomial w1^a1 ... wk^ak,

        (1 / prod(alpha_i!)) * sum_{j=0..m-1} C(m-1, j) B_{-j}(q) D^(m-1-j)(w^alpha)

    evaluated at the given weights, where D is the total derivative and
    B_{-j} the descending factorial operator.  The divisor is the product of
    the factorials of the multiplicities, not the factorial of their product.
    """
    q = Fraction(q)
    m = alpha.norm
    if m < 1:
        raise ValueError("coefficient formula needs at least one part")
    denom = 1
    for a in alpha.multiplicities:
        denom *= factorial(a)
    values = []
    cur = OmegaPolynomial.monomial(alpha.multiplicities)
    for _ in range(m):
        values.append(cur.evaluate(omega))
        cur = cur.d1()
    total = Fraction(0)
    for j in range(m):
        total += comb(m - 1, j) * stirling_B(-j, q) * values[m - 1 - j]
    return total / denom


def wip_root(omega: Callable[[int], Fraction], k: int, n: int, q: RationalLike) -> IsobaricPoly:
    """Degree-n term of the q-th convolution power of the weighted family.

    The underlying degree-0 term is 1 (convolution convention).  With all
    weights equal to 1 this collapses to :func:`gfp_root_closed`.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    if k < 1:
        raise ValueError("part bound k must be >= 1")
    if n == 0:
        return IsobaricPoly.constant(1, k)
    terms = {}
    for alpha in exponent_vectors(n, k):
        coeff = wip_root_coeff(omega, alpha, q)
        if coeff != 0:
            terms[alpha] = coeff
    return IsobaricPoly(n, k, terms)
