"""End-to-end identity checks, one test per advertised guarantee.

Each test is an exact-arithmetic identity or a frozen fixture; there are no
tolerances anywhere.  Runtime for the whole module stays well under a minute.
"""

import random
from fractions import Fraction

import pytest

from isobaric import (
    Cell,
    CorePolynomial,
    DegenerateQError,
    ExponentVector,
    IsobaricPoly,
    WeightVector,
    build_minus,
    build_plus,
    companion_matrix,
    companion_window,
    convolve,
    convolve_sequences,
    dense_det,
    different_matrix,
    dirichlet_convolve_local,
    gfp,
    gfp_root_closed,
    gfp_root_matrix,
    gfp_root_sequence,
    gfp_root_stirling_matrix,
    glp,
    glp_from_gfp,
    hessenberg_value,
    known_function,
    local_power,
    rep_check,
    root_verify,
    wip_closed,
    wip_root,
)
from isobaric.hessenberg import HessenbergMatrix
from isobaric.multiplicative import KNOWN_FUNCTIONS

from helpers import FROZEN_WEIGHTS, mat_pow, naive_det, naive_perm

Q_GRID = (Fraction(1, 2), Fraction(-1), Fraction(2, 3), Fraction(3), Fraction(-5, 2))

# Superset of Q_GRID with at least 8 distinct points: every identity below is
# polynomial in q of degree <= 7, so agreement on 9 points proves it.
Q_WIDE = Q_GRID + (Fraction(7, 3), Fraction(-9, 4), Fraction(5), Fraction(-4))

WEIGHT_FAMILIES = (
    WeightVector.ones(),
    WeightVector.naturals(),
    WeightVector.from_values(FROZEN_WEIGHTS),
)


def test_weighted_hessenberg_representation():
    # perm of the +1 matrix = det of the -1 matrix = closed-formula value
    for k in (2, 3, 4):
        for omega in WEIGHT_FAMILIES:
            for n in range(1, 10):
                assert rep_check(omega, k, n), (k, omega.label, n)

    # degree-4 permanent, written out coefficient by coefficient
    for omega in WEIGHT_FAMILIES:
        w1, w2, w3, w4 = (omega(j) for j in (1, 2, 3, 4))
        expected = {
            (4, 0, 0, 0): w1,
            (2, 1, 0, 0): 2 * w1 + w2,
            (0, 2, 0, 0): w2,
            (1, 0, 1, 0): w1 + w3,
            (0, 0, 0, 1): w4,
        }
        value = hessenberg_value(build_plus(omega, 4, 4))
        assert isinstance(value, IsobaricPoly)
        assert len(value) == len(expected)
        for alpha, coeff in expected.items():
            assert value.coefficient(ExponentVector(alpha)) == coeff, (omega.label, alpha)


def test_root_matrix_det_and_perm_match_closed_form():
    for q in Q_GRID:
        for k in (2, 3):
            for n in range(1, 10):
                closed = gfp_root_closed(q, k, n)
                assert hessenberg_value(gfp_root_matrix(q, k, n, sign=-1)) == closed
                assert hessenberg_value(gfp_root_matrix(q, k, n, sign=1)) == closed

    # the size-3 and size-4 matrices, cell for cell
    def expected_cells(q, n):
        rows = {
            (1, 1): (q, 1),
            (2, 1): (q, 2),
            (2, 2): ((q + 1) / 2, 1),
            (3, 1): (q, 3),
            (3, 2): ((2 * q + 1) / 3, 2),
            (3, 3): ((q + 2) / 3, 1),
            (4, 1): (q, 4),
            (4, 2): ((3 * q + 1) / 4, 3),
            (4, 3): ((2 * q + 2) / 4, 2),
            (4, 4): ((q + 3) / 4, 1),
        }
        return {pos: Cell.make(c, t) for pos, (c, t) in rows.items() if pos[0] <= n}

    for q in Q_WIDE:
        for n in (3, 4):
            for sign in (-1, 1):
                m = gfp_root_matrix(q, n, n, sign=sign)
                want = expected_cells(q, n)
                for i in range(1, n + 1):
                    for j in range(1, n + 1):
                        if j == i + 1:
                            assert m.cell(i, j) == Cell(Fraction(sign), None)
                        elif j > i + 1:
                            assert m.cell(i, j) == Cell(Fraction(0), None)
                        else:
                            assert m.cell(i, j) == want[(i, j)], (q, n, i, j)


def test_stirling_matrix_det_and_degenerate_rejection():
    def degenerate(q, n):
        return q.denominator == 1 and -(n - 2) <= q <= 0

    for q in Q_GRID:
        for k in (2, 3):
            for n in range(1, 10):
                if degenerate(q, n):
                    with pytest.raises(DegenerateQError):
                        gfp_root_stirling_matrix(q, k, n)
                else:
                    m = gfp_root_stirling_matrix(q, k, n)
                    assert hessenberg_value(m) == gfp_root_closed(q, k, n), (q, k, n)

    # the rejection is a ValueError subclass with a message naming the cause
    with pytest.raises(DegenerateQError, match="q=-1"):
        gfp_root_stirling_matrix(Fraction(-1), 2, 3)


def test_root_sequence_recursion():
    # row recursion: n-th root polynomial = sum over j of
    # (1/n)(jq + n - j) t_j times the (n-j)-th root polynomial
    for q in Q_WIDE:
        for k in (2, 3):
            for n in range(1, 8):
                total = IsobaricPoly.zero(n, k)
                for j in range(1, n + 1):
                    s = (j * q + (n - j)) / n
                    total = total + gfp_root_closed(q, k, n - j).times_part(j).scale(s)
                assert total == gfp_root_closed(q, k, n), (q, k, n)


def test_root_group_laws():
    # m-fold self-convolution of the 1/m power restores the base sequence
    for k in (2, 3):
        for m in (2, 3, 4):
            root = gfp_root_sequence(Fraction(1, m), k)
            acc = root
            for _ in range(m - 1):
                acc = convolve_sequences(acc, root)
            for n in range(0, 9):
                assert acc(n) == gfp(k, n), (k, m, n)

    # powers add under convolution
    for a in Q_GRID:
        for b in Q_GRID:
            for n in range(0, 7):
                got = convolve(gfp_root_sequence(a, 2), gfp_root_sequence(b, 2), n)
                assert got == gfp_root_closed(a + b, 2, n), (a, b, n)

    # power zero is the convolution identity, power one is the base family
    for k in (2, 3):
        assert gfp_root_closed(0, k, 0) == IsobaricPoly.constant(1, k)
        for n in range(1, 9):
            assert gfp_root_closed(0, k, n).is_zero
            assert gfp_root_closed(1, k, n) == gfp(k, n)


def test_weighted_root_formulas():
    # degrees 0..3 written out, checked for three weight families
    for omega in WEIGHT_FAMILIES:
        w1, w2, w3 = omega(1), omega(2), omega(3)
        for q in Q_WIDE:
            displays = {
                0: {(0, 0, 0): Fraction(1)},
                1: {(1, 0, 0): q * w1},
                2: {
                    (2, 0, 0): q * w1 + Fraction(1, 2) * q * (q - 1) * w1**2,
                    (0, 1, 0): q * w2,
                },
                3: {
                    (3, 0, 0): q * w1
                    + q * (q - 1) * w1**2
                    + Fraction(1, 6) * q * (q - 1) * (q - 2) * w1**3,
                    (1, 1, 0): q * (w1 + w2) + q * (q - 1) * w1 * w2,
                    (0, 0, 1): q * w3,
                },
            }
            for n, coeffs in displays.items():
                got = wip_root(omega, 3, n, q)
                nonzero = {a: c for a, c in coeffs.items() if c != 0}
                assert len(got) == len(nonzero), (omega.label, q, n)
                for alpha, coeff in nonzero.items():
                    assert got.coefficient(ExponentVector(alpha)) == coeff

    # all-ones weights collapse to the base-family root; this pins the
    # product-of-factorials denominator (alpha = (2,2) separates it from the
    # factorial-of-product reading)
    ones = WeightVector.ones()
    for q in Q_GRID:
        for k in (2, 3):
            for n in range(0, 9):
                assert wip_root(ones, k, n, q) == gfp_root_closed(q, k, n), (q, k, n)


def test_companion_window_structure():
    cores = (
        CorePolynomial.numeric((2,)),
        CorePolynomial.numeric((1, 1)),
        CorePolynomial.numeric((Fraction(1, 2), Fraction(-3))),
        CorePolynomial.numeric((1, 2, 3)),
    )
    for core in cores:
        k = core.k
        win = companion_window(core, -1 - k, 8)
        a = companion_matrix(core)
        for m in range(-2, 5):
            assert win.block(m) == mat_pow(a, m), (core, m)
        for n in range(0, 9):
            assert win.rightmost(n) == gfp(k, n).evaluate(core.coefficients), (core, n)
        for m in range(0, 7):
            assert win.block_trace(m) == glp(k, m).evaluate(core.coefficients), (core, m)

    fib = companion_window(CorePolynomial.numeric((1, 1)), 0, 6)
    assert [fib.rightmost(n) for n in range(0, 7)] == [1, 1, 2, 3, 5, 8, 13]
    assert [fib.block_trace(m) for m in range(1, 6)] == [1, 3, 4, 7, 11]


def test_lucas_side_recovered_from_fibonacci_side():
    for k in range(1, 5):
        got = glp_from_gfp(CorePolynomial.generic(k), 8)
        assert got == [glp(k, n) for n in range(1, 9)], k
    lucas = glp_from_gfp(CorePolynomial.numeric((1, 1)), 8)
    assert lucas == [1, 3, 4, 7, 11, 18, 29, 47]


def test_dirichlet_convolution_roots():
    fixtures = (("zeta", 2), ("phi", 2), ("phi", 3), ("sigma", 2), ("tau", 2), ("mobius", 2))
    for name, p in fixtures:
        f = known_function(name, p, 8)
        for m in (2, 3):
            assert root_verify(f, m), (name, p, m)

    half = local_power(known_function("zeta", 2, 4), Fraction(1, 2))
    assert half.values == (
        Fraction(1),
        Fraction(1, 2),
        Fraction(3, 8),
        Fraction(5, 16),
        Fraction(35, 128),
    )

    for name in KNOWN_FUNCTIONS:
        for p in (2, 3):
            f = known_function(name, p, 8)
            eps = known_function("epsilon", p, 8)
            assert dirichlet_convolve_local(f, local_power(f, -1)) == eps, (name, p)


def test_value_recursion_against_naive_expansion():
    rng = random.Random(20260822)
    for case in range(100):
        n = case % 7 + 1
        sign = -1 if case % 2 else 1
        rows = [
            [Cell.make(Fraction(rng.randint(-9, 9), rng.randint(1, 5))) for _ in range(i + 1)]
            for i in range(n)
        ]
        m = HessenbergMatrix(n, 1, sign, rows)
        dense = [[m.cell(i, j).coeff for j in range(1, n + 1)] for i in range(1, n + 1)]
        expected = naive_det(dense) if sign == -1 else naive_perm(dense)
        assert hessenberg_value(m) == expected, case


def test_different_matrix_determinant_k2():
    rng = random.Random(20260822)
    for case in range(20):
        t1 = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        t2 = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        d = dense_det(different_matrix(CorePolynomial.numeric((t1, t2))))
        disc = t1 * t1 + 4 * t2
        assert abs(d) == abs(disc), (t1, t2)
        # the computed sign is opposite the discriminant; pinned so a silent
        # convention change is caught
        assert d == -disc, (t1, t2)
