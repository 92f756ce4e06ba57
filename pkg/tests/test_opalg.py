"""Exact operator algebra tests.

Normal ordering is checked against an independent oracle: a truncated
harmonic-oscillator ladder representation of x and p, where operator
products are plain matrix products.  Truncation only corrupts the
bottom-right corner, so block comparisons on the upper-left are exact to
roundoff.
"""
import random
from fractions import Fraction

import numpy as np
import pytest

from ptcontour.errors import (NonHermitianRho, NonTerminating, NotCanonical,
                              NotHermitizable)
from ptcontour.catalog import (ADJACENT, LOWER_PT, LOWER_PT_B5, SQRT_IX,
                               STANDARD_FIVE, UPPER_PT)
from ptcontour.opalg import (ANCHOR, ANCHOR_PARITY, ContourParams,
                             OperatorExpr, adjoint, bch_conjugate, build_h1,
                             canonical_swap, commutator, dyson_coefficients,
                             hermitian_form, hermitize, is_hermitian,
                             multiply, substitute_linear)
from ptcontour.rational import GaussianRational as Q

X = OperatorExpr.x()
P = OperatorExpr.p()
ONE = OperatorExpr.one()
I = Q(0, 1)


def op(terms):
    return OperatorExpr({k: Q(*v) if isinstance(v, tuple) else Q(v)
                         for k, v in terms.items()})


# --- independent oracle: truncated ladder representation --------------------

def ladder_xp(dim):
    a = np.diag(np.sqrt(np.arange(1.0, dim)), 1)
    x = (a + a.T) / np.sqrt(2.0)
    p = 1j * (a.T - a) / np.sqrt(2.0)
    return x, p


def to_matrix(expr, dim=30):
    x, p = ladder_xp(dim)
    out = np.zeros((dim, dim), dtype=complex)
    for (m, n), c in expr.terms.items():
        out += complex(c) * (np.linalg.matrix_power(x, m)
                             @ np.linalg.matrix_power(p, n))
    return out


def assert_matches_oracle(product_expr, a, b, dim=30, block=20):
    lhs = to_matrix(product_expr, dim)[:block, :block]
    rhs = (to_matrix(a, dim) @ to_matrix(b, dim))[:block, :block]
    scale = max(np.abs(rhs).max(), 1.0)
    assert np.abs(lhs - rhs).max() < 1e-10 * scale


def random_operator(rng, max_degree=4):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        m = rng.randint(0, max_degree)
        n = rng.randint(0, max_degree - m)
        terms[(m, n)] = Q(rng.randint(-3, 3), rng.randint(-3, 3))
    return OperatorExpr(terms)


# --- multiply ----------------------------------------------------------------

def test_multiply_px():
    assert P * X == op({(1, 1): 1, (0, 0): (0, -1)})        # xp - i


def test_multiply_xp_already_ordered():
    assert X * P == op({(1, 1): 1})


def test_multiply_p2_x():
    expected = op({(1, 2): 1, (0, 1): (0, -2)})             # xp^2 - 2ip
    got = (P * P) * X
    assert got == expected
    assert_matches_oracle(got, P * P, X)


def test_multiply_against_ladder_oracle_random():
    rng = random.Random(20260809)
    for _ in range(25):
        a = random_operator(rng)
        b = random_operator(rng)
        assert_matches_oracle(multiply(a, b), a, b, dim=40, block=20)


def test_multiply_bilinear_and_associative():
    rng = random.Random(777)
    for _ in range(200):
        a, b, c = (random_operator(rng) for _ in range(3))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
        s = Q(rng.randint(-3, 3), rng.randint(-3, 3))
        assert multiply(a.scale(s) + b, c) == multiply(a, c).scale(s) + multiply(b, c)


# --- commutator ----------------------------------------------------------------

def test_commutator_defining_relation():
    assert commutator(X, P) == op({(0, 0): (0, 1)})


def test_commutator_first_term_of_toy_chain():
    # [-x^2/2, p^2 + 2ixp] = 2x^2 - 2ixp - 1
    s = op({(2, 0): Fraction(-1, 2)})
    h = op({(0, 2): 1, (1, 1): (0, 2)})
    expected = op({(2, 0): 2, (1, 1): (0, -2), (0, 0): -1})
    assert commutator(s, h) == expected
    # cross-check with the ladder oracle: [A,B] = AB - BA
    lhs = to_matrix(commutator(s, h))[:20, :20]
    ma, mb = to_matrix(s), to_matrix(h)
    rhs = (ma @ mb - mb @ ma)[:20, :20]
    assert np.abs(lhs - rhs).max() < 1e-10


def test_commutator_generator_with_x():
    # [f p^3 + g p, x] = -3if p^2 - ig
    f, g = Fraction(1, 96), Fraction(-1)
    s = op({(0, 3): f, (0, 1): g})
    expected = OperatorExpr({(0, 2): Q(0, -3 * f), (0, 0): Q(0, -g)})
    assert commutator(s, X) == expected


def test_commutator_antisymmetry_and_jacobi():
    rng = random.Random(31337)
    for _ in range(40):
        a, b, c = (random_operator(rng, 3) for _ in range(3))
        assert commutator(a, b) == -commutator(b, a)
        jac = (commutator(a, commutator(b, c))
               + commutator(b, commutator(c, a))
               + commutator(c, commutator(a, b)))
        assert jac.is_zero()


# --- adjoint ----------------------------------------------------------------

def test_adjoint_xp():
    assert adjoint(X * P) == op({(1, 1): 1, (0, 0): (0, -1)})


def test_adjoint_detects_non_hermitian():
    h = op({(0, 2): 1, (1, 1): (0, 2)})      # p^2 + 2ixp
    assert adjoint(h) != h
    assert not is_hermitian(h)


def test_adjoint_of_hermitian_equivalent():
    h = hermitize(LOWER_PT).h
    assert h == op({(0, 4): Fraction(1, 64), (0, 1): Fraction(-1, 2),
                    (2, 0): 16})
    assert adjoint(h) == h


def test_adjoint_involution_and_antihomomorphism():
    rng = random.Random(99)
    for _ in range(60):
        a, b = random_operator(rng), random_operator(rng)
        assert adjoint(adjoint(a)) == a
        assert adjoint(multiply(a, b)) == multiply(adjoint(b), adjoint(a))


def test_is_hermitian_examples():
    assert is_hermitian(op({(0, 2): 1, (2, 0): 1, (0, 0): -1}))
    assert not is_hermitian(op({(0, 2): 1, (1, 1): (0, 2)}))
    assert is_hermitian(hermitize(ADJACENT).h)


# --- transformed Hamiltonian -------------------------------------------------

def test_build_h1_reference_contour():
    # (1+ix)p^2 + p/2 - 16(1+ix)^2
    expected = (multiply(op({(0, 0): 1, (1, 0): (0, 1)}), op({(0, 2): 1}))
                + op({(0, 1): Fraction(1, 2)})
                + multiply(op({(0, 0): 1, (1, 0): (0, 1)}),
                           op({(0, 0): 1, (1, 0): (0, 1)})).scale(-16))
    assert build_h1(LOWER_PT) == expected


def test_build_h1_upper_contour():
    # 4(1+ix)p^2 + 2p - (1+ix)^2
    w = op({(0, 0): 1, (1, 0): (0, 1)})
    expected = (multiply(w, op({(0, 2): 1})).scale(4) + op({(0, 1): 2})
                + multiply(w, w).scale(-1))
    assert build_h1(UPPER_PT) == expected


def test_build_h1_sqrt_ix():
    # -4ix p^2 - 2p + x^2
    expected = op({(1, 2): (0, -4), (0, 1): -2, (2, 0): 1})
    assert build_h1(SQRT_IX) == expected


# --- conjugation series ---------------------------------------------------------

def test_bch_toy_chain():
    s = op({(2, 0): Fraction(-1, 2)})
    h = op({(0, 2): 1, (1, 1): (0, 2)})
    assert bch_conjugate(s, h) == op({(0, 2): 1, (2, 0): 1, (0, 0): -1})


def test_bch_toy_chain_terminates_at_depth_two():
    s = op({(2, 0): Fraction(-1, 2)})
    h = op({(0, 2): 1, (1, 1): (0, 2)})
    # the depth-3 nested commutator vanishes, so depth cap 3 suffices ...
    assert bch_conjugate(s, h, max_depth=3) == op({(0, 2): 1, (2, 0): 1,
                                                   (0, 0): -1})
    # ... while a cap of 2 still sees a nonzero remainder
    with pytest.raises(NonTerminating):
        bch_conjugate(s, h, max_depth=2)


def test_bch_identity_conjugation():
    rng = random.Random(5)
    for _ in range(10):
        a = random_operator(rng)
        assert bch_conjugate(OperatorExpr.zero(), a) == a


def test_bch_reproduces_hermitian_form():
    s = op({(0, 3): Fraction(1, 96), (0, 1): -1})
    got = bch_conjugate(s, build_h1(LOWER_PT))
    assert got == op({(0, 4): Fraction(1, 64), (0, 1): Fraction(-1, 2),
                      (2, 0): 16})


def test_bch_degree_raising_generator_raises():
    s = op({(2, 2): 1})
    with pytest.raises(NonTerminating):
        bch_conjugate(s, X, max_depth=8)


def test_bch_is_homomorphism():
    # conjugation distributes over products, exactly
    rng = random.Random(2718)
    for _ in range(15):
        s = OperatorExpr({(0, 3): Q(rng.randint(-2, 2), rng.randint(-2, 2)),
                          (0, 1): Q(rng.randint(-2, 2), rng.randint(-2, 2))})
        a = random_operator(rng, 2)
        b = random_operator(rng, 2)
        lhs = bch_conjugate(s, multiply(a, b))
        rhs = multiply(bch_conjugate(s, a), bch_conjugate(s, b))
        assert lhs == rhs


# --- hermitize ------------------------------------------------------------------

def test_hermitize_reference_contour():
    h, f, g = hermitize(LOWER_PT)
    assert f == Q(Fraction(1, 96))
    assert g == Q(-1)
    assert h == op({(0, 4): Fraction(1, 64), (0, 1): Fraction(-1, 2),
                    (2, 0): 16})


def test_hermitize_upper_contour():
    h, f, g = hermitize(UPPER_PT)
    assert h == op({(0, 4): 4, (0, 1): -2, (2, 0): 1})
    assert f == Q(Fraction(2, 3))
    assert g == Q(-1)


def test_hermitize_b_independence():
    base = hermitize(LOWER_PT)
    shifted = hermitize(LOWER_PT_B5)
    assert shifted.h == base.h
    assert shifted.g == Q(-5)
    for b in (0, 1, 5, -3):
        params = ContourParams(LOWER_PT.a, Q(b), LOWER_PT.c)
        assert hermitize(params).h == base.h


def test_hermitize_matches_closed_form_everywhere():
    for params in STANDARD_FIVE:
        res = hermitize(params)
        assert res.h == hermitian_form(params)
        assert is_hermitian(res.h)
        f, g = dyson_coefficients(params)
        assert (res.f, res.g) == (f, g)


def test_hermitize_rejects_complex_a2c():
    with pytest.raises(NotHermitizable):
        hermitize(ContourParams(Q(1), Q(1), Q(0, 1)))     # a^2 c = i


def test_hermitize_rejects_complex_b_over_c():
    with pytest.raises(NonHermitianRho):
        hermitize(ContourParams(Q(0, -2), Q(0, 1), Q(1)))  # b/c = i


# --- canonical substitutions -----------------------------------------------------

def test_substitute_identity():
    rng = random.Random(11)
    for _ in range(10):
        a = random_operator(rng)
        assert substitute_linear(a, X, P) == a


def test_substitute_swap_to_anchor():
    # x -> -p, p -> x applied to 4p^4 - 2p + x^2
    h = op({(0, 4): 4, (0, 1): -2, (2, 0): 1})
    got = substitute_linear(h, OperatorExpr.monomial(0, 1, -1), X)
    assert got == ANCHOR


def test_substitute_accepts_canonical_pair():
    x_img = OperatorExpr.monomial(0, 1, 2)                  # 2p
    p_img = OperatorExpr.monomial(1, 0, Fraction(-1, 2))    # -x/2
    assert commutator(x_img, p_img) == op({(0, 0): (0, 1)})
    substitute_linear(ANCHOR, x_img, p_img)                 # must not raise


def test_substitute_rejects_non_canonical():
    with pytest.raises(NotCanonical):
        substitute_linear(ANCHOR, X, OperatorExpr.monomial(0, 1, 2))


def test_canonical_swap_all_contours_reach_anchor():
    # the composite substitution + dilation lands on p^2 + 4x^4 - 2x for the
    # whole matrix; the parity image never occurs for these parameters
    for params in STANDARD_FIVE:
        res = canonical_swap(hermitize(params).h, params)
        assert res.operator == ANCHOR
        assert res.parity_flipped is False


def test_canonical_swap_parity_flag_on_parity_image():
    # feed the parity image through the inverse-direction check to confirm
    # the flag fires when the swapped operator is the +2x form
    h = hermitize(UPPER_PT).h
    mirrored = substitute_linear(h, -1 * X, -1 * P)   # x -> -x, p -> -p
    res = canonical_swap(mirrored, UPPER_PT)
    assert res.parity_flipped is True
    assert res.operator == ANCHOR_PARITY


# --- serialization ----------------------------------------------------------------

def test_json_round_trip_exact():
    h = hermitize(LOWER_PT).h
    assert OperatorExpr.loads(h.dumps()) == h


def test_json_canonical_order_and_fields():
    obj = (X * P + op({(0, 0): (Fraction(1, 3), Fraction(-2, 5))})).to_json_obj()
    assert obj == sorted(obj, key=lambda t: (t["m"], t["n"]))
    assert obj[0] == {"m": 0, "n": 0, "re": "1/3", "im": "-2/5"}


def test_json_round_trip_random():
    rng = random.Random(42)
    for _ in range(30):
        a = random_operator(rng)
        assert OperatorExpr.from_json_obj(a.to_json_obj()) == a
