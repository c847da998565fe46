"""Algebra unit tests: table structure, arithmetic, and the two scores.

Independent oracles used here:
  * ``naive_mul`` extends the table bilinearly by looping over all
    coefficient pairs through ``entry`` (no block shortcuts);
  * ``matrix_rep`` with numpy matmul checks products a third way;
  * ``block_entry`` rebuilds table entries from the two-element block
    pattern without reusing the production index arithmetic.
"""

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitsearch.algebra import (
    ZERO,
    HyperNumber,
    add,
    build_ir_table,
    est,
    matrix_rep,
    mul,
    scale,
    sim,
    sim1,
    signed_projection,
    unit_element,
)

from conftest import hn, random_hn


def naive_mul(table, x, y):
    """Bilinear extension computed pair-by-pair through entry()."""
    out = {}
    for a, xa in x.coeffs.items():
        for b, yb in y.coeffs.items():
            c = table.entry(a, b)
            if c != ZERO:
                out[c] = out.get(c, 0.0) + xa * yb
    return HyperNumber(x.dim, out)


def block_entry(a, b):
    """Table entry from first principles: pair (odd, even) blocks."""
    block_a, block_b = (a - 1) // 2, (b - 1) // 2
    if block_a != block_b:
        return ZERO
    odd, even = 2 * block_a + 1, 2 * block_a + 2
    if a % 2 == 1 and b % 2 == 1:
        return odd
    if a % 2 == 0 and b % 2 == 0:
        return odd
    return even


# ---------------------------------------------------------------- table


def test_table_paper_entries_n2():
    t = build_ir_table(2)
    assert t.entry(1, 2) == 2
    assert t.entry(2, 2) == 1
    assert t.entry(2, 3) == ZERO
    assert t.entry(3, 4) == 4


def test_table_paper_entries_n1():
    t = build_ir_table(1)
    assert t.entry(1, 1) == 1
    assert t.entry(1, 2) == 2
    assert t.entry(2, 2) == 1


def test_table_derived_entries_n3():
    t = build_ir_table(3)
    assert t.entry(5, 6) == block_entry(5, 6) == 6
    assert t.entry(6, 6) == block_entry(6, 6) == 5
    assert t.entry(1, 6) == block_entry(1, 6) == ZERO


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_table_matches_block_oracle_exhaustively(n):
    t = build_ir_table(n)
    for a in range(1, 2 * n + 1):
        for b in range(1, 2 * n + 1):
            assert t.entry(a, b) == block_entry(a, b)


def test_table_symmetric_and_cross_block_zero():
    t = build_ir_table(4)
    for a in range(1, 9):
        for b in range(1, 9):
            assert t.entry(a, b) == t.entry(b, a)
            if (a + 1) // 2 != (b + 1) // 2:
                assert t.entry(a, b) == ZERO


def test_table_rejects_zero_terms():
    with pytest.raises(ValueError):
        build_ir_table(0)


def test_table_rejects_oversized():
    with pytest.raises(ValueError):
        build_ir_table(2**20 + 1)


def test_table_entry_range_check():
    t = build_ir_table(2)
    with pytest.raises(ValueError):
        t.entry(0, 1)
    with pytest.raises(ValueError):
        t.entry(1, 5)


# ----------------------------------------------------------- hypernumber


def test_hypernumber_drops_zero_coefficients():
    x = HyperNumber(4, {1: 0.0, 2: 1.0})
    assert x.coeffs == {2: 1.0}
    assert x.coeff(1) == 0.0


def test_hypernumber_rejects_nan_and_inf():
    with pytest.raises(ValueError):
        HyperNumber(2, {1: float("nan")})
    with pytest.raises(ValueError):
        HyperNumber(2, {2: float("inf")})


def test_hypernumber_rejects_out_of_range_index():
    with pytest.raises(ValueError):
        HyperNumber(4, {5: 1.0})


def test_dense_round_trip():
    x = hn(0.5, 0.0, -0.25, 1.0)
    assert x.dense() == [0.5, 0.0, -0.25, 1.0]
    assert HyperNumber.from_dense(x.dense()) == x


# ------------------------------------------------------------------ mul


def test_mul_paper_uncertainty_product():
    # (1/2 e1 + 1/2 e2) * e1 = 1/2 e1 + 1/2 e2
    t = build_ir_table(1)
    q = hn(0.5, 0.5)
    d = hn(1.0, 0.0)
    assert mul(t, q, d) == hn(0.5, 0.5)


def test_mul_e2_squared_is_e1():
    t = build_ir_table(1)
    e2 = HyperNumber.basis(2, 2)
    assert mul(t, e2, e2) == HyperNumber.basis(2, 1)


def test_mul_unit_element_is_identity():
    rng = random.Random(7)
    for n in (1, 2, 5):
        t = build_ir_table(n)
        e = unit_element(t)
        for _ in range(20):
            x = random_hn(rng, n)
            assert mul(t, e, x) == x
            assert mul(t, x, e) == x


def test_mul_matches_naive_oracle():
    rng = random.Random(11)
    for n in (1, 2, 4, 8):
        t = build_ir_table(n)
        for _ in range(25):
            x, y = random_hn(rng, n), random_hn(rng, n)
            got = mul(t, x, y)
            want = naive_mul(t, x, y)
            assert got.dim == want.dim
            for i in range(1, 2 * n + 1):
                assert got.coeff(i) == pytest.approx(want.coeff(i), abs=1e-12)


def test_mul_dimension_mismatch():
    t = build_ir_table(2)
    with pytest.raises(ValueError):
        mul(t, hn(1.0, 0.0), hn(1.0, 0.0, 0.0, 0.0))
    with pytest.raises(ValueError):
        mul(t, hn(1.0, 0.0), hn(1.0, 0.0))


# ------------------------------------------------------------ add/scale


def test_add_basis_elements():
    assert add(HyperNumber.basis(2, 1), HyperNumber.basis(2, 2)) == hn(1.0, 1.0)


def test_scale_zero_gives_zero():
    assert scale(0.0, hn(0.3, -0.7)) == HyperNumber.zero(2)


def test_scale_doubles_half():
    assert scale(2.0, hn(0.5, 0.0)) == HyperNumber.basis(2, 1)


def test_add_dimension_mismatch():
    with pytest.raises(ValueError):
        add(hn(1.0, 0.0), hn(1.0, 0.0, 0.0, 0.0))


# ------------------------------------------------------------------ est


def test_est_sign_convention():
    assert est(HyperNumber.basis(2, 1)) == 1.0
    assert est(HyperNumber.basis(2, 2)) == -1.0
    assert est(HyperNumber.zero(4)) == 0.0


def test_unit_element_shape():
    assert unit_element(build_ir_table(1)) == hn(1.0, 0.0)
    assert unit_element(build_ir_table(3)) == hn(1.0, 0.0, 1.0, 0.0, 1.0, 0.0)


# ------------------------------------------------------------------ sim


def test_sim_paper_case_1():
    t = build_ir_table(1)
    assert sim(t, hn(0.5, 0.5), hn(1.0, 0.0)) == pytest.approx(0.0, abs=1e-12)


def test_sim_paper_case_2():
    t = build_ir_table(1)
    q = hn(0.5, 0.5)
    assert sim(t, q, q) == pytest.approx(0.0, abs=1e-12)


def test_sim_paper_case_3():
    t = build_ir_table(1)
    assert sim(t, hn(1.0, 0.0), hn(0.8, 0.2)) == pytest.approx(0.6, abs=1e-12)


def test_sim_negated_query_derived():
    # e2 * e1 = e2, est(e2) = -1 (hand-evaluated through the table)
    t = build_ir_table(1)
    assert sim(t, hn(0.0, 1.0), hn(1.0, 0.0)) == pytest.approx(-1.0, abs=1e-12)


def test_sim_equals_signed_projection_dot():
    rng = random.Random(23)
    for n in (1, 3, 16):
        t = build_ir_table(n)
        for _ in range(50):
            a, b = random_hn(rng, n), random_hn(rng, n)
            expected = signed_projection(a).dot(signed_projection(b))
            assert sim(t, a, b) == pytest.approx(expected, abs=1e-12)


# ----------------------------------------------------------------- sim1


def test_sim1_identical_arguments_zero():
    t = build_ir_table(2)
    x = hn(0.3, 0.4, 0.1, 0.9)
    assert sim1(t, x, x) == 0.0


def test_sim1_one_term_derived():
    # a=(1,0), b=(0,1): dp = e1, dm = -e2; dp^2 = e1, dm^2 = e1,
    # product = e1, est = 1
    t = build_ir_table(1)
    assert sim1(t, hn(1.0, 0.0), hn(0.0, 1.0)) == pytest.approx(1.0, abs=1e-12)


def test_sim1_zero_query_depends_on_document():
    t = build_ir_table(1)
    zero = HyperNumber.zero(2)
    doc = hn(1.0, 1.0)
    assert sim1(t, zero, doc) == pytest.approx(1.0, abs=1e-12)
    assert sim1(t, zero, doc) > 0.0


def test_sim1_nonnegative_random():
    rng = random.Random(31)
    t = build_ir_table(4)
    for _ in range(200):
        a, b = random_hn(rng, 4), random_hn(rng, 4)
        assert sim1(t, a, b) >= 0.0


def test_sim1_matches_closed_form():
    rng = random.Random(37)
    t = build_ir_table(3)
    for _ in range(50):
        a, b = random_hn(rng, 3), random_hn(rng, 3)
        expected = sum(
            (a.coeff(2 * i - 1) - b.coeff(2 * i - 1)) ** 2
            * (a.coeff(2 * i) - b.coeff(2 * i)) ** 2
            for i in range(1, 4)
        )
        assert sim1(t, a, b) == pytest.approx(expected, abs=1e-12)


# ------------------------------------------------------ signed projection


def test_signed_projection_examples():
    assert signed_projection(hn(0.5, 0.5)).values == (0.0,)
    assert signed_projection(hn(0.8, 0.2)).values == pytest.approx((0.6,))
    assert signed_projection(hn(0.0, 0.0, 1.0, 0.0)).values == (0.0, 1.0)


# ------------------------------------------------------------ matrix rep


def test_matrix_rep_unit_is_identity():
    t = build_ir_table(1)
    assert np.array_equal(matrix_rep(t, HyperNumber.basis(2, 1)), np.eye(2))


def test_matrix_rep_e2_squares_to_identity():
    t = build_ir_table(1)
    m = matrix_rep(t, HyperNumber.basis(2, 2))
    assert np.array_equal(m, np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert np.array_equal(m @ m, np.eye(2))


def test_matrix_rep_homomorphism_random():
    rng = random.Random(41)
    for n in (1, 2, 5):
        t = build_ir_table(n)
        for _ in range(35):
            x, y = random_hn(rng, n), random_hn(rng, n)
            lhs = matrix_rep(t, mul(t, x, y))
            rhs = matrix_rep(t, x) @ matrix_rep(t, y)
            assert np.max(np.abs(lhs - rhs)) <= 1e-9


# ------------------------------------------------------ algebraic laws


coeff = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False, width=64)


def hn_pair(n):
    shape = st.lists(coeff, min_size=2 * n, max_size=2 * n)
    return st.tuples(shape, shape)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.tuples(st.just(n), hn_pair(n))))
def test_commutativity(args):
    n, (xs, ys) = args
    t = build_ir_table(n)
    x, y = HyperNumber.from_dense(xs), HyperNumber.from_dense(ys)
    assert mul(t, x, y) == mul(t, y, x)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.lists(coeff, min_size=2 * n, max_size=2 * n), min_size=3, max_size=3),
    )))
def test_associativity(args):
    n, (xs, ys, zs) = args
    t = build_ir_table(n)
    x, y, z = (HyperNumber.from_dense(v) for v in (xs, ys, zs))
    lhs = mul(t, mul(t, x, y), z)
    rhs = mul(t, x, mul(t, y, z))
    for i in range(1, 2 * n + 1):
        assert lhs.coeff(i) == pytest.approx(rhs.coeff(i), abs=1e-9)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.tuples(st.just(n), hn_pair(n)), ), coeff)
def test_est_linearity(args, c):
    n, (xs, ys) = args
    x, y = HyperNumber.from_dense(xs), HyperNumber.from_dense(ys)
    assert est(add(x, y)) == pytest.approx(est(x) + est(y), abs=1e-12)
    assert est(scale(c, x)) == pytest.approx(c * est(x), abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.tuples(st.just(n), hn_pair(n))), coeff)
def test_sim_symmetry_and_bilinearity(args, c):
    n, (xs, ys) = args
    t = build_ir_table(n)
    a, b = HyperNumber.from_dense(xs), HyperNumber.from_dense(ys)
    assert sim(t, a, b) == pytest.approx(sim(t, b, a), abs=1e-12)
    assert sim(t, scale(c, a), b) == pytest.approx(c * sim(t, a, b), abs=1e-12)
