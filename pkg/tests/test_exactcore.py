from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ealax.exactcore import (Cyclotomic, LieElement, Scalar, cyclotomic_arith, cyclotomic_polynomial,
                             euler_phi, exact_rank, format_element, nullspace, parse_bracket_pair,
                             parse_scalar, root_of_unity_sum, scale, solve, split_top, vec_combine)


# -- cyclotomic ---------------------------------------------------------------------------------
def test_zeta_powers():
    z2, z3, z4 = Cyclotomic.zeta(2), Cyclotomic.zeta(3), Cyclotomic.zeta(4)
    assert cyclotomic_arith(z2, z2, "mul") == 1
    assert z2 == -1
    assert cyclotomic_arith(cyclotomic_arith(z3, z3, "mul"), z3, "mul") == 1
    assert cyclotomic_arith(z4, z4, "mul") == -1


def test_root_of_unity_sums():
    assert root_of_unity_sum(2, 0) == 2
    assert root_of_unity_sum(2, 1) == 0
    assert root_of_unity_sum(3, 4) == 0
    assert root_of_unity_sum(3, 3) == 3


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert euler_phi(12) == 4
    assert cyclotomic_polynomial(1) == (-1, 1)


def test_coefficient_count_checked():
    with pytest.raises(ValueError):
        Cyclotomic(2, [0, 1])


cyc_orders = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])


@st.composite
def cyclotomics(draw, order=None):
    T = order if order is not None else draw(cyc_orders)
    ks = draw(st.lists(st.tuples(st.integers(-12, 12), st.integers(-3, 3)), max_size=4))
    out = Cyclotomic.from_rational(T, 0)
    for k, c in ks:
        out = out + Cyclotomic.zeta(T, k) * c
    return out


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_cyclotomic_field_axioms(data):
    T = data.draw(cyc_orders)
    a, b, c = (data.draw(cyclotomics(T)) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a + (-a) == 0


@settings(max_examples=40, deadline=None)
@given(cyc_orders, st.integers(-20, 20))
def test_root_of_unity_sum_formula(T, m):
    assert root_of_unity_sum(T, m) == (T if m % T == 0 else 0)


# -- scalars ------------------------------------------------------------------------------------
@st.composite
def scalars(draw):
    out = Scalar.of(0)
    for _ in range(draw(st.integers(0, 3))):
        c = Fraction(draw(st.integers(-4, 4)), draw(st.integers(1, 3)))
        out = out + Scalar.q(draw(st.integers(-3, 3))) * Scalar.a(draw(st.integers(0, 2))) * c
    return out


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars(), scalars())
def test_scalar_ring_axioms(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x - x == 0


@settings(max_examples=60, deadline=None)
@given(scalars())
def test_scalar_text_roundtrip(x):
    assert parse_scalar(str(x)) == x


def test_scalar_text():
    assert str(parse_scalar("1+q")) == "1 + q"
    assert Scalar.q(-2) * Scalar.q(2) == 1
    assert (Scalar.q() + 1) / (Scalar.q() + 1) == 1
    assert Scalar.zeta(3) ** 3 == 1


# -- sparse vectors and rank --------------------------------------------------------------------
def test_vec_combine_examples():
    v = LieElement.basis(("k0",))
    assert vec_combine(v, v, 0) == v
    assert not vec_combine(v, v, -1)
    assert vec_combine(v, v, Scalar.q()) == v * (1 + Scalar.q())
    assert format_element(vec_combine(v, v, Scalar.q())) == "(1 + q)*('k0',)"


def test_exact_rank_examples():
    v = LieElement.basis(("a",))
    assert exact_rank([]) == 0
    assert exact_rank([v, scale(v, 2)]) == 1
    assert exact_rank([LieElement.basis((i,)) for i in range(3)]) == 3


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=4),
       st.integers(-3, 3))
def test_rank_invariant_under_row_operation(rows, c):
    vecs = [LieElement({((j,), 0): x for j, x in enumerate(r) if x}) for r in rows]
    extra = vecs + [vecs[0] * c]
    assert exact_rank(extra) == exact_rank(vecs)
    assert exact_rank(vecs) + len(nullspace([list(col) for col in zip(*rows)])) == len(rows)


def test_solve_and_nullspace():
    assert solve([[1, 1], [1, -1]], [3, 1]) == [2, 1]
    assert nullspace([[1, 2], [2, 4]]) == [[-2, 1]]


def test_bracket_pair_text():
    assert parse_bracket_pair("[E12*t0, E21*t0^-1]") == ("E12*t0", "E21*t0^-1")
    assert parse_bracket_pair("[x(1,0), x(0,1)]") == ("x(1,0)", "x(0,1)")
    with pytest.raises(ValueError):
        parse_bracket_pair("E12, E21")
    assert split_top("a,b(c,d)", ",")[0] == "a"
