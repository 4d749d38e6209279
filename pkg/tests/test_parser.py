import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chowtaut.exprparse import ExprSyntaxError, parse_expr
from chowtaut.ring import CycleClass, RingParams, TautRing


def ring(d=2, b=1, m=2, **kw):
    return TautRing(RingParams(d, b, m, **kw))


class TestExamples:
    def test_h_cube_relation(self):
        r = ring(d=2)
        assert parse_expr("h_1^3 - 2*o_1", r).is_zero()

    def test_tau_square_adjudicated(self):
        r = ring(b=1)
        got = parse_expr("t_{1,2}*t_{1,2}", r)
        assert got == r.multiply(r.o(1), r.o(2)).scale(-2)

    def test_zeroth_power(self):
        r = ring()
        assert parse_expr("(h_1+h_2)^0", r) == r.one()

    def test_reduce_relation_e2(self):
        r = ring(d=2, b=10)
        assert str(parse_expr("t_{1,2}*h_1", r)) == "0"

    def test_rationals_and_parens(self):
        r = ring(d=2)
        got = parse_expr("1/2*(h_1 + h_2) - 1/2*h_2", r)
        assert got == r.h(1).scale(Fraction(1, 2))

    def test_tau_alias(self):
        r = ring()
        assert parse_expr("tau_{1,2}", r) == parse_expr("t_{1,2}", r)

    def test_leading_minus(self):
        r = ring()
        assert parse_expr("-h_1", r) == -r.h(1)


class TestErrors:
    def test_syntax_error_has_position(self):
        with pytest.raises(ExprSyntaxError) as exc:
            parse_expr("h_1 + @", ring())
        assert exc.value.pos == 6

    def test_unbalanced_paren(self):
        with pytest.raises(ExprSyntaxError):
            parse_expr("(h_1 + h_2", ring())

    def test_index_out_of_range(self):
        with pytest.raises(ExprSyntaxError):
            parse_expr("h_3", ring(m=2))
        with pytest.raises(ExprSyntaxError):
            parse_expr("t_{1,5}", ring(m=2))

    def test_trailing_garbage(self):
        with pytest.raises(ExprSyntaxError):
            parse_expr("h_1 h_2", ring())

    def test_zero_denominator(self):
        with pytest.raises(ExprSyntaxError):
            parse_expr("1/0", ring())


class TestRoundTrip:
    def test_random_classes(self):
        rng = random.Random(2024)
        r = ring(d=3, b=2, m=3)
        for _ in range(200):
            cls = random_class(r, rng)
            assert parse_expr(str(cls), r) == cls

    @given(st.integers(-6, 6), st.integers(1, 4), st.integers(-5, 5))
    @settings(max_examples=60, deadline=None)
    def test_scalar_combinations(self, a, q, b_):
        r = ring(d=2, b=1, m=3)
        cls = (r.multiply(r.h(1), r.h(2)).scale(Fraction(a, q))
               + r.tau(2, 3).scale(b_))
        assert parse_expr(str(cls), r) == cls


def random_class(r, rng, n_terms=4):
    acc = r.zero()
    for _ in range(n_terms):
        c = rng.randint(0, 3 * r.p.m)
        basis = r.graded_basis(c)
        mon = basis[rng.randrange(len(basis))]
        acc = acc + CycleClass({mon: Fraction(rng.randint(-5, 5), rng.randint(1, 4))})
    return acc
