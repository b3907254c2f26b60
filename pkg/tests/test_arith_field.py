from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from index2codes.arith import (
    cyclic_subgroup,
    digit_sum,
    divisors,
    is_index2,
    legendre,
    multiplicative_order,
    prime_power_minus_one_divisors,
)
from index2codes.finite_field import FieldError, build_field, TowerCtx, build_tower, norm, trace

SMALL_FIELDS = [(2, 1), (2, 3), (3, 2), (5, 1), (7, 2), (2, 5), (3, 3)]


def test_index2_primes_small():
    assert is_index2(3, 11) and is_index2(11, 7) and is_index2(2, 7)
    # 2 generates Z_11^*, so the index is 1
    assert not is_index2(2, 11)
    # 3 has order 3 mod 13, so the index is 4
    assert not is_index2(3, 13)


def test_arith_helpers():
    assert multiplicative_order(3, 11) == 5
    assert cyclic_subgroup(3, 11) == frozenset({1, 3, 4, 5, 9})
    assert legendre(2, 7) == 1 and legendre(3, 7) == -1
    assert digit_sum(67, 3) == 5  # 67 = 2111 in base 3
    assert prime_power_minus_one_divisors(3, 5) == tuple(divisors(242))


@pytest.mark.parametrize("p,d", SMALL_FIELDS)
def test_generator_is_primitive(p, d):
    ctx = build_field(p, d)
    assert ctx.order == p**d
    assert ctx.is_primitive(ctx.generator)
    assert ctx.generator ** (ctx.order - 1) == ctx.one


@pytest.mark.parametrize("p,d", SMALL_FIELDS)
def test_log_table_round_trip(p, d):
    ctx = build_field(p, d)
    g = ctx.generator
    for e in (0, 1, 2, ctx.order - 2):
        assert ctx.discrete_log(g**e) == e % (ctx.order - 1)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL_FIELDS), st.integers(0, 10**6), st.integers(0, 10**6))
def test_field_axioms(pd, s1, s2):
    ctx = build_field(*pd)
    a = ctx.random(np.random.default_rng(s1))
    b = ctx.random(np.random.default_rng(s2), nonzero=True)
    assert (a + b) - b == a
    assert a * b * b.inverse() == a
    assert (a + b) ** ctx.p == a**ctx.p + b**ctx.p


def test_tower_trace_and_norm_land_in_subfield():
    tw = build_tower(3, 2, 2)
    rng = np.random.default_rng(1)
    for _ in range(10):
        y = tw.big.random(rng, nonzero=True)
        t, nm = trace(tw, y), norm(tw, y)
        assert t.ctx == tw.sub and nm.ctx == tw.sub
        assert tw.embed(t) == y + y**tw.q
        assert tw.embed(nm) == y ** (tw.q + 1)
        assert tw.in_subfield(tw.embed(nm))


def test_tower_degree_mismatch():
    with pytest.raises(FieldError):
        TowerCtx(build_field(2, 4), build_field(2, 3))
