from __future__ import annotations

import pytest

from index2codes.finite_field import build_field
from index2codes.gauss_index2 import (
    Index2Error,
    class_number,
    class_number_legendre,
    davenport_hasse_check,
    dh_lift,
    lifted_index2,
    pin_to_field,
    solve_diophantine,
    tower_pin_check,
)
from index2codes.character_sums import gauss_brute


@pytest.mark.parametrize("p1,h", [(7, 1), (11, 1), (19, 1), (23, 3), (31, 3), (47, 5), (71, 7), (199, 9)])
def test_class_numbers(p1, h):
    assert class_number(p1) == h
    assert class_number_legendre(p1) == h


def test_small_p1_rejected():
    with pytest.raises(Index2Error):
        class_number(3)


@pytest.mark.parametrize("args,want", [((3, 11, 1), (1, 1)), ((11, 7, 1), (-4, 2)), ((2, 7, 1), (-1, 1))])
def test_diophantine(args, want):
    a, b = solve_diophantine(*args)
    assert (a, b) == want
    p, p1, c = args
    assert a * a + p1 * b * b == 4 * p ** c


def test_lifted_values():
    lg = lifted_index2(3, 11, 11)
    assert (lg.a_s, lg.b_s, lg.prefactor_exp, lg.sign) == (67, 253, 22, 1)
    lg = lifted_index2(11, 7, 2)
    assert (lg.a_s, lg.b_s, lg.prefactor_exp, lg.sign) == (-6, -8, 2, -1)
    assert lg.flipped().b_s == 8


def test_lift_consistent_with_squaring():
    base = lifted_index2(3, 11, 1)
    two = lifted_index2(3, 11, 2)
    assert dh_lift(base, 2).value() == two.value()


def test_not_index2():
    with pytest.raises(Index2Error):
        lifted_index2(2, 11, 1)


@pytest.mark.parametrize("p,p1", [(3, 11), (11, 7), (2, 7), (2, 23)])
def test_pinned_closed_form_matches_brute(p, p1):
    ctx = build_field(p, (p1 - 1) // 2)
    pinned = pin_to_field(ctx, p1)
    assert gauss_brute(ctx, p1, 1) == pinned.value()


@pytest.mark.parametrize("rank", [1, 2])
def test_pin_follows_generator(rank):
    ctx = build_field(3, 5, rank)
    assert gauss_brute(ctx, 11, 1) == pin_to_field(ctx, 11).value()


@pytest.mark.parametrize("p,d", [(2, 2), (3, 2), (5, 1), (7, 1), (2, 3)])
def test_davenport_hasse_small(p, d):
    assert davenport_hasse_check(p, d).passed


def test_tower_pin():
    assert tower_pin_check(11, 7, 7).passed
