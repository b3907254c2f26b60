from __future__ import annotations

import pytest

from index2codes.character_sums import (
    character_orthogonality,
    gauss_brute,
    gauss_float,
    gauss_property_suite,
    weil_sum_check_all,
)
from index2codes.exact_numbers import CyclotomicInt, quadratic_gauss_period
from index2codes.finite_field import build_field


def test_gauss_value_frozen():
    # G(chi) over F_7 with chi of order 3
    g = gauss_brute(build_field(7, 1), 3, 1)
    assert g.to_json()["coeffs"] == ["-1", "0", "-2", "-1", "-1", "-2", "0", "0", "-1", "1", "1", "-1"]
    assert abs(abs(gauss_float(build_field(7, 1), 3, 1)) - 7**0.5) < 1e-9


def test_trivial_character():
    assert gauss_brute(build_field(5, 2), 4, 0) == CyclotomicInt.from_int(5, -1)


def test_quadratic_gauss_sum_over_prime_field():
    for p in (3, 7, 11, 13):
        assert gauss_brute(build_field(p, 1), 2, 1) == quadratic_gauss_period(p)


@pytest.mark.parametrize("p,d,n", [(3, 2, 8), (7, 1, 6), (2, 4, 15), (5, 2, 24)])
def test_property_suite(p, d, n):
    assert gauss_property_suite(build_field(p, d), n).passed


def test_orthogonality():
    assert character_orthogonality(build_field(3, 2), 8).passed


@pytest.mark.parametrize("p,d", [(2, 3), (3, 2), (5, 1), (7, 1), (2, 4), (13, 1)])
def test_weil_sums_small(p, d):
    rep = weil_sum_check_all(build_field(p, d))
    assert rep.passed, rep.failures[:3]
    assert rep.checked > 0
