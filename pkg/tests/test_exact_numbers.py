from __future__ import annotations

import cmath

from hypothesis import given, settings, strategies as st

from index2codes.exact_numbers import (
    CyclotomicInt,
    QuadInt,
    cyclotomic_poly,
    quad_pow,
    quadratic_gauss_period,
)

CONDUCTORS = [3, 4, 7, 12, 15, 21, 33, 77, 120]


def test_cyclotomic_poly():
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_poly(7) == (1,) * 7


def test_quadratic_period_squares():
    for p in (3, 7, 11, 19, 23):
        g = quadratic_gauss_period(p)
        assert g * g == CyclotomicInt.from_int(p, -p)
    for p in (5, 13):
        g = quadratic_gauss_period(p)
        assert g * g == CyclotomicInt.from_int(p, p)


def _rand(m, draw_coeffs):
    acc = CyclotomicInt.from_int(m, 0)
    for k, c in enumerate(draw_coeffs):
        acc = acc + CyclotomicInt.zeta(m, k) * c
    return acc


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from(CONDUCTORS),
    st.lists(st.integers(-50, 50), min_size=1, max_size=12),
    st.lists(st.integers(-50, 50), min_size=1, max_size=12),
)
def test_ring_ops_match_complex(m, xs, ys):
    x, y = _rand(m, xs), _rand(m, ys)
    z = complex(x) * complex(y)
    assert abs(complex(x * y) - z) < 1e-6 * (1 + abs(z))
    assert x * y == y * x
    assert x * y - y * x == CyclotomicInt.from_int(m, 0)
    assert abs(complex(x.conj()) - complex(x).conjugate()) < 1e-6 * (1 + abs(complex(x)))


def test_zeta_powers_and_lift():
    z = CyclotomicInt.zeta(12, 1)
    acc = CyclotomicInt.from_int(12, 1)
    for _ in range(12):
        acc = acc * z
    assert acc == CyclotomicInt.from_int(12, 1)
    assert abs(complex(z.lift(60)) - cmath.exp(2j * cmath.pi / 12)) < 1e-12
    assert CyclotomicInt.zeta(3, 1) == CyclotomicInt.zeta(12, 4)


def test_quad_int_norm_and_power():
    w = QuadInt(11, 1, 1)
    assert w.norm() == 3
    assert quad_pow(w, 5).norm() == 3**5
    assert quad_pow(w, 0) == QuadInt.one(11)
    assert (w * w.conjugate()) == QuadInt(11, 6, 0)
    for x in (w, quad_pow(w, 3), QuadInt(7, 3, -1)):
        assert abs(complex(x.to_cyclotomic()) - complex(x)) < 1e-9
