from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from index2codes.code_model import (
    TUPLE_CLASSES,
    CyclicCode,
    InvalidParameters,
    brute_weight_distribution,
    feasibility,
    search_params,
    validate,
)

SMALL = (5, 1, 2, 4, 2)


def test_validate_example():
    pr = validate(3, 5, 11, 2, 2)
    assert pr.index2_valid and pr.p1 == 11 and pr.s == 11 and pr.m == 11
    assert pr.dimension == 22
    assert pr.n == 2 * (3**55 - 1) // 242
    assert feasibility(pr) == "stratified-only"


def test_validate_reasons():
    pr = validate(3, 5, 12, 2, 2)
    assert not pr.index2_valid and pr.reasons
    with pytest.raises(InvalidParameters):
        pr.require_index2()


@pytest.mark.parametrize("bad", [(4, 1, 1, 1, 1), (5, 1, 2, 3, 2), (5, 1, 2, 8, 2), (7, 1, 2, 3, 2)])
def test_validate_rejects(bad):
    with pytest.raises(InvalidParameters):
        validate(*bad)


def test_small_distribution_frozen():
    dist = brute_weight_distribution(validate(*SMALL))
    assert dist.as_dict() == {0: 1, 8: 24, 12: 24, 16: 144, 20: 288, 24: 144}
    assert dist.total == 625
    assert dist.first_moment == 12000 == dist.expected_first_moment()
    assert dist.check().passed


@pytest.mark.parametrize("t", [(5, 1, 2, 4, 2), (7, 1, 2, 2, 2), (3, 1, 3, 2, 2), (3, 2, 2, 4, 2)])
def test_split_matches_literal(t):
    pr = validate(*t)
    assert brute_weight_distribution(pr, "split") == brute_weight_distribution(pr, "literal")


def test_distinct_codewords():
    code = CyclicCode(validate(*SMALL))
    F = code.field
    elems = [F.from_int(i) for i in range(F.order)]
    words = {tuple(x.as_tuple() for x in code.codeword(a, b)) for a in elems for b in elems}
    assert len(words) == 625


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([(5, 1, 2, 4, 2), (11, 1, 5, 2, 2), (7, 1, 3, 2, 2)]), st.integers(0, 2**32))
def test_counting_identity(t, seed):
    code = CyclicCode(validate(*t))
    rng = np.random.default_rng(seed)
    a, b = code.field.random(rng), code.field.random(rng)
    z = code.z_direct(a, b)
    assert code.z_charsum(a, b, "brute") == z
    assert code.z_charsum(a, b, "gauss") == z


def _z_literal_alpha(code: CyclicCode, a, b) -> int:
    """Count with the exponent of beta read as log_alpha(x) instead of the coordinate index."""
    pr = code.params
    step = (pr.q - 1) // pr.h
    x, zeros = code.field.one, 0
    for j in range(pr.n):
        y = a * x + code.beta ** (j * step) * b * x
        if code.tower.trace(y) == code.sub.zero:
            zeros += 1
        x = x * code.g
    return zeros


def test_log_alpha_reading_breaks_identity():
    code = CyclicCode(validate(5, 1, 2, 2, 2))
    rng = np.random.default_rng(0)
    bad = 0
    for _ in range(20):
        a, b = code.field.random(rng), code.field.random(rng)
        assert code.z_charsum(a, b, "brute") == code.z_direct(a, b)
        bad += _z_literal_alpha(code, a, b) != code.z_direct(a, b)
    assert bad > 0


def test_classify_and_construct():
    code = CyclicCode(validate(11, 3, 7, 2, 2))
    rng = np.random.default_rng(3)
    for cls in TUPLE_CLASSES:
        a, b = code.construct_representative(cls, rng)
        assert code.classify(a, b) == cls


def test_search_params_index2():
    found = search_params(11, 55)
    tuples = {p.tuple for p in found}
    assert (3, 5, 11, 2, 2) in tuples and (11, 3, 7, 2, 2) in tuples
    assert all(p.index2_valid for p in found)
    assert all(p.Q**2 > 10**7 for p in found)
