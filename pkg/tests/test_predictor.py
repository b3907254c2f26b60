from __future__ import annotations

import pytest

from index2codes.code_model import TUPLE_CLASSES, validate
from index2codes.predictor import (
    bijection_frequencies,
    cyclotomic_fact_check,
    derived_frequencies,
    index2_pairs,
    latex_enumerator,
    predict_distribution,
    sign_invariance_check,
    table1,
    y_for_class,
    default_lifted,
)

EXAMPLE = validate(3, 5, 11, 2, 2)
SETS = [(3, 5, 11, 2, 2), (3, 5, 11, 22, 2), (11, 3, 7, 2, 2), (23, 3, 7, 158, 2), (5, 9, 19, 2, 2)]

LATEX = (
    r"1+25\ell^2 x^{2A(B-1358)}+25\ell^2 x^{2A(B+1425)}+\ell^2 x^{2A(B-335)}"
    r"+10\ell x^{A(B-1358)}+10\ell x^{A(B+1425)}+2\ell x^{A(B-335)}"
    r"+50\ell^2 x^{A(2B+67)}+10\ell^2 x^{A(2B-1693)}+10\ell^2 x^{2A(B+545)}"
    r"\quad\text{where } A=3^{17},B=3^{33},\ell=(3^{55}-1)/11"
)


def test_latex_example():
    assert latex_enumerator(EXAMPLE) == LATEX


def test_example_min_distance():
    dist = predict_distribution(EXAMPLE)
    assert dist.min_distance == 3**17 * (3**33 - 1358)
    assert len(dist.as_dict()) == 10
    assert dist.check().passed


def test_table_rows_frozen():
    rows = table1(validate(11, 3, 7, 2, 2))
    assert [r.cls for r in rows] == list(TUPLE_CLASSES)
    assert rows[0].y == 14800499888516320202422 and rows[0].freq == 1
    assert rows[1].y == 251345531558 and rows[2].y == 87107654370


@pytest.mark.parametrize("t", SETS)
def test_rows_match_class_formula(t):
    pr = validate(*t)
    lg = default_lifted(pr)
    for row in table1(pr, lg):
        assert row.y == y_for_class(pr, lg, row.cls)


@pytest.mark.parametrize("t", SETS)
def test_frequency_derivations_agree(t):
    pr = validate(*t)
    rows = {r.cls: r.freq for r in table1(pr)}
    assert derived_frequencies(pr) == rows == bijection_frequencies(pr)
    assert sum(rows.values()) == pr.Q**2


@pytest.mark.parametrize("t", SETS)
def test_sign_flip_invariance(t):
    assert sign_invariance_check(validate(*t)).passed


def test_index2_pairs_head():
    assert index2_pairs(60) == [(2, 7), (3, 11), (5, 19), (2, 23), (7, 31), (13, 43), (2, 47), (3, 59)]


@pytest.mark.parametrize("p,p1", [(3, 11), (2, 23), (13, 43)])
def test_cyclotomic_fact(p, p1):
    assert cyclotomic_fact_check(p, p1).passed
