import random
from fractions import Fraction

import pytest
from sympy import Matrix

from pbwdemazure.algebra.exactlinalg import EchelonSpan, add_scaled, cleaned, primitive, rank


def test_primitive_clears_denominators_and_gcd():
    assert primitive({"a": Fraction(1, 2), "b": Fraction(3, 4)}) == {"a": 2, "b": 3}
    assert primitive({"a": 6, "b": -9, "c": 0}) == {"a": 2, "b": -3}
    assert primitive({}) == {}


def test_add_scaled_drops_cancelled_entries():
    target = {"a": 1, "b": 2}
    add_scaled(target, {"a": 1, "c": 3}, -1)
    assert target == {"b": 2, "c": -3}
    assert cleaned({"a": 0, "b": 1}) == {"b": 1}


def test_insert_and_membership():
    span = EchelonSpan()
    assert span.insert({1: 1, 2: 1})
    assert span.insert({2: 1, 3: 1})
    assert not span.insert({1: 2, 2: 4, 3: 2})
    assert span.dimension == 2
    assert {1: 1, 3: -1} in span
    assert {3: 1} not in span
    assert span.reduce({1: 5, 2: 5}) == {}


def test_rows_are_fully_reduced():
    span = EchelonSpan()
    span.insert({1: 2, 2: 1, 3: 1})
    span.insert({2: 3, 3: -1})
    span.insert({3: 7})
    assert span.pivots == [1, 2, 3]
    for pivot, row in span.rows():
        assert row[pivot] > 0
        for other in span.pivots:
            if other != pivot:
                assert other not in row


def test_custom_pivot_order():
    span = EchelonSpan(order=lambda index: -index)
    span.insert({1: 1, 2: 1})
    assert span.pivots == [2]


def test_fraction_inputs():
    span = EchelonSpan()
    span.insert({"x": Fraction(1, 3), "y": Fraction(2, 3)})
    assert {"x": 1, "y": 2} in span
    assert {"x": Fraction(-5, 7), "y": Fraction(-10, 7)} in span


def _random_matrix(rng, rows, cols, density):
    return [
        [rng.randint(-3, 3) if rng.random() < density else 0 for _ in range(cols)]
        for _ in range(rows)
    ]


@pytest.mark.parametrize("seed", range(12))
def test_rank_matches_sympy(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 9), rng.randint(1, 9)
    matrix = _random_matrix(rng, rows, cols, rng.choice([0.3, 0.6, 0.9]))
    # duplicate a combination of rows so dependent inputs are exercised
    if rows >= 2:
        matrix.append([a - 2 * b for a, b in zip(matrix[0], matrix[1])])
    vectors = [{j: c for j, c in enumerate(row) if c} for row in matrix]
    assert rank(vectors) == Matrix(matrix).rank()


@pytest.mark.parametrize("seed", range(5))
def test_insertion_order_does_not_change_the_span(seed):
    rng = random.Random(100 + seed)
    matrix = _random_matrix(rng, 7, 6, 0.5)
    vectors = [{j: c for j, c in enumerate(row) if c} for row in matrix]
    forward, backward = EchelonSpan(), EchelonSpan()
    for v in vectors:
        forward.insert(v)
    for v in reversed(vectors):
        backward.insert(v)
    assert forward.dimension == backward.dimension
    assert sorted(forward.pivots) == sorted(backward.pivots)
    for pivot, row in forward.rows():
        assert dict(backward.rows())[pivot] == row


def test_text_pivot_order_spans_the_same_space():
    # nested tuples sort differently as tuples and as their printed form
    vectors = [
        {((1,), (1, 2)): 1, ((1,), (1, 3)): 2},
        {((1, 2),): 1, ((1,), (1, 2)): -1},
        {((1,), (1, 3)): 3, ((1, 2),): 1},
        {((1,), (1, 2)): 1, ((1,), (1, 3)): 2, ((1, 2),): 1},
    ]
    natural, textual = EchelonSpan(), EchelonSpan(order=str)
    for v in vectors:
        assert natural.insert(v) == textual.insert(v)
    assert natural.dimension == textual.dimension == 3
    assert natural.pivots[0] == ((1,), (1, 2))
    assert textual.pivots[0] == ((1, 2),)
    target = {((1,), (1, 3)): 1}
    assert target in natural and target in textual
