from itertools import product

import pytest

from pbwdemazure.algebra.rootsystem import DominantWeight, positive_roots
from pbwdemazure.algebra.wedgerep import (
    Action,
    act_classical,
    act_degenerate,
    act_on_vector,
    factor_shape,
    format_tensor,
    highest_tensor,
    max_total_grade,
    normal_form,
    pbw_degree,
    tensor_act,
    torus_weight,
    total_grade,
    wedge_index,
    wedge_indices,
)
from pbwdemazure.errors import InputError


LAMBDA = DominantWeight((1, 1, 0, 1, 1))


def _single(index):
    return {(index,): 1}


def _apply(mode, root, vector):
    return act_on_vector(mode, root, vector)


def _difference(a, b):
    result = dict(a)
    for key, c in b.items():
        value = result.get(key, 0) - c
        if value:
            result[key] = value
        else:
            result.pop(key, None)
    return result


def test_wedge_index_validation():
    assert wedge_index([2, 4], 6) == (2, 4)
    for bad in ([], [3, 2], [1, 1], [0, 1], [1, 7]):
        with pytest.raises(InputError):
            wedge_index(bad, 6)
    with pytest.raises(InputError):
        wedge_index(range(1, 7), 6)
    assert len(wedge_indices(6, 3)) == 20


@pytest.mark.parametrize("index, degree", [
    ((1, 2), 0),
    ((4, 5), 2),
    ((2, 4, 5, 6), 2),
    ((1, 3, 4, 5, 6), 1),
    ((6,), 1),
])
def test_pbw_degree(index, degree):
    assert pbw_degree(index) == degree


def test_classical_action_and_sign():
    assert act_classical((1, 3), (1, 2)) == (-1, (2, 3))
    assert act_classical((1, 2), (1, 3)) == (1, (2, 3))
    assert act_classical((1, 2), (1, 2)) is None
    assert act_classical((2, 3), (1, 4)) is None
    assert act_classical((1, 5), (1, 2, 3, 4)) == (-1, (2, 3, 4, 5))


def test_degenerate_action_examples():
    assert act_degenerate((2, 3), (1, 2)) == (1, (1, 3))
    assert act_degenerate((3, 4), (1, 3)) is None
    assert act_classical((3, 4), (1, 3)) == (1, (1, 4))


@pytest.mark.parametrize("n", range(2, 7))
def test_degenerate_is_classical_when_degree_rises_by_one(n):
    for k in range(1, n):
        for index in wedge_indices(n, k):
            for root in positive_roots(n):
                classical = act_classical(root, index)
                degenerate = act_degenerate(root, index)
                raises = classical is not None and pbw_degree(classical[1]) == pbw_degree(index) + 1
                if raises:
                    assert degenerate == classical
                else:
                    assert degenerate is None


def test_commutator_of_root_vectors():
    n = 5
    for k in range(1, n):
        for index in wedge_indices(n, k):
            v = _single(index)
            for i, j, l in ((i, j, l) for i in range(1, n + 1) for j in range(i + 1, n + 1) for l in range(j + 1, n + 1)):
                forward = _apply(Action.CLASSICAL, (j, l), _apply(Action.CLASSICAL, (i, j), v))
                backward = _apply(Action.CLASSICAL, (i, j), _apply(Action.CLASSICAL, (j, l), v))
                assert _difference(forward, backward) == _apply(Action.CLASSICAL, (i, l), v)


def test_degenerate_root_vectors_commute():
    n = 5
    roots = positive_roots(n)
    for k in range(1, n):
        for index in wedge_indices(n, k):
            v = _single(index)
            for a, b in product(roots, repeat=2):
                ab = _apply(Action.DEGENERATE, a, _apply(Action.DEGENERATE, b, v))
                ba = _apply(Action.DEGENERATE, b, _apply(Action.DEGENERATE, a, v))
                assert ab == ba


def test_leibniz_rule_on_symmetric_square():
    t = normal_form([(1,), (1,)])
    assert tensor_act(Action.CLASSICAL, (1, 2), t) == {((1,), (2,)): 2}
    assert tensor_act(Action.CLASSICAL, (2, 3), t) == {}


def test_normal_form_orders_by_level_then_entries():
    assert normal_form([(1, 3), (2,), (1, 2)]) == ((2,), (1, 2), (1, 3))


def test_highest_tensor_and_shape():
    t = highest_tensor(LAMBDA)
    assert factor_shape(LAMBDA) == (1, 2, 4, 5)
    assert t == ((1,), (1, 2), (1, 2, 3, 4), (1, 2, 3, 4, 5))
    assert torus_weight(t, 6) == LAMBDA.partition()
    assert total_grade(t) == 0
    assert format_tensor(t) == "[[1],[1,2],[1,2,3,4],[1,2,3,4,5]]"
    assert factor_shape(DominantWeight((2, 1, 0, 1, 1))) == (1, 1, 2, 4, 5)


def test_action_shifts_weight_by_the_root():
    t = highest_tensor(LAMBDA)
    for root in positive_roots(6):
        for target in tensor_act(Action.CLASSICAL, root, t):
            expected = list(torus_weight(t, 6))
            expected[root[0] - 1] -= 1
            expected[root[1] - 1] += 1
            assert torus_weight(target, 6) == tuple(expected)


def test_degenerate_action_raises_total_grade_by_one():
    t = highest_tensor(LAMBDA)
    for root in positive_roots(6):
        for target in tensor_act(Action.DEGENERATE, root, t):
            assert total_grade(target) == 1


def test_max_total_grade():
    assert max_total_grade(LAMBDA) == 6
    assert max_total_grade(DominantWeight((2, 1, 0, 1, 1))) == 7
    assert max_total_grade(DominantWeight((0, 1, 0))) == 2
