from itertools import product

import pytest

from pbwdemazure.algebra.cartan import (
    KernelReport,
    cartan_profile,
    degenerate_flag_dim,
    kernel_profile,
    limit_is_torus_fixed,
    top_grade_slice,
)
from pbwdemazure.algebra.counterexample import LAMBDA, MU, W
from pbwdemazure.algebra.demazure import (
    GradedProfile,
    classical_filtration_profile,
    demazure_dim,
    induced_profile,
    weyl_dimension,
)
from pbwdemazure.algebra.fflv import minkowski_count
from pbwdemazure.algebra.rootsystem import DominantWeight, Permutation, all_permutations, is_triangular
from pbwdemazure.algebra.wedgerep import max_total_grade
from pbwdemazure.errors import ConsistencyError, InputError


def _weights(n, bound):
    return [DominantWeight(c) for c in product(range(bound + 1), repeat=n - 1) if any(c)]


def test_identity_has_a_one_dimensional_cartan_component():
    profile = cartan_profile(Permutation.identity(5), DominantWeight((1, 0, 2, 1)))
    assert profile.total == 1
    assert profile.by_grade() == {0: 1}


def test_rejects_mismatched_sizes():
    with pytest.raises(InputError):
        cartan_profile(W, DominantWeight((1, 1)))


@pytest.mark.parametrize("n, bound", [(3, 2), (4, 1)])
def test_longest_element_gives_weyl_dimension(n, bound):
    w0 = Permutation.longest(n)
    for weight in _weights(n, bound):
        assert cartan_profile(w0, weight).total == weyl_dimension(weight)
        assert degenerate_flag_dim(weight) == weyl_dimension(weight)


def test_all_of_s3_has_zero_kernel():
    for w in all_permutations(3):
        for weight in _weights(3, 2):
            assert kernel_profile(w, weight).kernel_total == 0


def test_triangular_elements_of_s4_have_zero_kernel():
    for w in all_permutations(4):
        if not is_triangular(w):
            continue
        for weight in _weights(4, 1):
            report = kernel_profile(w, weight)
            assert report.kernel_total == 0, (w, weight)
            assert report.d_dim == report.e_dim == demazure_dim(w, weight)


def test_grades_are_bounded_and_cells_are_monotone():
    for w in all_permutations(4):
        for weight in (DominantWeight((1, 0, 1)), DominantWeight((0, 1, 1))):
            cartan = cartan_profile(w, weight)
            classical = classical_filtration_profile(w, weight)
            assert cartan.max_grade() <= max_total_grade(weight)
            for key, dim in cartan.table.items():
                assert dim <= classical.table.get(key, 0)
            assert minkowski_count(w, weight)[1] <= cartan.total


def test_induced_profile_sits_between_cartan_and_classical():
    for w in all_permutations(4):
        weight = DominantWeight((1, 1, 1))
        cartan = cartan_profile(w, weight)
        induced = induced_profile(w, weight)
        assert induced.total == demazure_dim(w, weight)
        for key, dim in cartan.table.items():
            assert dim <= induced.table.get(key, 0)


def test_negative_kernel_cell_is_a_consistency_error():
    weight = DominantWeight((1, 0))
    w = Permutation((2, 1, 3))
    classical = GradedProfile({(0, (1, 0, 0)): 1, (2, (0, 1, 0)): 1})
    cartan = GradedProfile({(0, (1, 0, 0)): 1, (1, (0, 1, 0)): 1})
    with pytest.raises(ConsistencyError, match="negative"):
        kernel_profile(w, weight, classical, cartan)


def test_classical_total_must_match_the_character_formula():
    w, weight = Permutation((3, 1, 4, 2)), DominantWeight((1, 1, 1))
    classical = classical_filtration_profile(w, weight)
    key = next(iter(classical.table))
    tampered = GradedProfile({**classical.table, key: classical.table[key] + 1})
    with pytest.raises(ConsistencyError, match="dim D"):
        kernel_profile(w, weight, tampered)
    assert kernel_profile(w, weight, classical).d_dim == demazure_dim(w, weight)


def test_kernel_report_json():
    report = KernelReport(5, 4, {(2, (1, 0, 1)): 1})
    assert report.to_json() == {"d_dim": 5, "e_dim": 4, "kernel_total": 1, "kernel_cells": [[2, [1, 0, 1], 1]]}
    assert KernelReport.from_json(report.to_json()) == report
    assert report.grades() == [2]
    assert report.weights() == [(1, 0, 1)]


def test_top_grade_criterion():
    single = GradedProfile({(0, (1, 0)): 1, (3, (0, 1)): 1})
    assert top_grade_slice(single) == (3, {(0, 1): 1})
    assert limit_is_torus_fixed(single)
    assert not limit_is_torus_fixed(GradedProfile({(0, (1, 0)): 1, (2, (0, 1)): 2}))
    assert not limit_is_torus_fixed(GradedProfile({(2, (1, 0)): 1, (2, (0, 1)): 1}))


@pytest.mark.slow
def test_kernel_for_lambda():
    classical = classical_filtration_profile(W, LAMBDA)
    cartan = cartan_profile(W, LAMBDA)
    report = kernel_profile(W, LAMBDA, classical, cartan)
    assert (report.d_dim, report.e_dim, report.kernel_total) == (2942, 2941, 1)
    assert report.grades() == [7]
    assert len(report.kernel_cells) == 1
    assert top_grade_slice(classical)[0] == 7
    assert limit_is_torus_fixed(classical)

    induced = induced_profile(W, LAMBDA)
    gap = {
        m: dim - cartan.by_grade().get(m, 0)
        for m, dim in induced.by_grade().items()
        if dim != cartan.by_grade().get(m, 0)
    }
    assert gap == {6: 1}


@pytest.mark.slow
def test_kernel_for_mu():
    classical = classical_filtration_profile(W, MU)
    report = kernel_profile(W, MU, classical)
    assert (report.d_dim, report.e_dim, report.kernel_total) == (8226, 8221, 5)
    assert report.grades() == [8]
    assert sorted(report.kernel_cells.values()) == [1] * 5
    assert len(set(report.weights())) == 5
    assert top_grade_slice(classical)[0] == 8
    assert not limit_is_torus_fixed(classical)
