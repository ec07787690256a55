import pytest

from pbwdemazure.algebra.demazure import (
    GradedProfile,
    classical_filtration_profile,
    demazure_character,
    demazure_dim,
    demazure_operator,
    fund_basis,
    induced_profile,
    weyl_dimension,
)
from pbwdemazure.algebra.rootsystem import (
    DominantWeight,
    Permutation,
    all_permutations,
    reduced_word,
    reduced_words,
)
from pbwdemazure.errors import InputError


W = Permutation((6, 4, 2, 5, 3, 1))
LAMBDA = DominantWeight((1, 1, 0, 1, 1))
MU = DominantWeight((2, 1, 0, 1, 1))

SMALL_CASES = [
    (n, w, weight)
    for n, weights in (
        (3, [(1, 0), (0, 1), (1, 1), (2, 1)]),
        (4, [(1, 1, 1), (1, 0, 1), (0, 2, 0)]),
    )
    for w in all_permutations(n)
    for weight in map(DominantWeight, weights)
]


def test_demazure_operator_on_a_single_monomial():
    assert demazure_operator(1, {(1, 0): 1}) == {(1, 0): 1, (0, 1): 1}
    assert demazure_operator(1, {(0, 1): 1}) == {}
    assert demazure_operator(1, {(0, 2): 1}) == {(1, 1): -1}


def test_character_formula_values():
    assert demazure_dim(W, LAMBDA) == 2942
    assert demazure_dim(W, MU) == 8226


def test_character_of_identity_is_the_highest_weight():
    assert demazure_character(Permutation.identity(6), LAMBDA) == {LAMBDA.partition(): 1}


@pytest.mark.parametrize("coords, dim", [
    ((1,), 2),
    ((1, 0), 3),
    ((1, 1), 8),
    ((2, 0), 6),
    ((0, 1, 0), 6),
    ((1, 0, 1), 15),
    ((1, 1, 1), 64),
])
def test_weyl_dimension(coords, dim):
    weight = DominantWeight(coords)
    assert weyl_dimension(weight) == dim
    assert demazure_dim(Permutation.longest(weight.n), weight) == dim


def test_longest_element_gives_weyl_dimension_for_the_sl6_weights():
    w0 = Permutation.longest(6)
    assert demazure_dim(w0, LAMBDA) == weyl_dimension(LAMBDA)
    assert demazure_dim(w0, MU) == weyl_dimension(MU)


def test_word_independence():
    weight = DominantWeight((1, 1, 1))
    for w in all_permutations(4):
        dims = {demazure_dim(w, weight, word) for word in reduced_words(w)}
        assert len(dims) == 1
    assert demazure_dim(W, LAMBDA, reduced_word(W, "last")) == 2942


def test_rejects_bad_words_and_sizes():
    with pytest.raises(InputError):
        demazure_dim(Permutation((2, 1, 3)), DominantWeight((1, 0)), [2])
    with pytest.raises(InputError):
        demazure_dim(Permutation((2, 1, 3)), DominantWeight((1, 0)), [1, 1, 1])
    with pytest.raises(InputError):
        demazure_dim(W, DominantWeight((1, 1)))


def test_fundamental_basis_of_the_sl6_element():
    sizes = {k: len(fund_basis(W, k)) for k in (1, 2, 4, 5)}
    assert sizes == {1: 6, 2: 14, 4: 14, 5: 6}
    assert (1, 4) not in fund_basis(W, 2)
    assert (1, 2, 4, 5) not in fund_basis(W, 4)
    assert (1, 2) in fund_basis(W, 2)
    assert fund_basis(Permutation.identity(6), 3) == [(1, 2, 3)]
    with pytest.raises(InputError):
        fund_basis(W, 6)
    with pytest.raises(InputError):
        fund_basis(W, 0)


def test_fundamental_basis_matches_character_formula():
    for n in (3, 4):
        for w in all_permutations(n):
            for k in range(1, n):
                assert len(fund_basis(w, k)) == demazure_dim(w, DominantWeight.fundamental(n, k))


@pytest.mark.parametrize("n, w, weight", SMALL_CASES[::3])
def test_filtration_total_matches_character_formula(n, w, weight):
    profile = classical_filtration_profile(w, weight)
    assert profile.total == demazure_dim(w, weight)
    assert induced_profile(w, weight).total == profile.total


@pytest.mark.parametrize("n, w, weight", SMALL_CASES[::5])
def test_grade_zero_is_the_highest_weight_line(n, w, weight):
    profile = classical_filtration_profile(w, weight)
    assert profile.grade_slice(0) == {weight.partition(): 1}
    assert profile.by_grade()[0] == 1


def test_profile_cell_weights_match_the_character():
    w, weight = Permutation((3, 1, 4, 2)), DominantWeight((1, 1, 1))
    character = demazure_character(w, weight)
    profile = classical_filtration_profile(w, weight)
    by_weight = {}
    for _, cell, dim in profile.cells():
        by_weight[cell] = by_weight.get(cell, 0) + dim
    # profile cells carry the torus weight shifted by w
    shifted = {tuple(mu[w(i) - 1] for i in range(1, w.n + 1)): mult for mu, mult in character.items()}
    assert by_weight == shifted


def test_identity_profile_is_one_line():
    profile = classical_filtration_profile(Permutation.identity(4), DominantWeight((1, 2, 1)))
    assert profile.total == 1
    assert profile.max_grade() == 0


def test_profile_json_shape():
    profile = GradedProfile({(0, (1, 0, 0)): 1, (1, (0, 1, 0)): 1, (1, (0, 0, 1)): 1})
    payload = profile.to_json()
    assert payload == {
        "total": 3,
        "by_grade": {"0": 1, "1": 2},
        "by_grade_weight": [[0, [1, 0, 0], 1], [1, [0, 0, 1], 1], [1, [0, 1, 0], 1]],
    }
    assert GradedProfile.from_json(payload) == profile
