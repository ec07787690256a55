import pytest

from pbwdemazure.algebra.counterexample import EXPECTED_PW, LAMBDA, Q_TEXT, W
from pbwdemazure.algebra.plucker import (
    PlueckerPolynomial,
    deg_of,
    divides,
    evaluate,
    grad_of,
    is_irreducible,
    monomials_with_wt,
    p_poly,
    plucker_relation,
    pw_poly,
    pw_table,
    schubert_excluded_symbols,
    verify_q,
    wt_of,
    z_ring,
)
from pbwdemazure.algebra.rootsystem import Permutation, all_permutations
from pbwdemazure.algebra.wedgerep import pbw_degree, wedge_indices
from pbwdemazure.errors import InputError


Q = PlueckerPolynomial.parse(Q_TEXT, 6)
WT_Q = (1, 1, 1, 3, 3, 3)


def test_highest_coordinates_are_one():
    zr = z_ring(6)
    for k in range(1, 6):
        assert p_poly(6, tuple(range(1, k + 1))) == zr.one


def test_p_values():
    zr = z_ring(6)
    assert zr.format(p_poly(6, (6,))) == "z[1,6]"
    assert zr.format(p_poly(6, (4, 5))) == "z[1,4]*z[2,5] - z[1,5]*z[2,4]"
    assert z_ring(4).format(p_poly(4, (1, 3))) == "z[2,3]"


def test_format_rejects_a_polynomial_from_another_ring():
    with pytest.raises(InputError):
        z_ring(6).format(p_poly(4, (1, 3)))


@pytest.mark.parametrize("n", [4, 5])
def test_p_is_homogeneous_of_pbw_degree(n):
    for k in range(1, n):
        for index in wedge_indices(n, k):
            poly = p_poly(n, index)
            assert poly
            assert {sum(monom) for monom in poly.monoms()} == {pbw_degree(index)}


def test_listed_pw_values():
    assert pw_table(W, EXPECTED_PW) == EXPECTED_PW


def test_pw_for_extreme_elements():
    n = 4
    for k in range(1, n):
        for index in wedge_indices(n, k):
            assert pw_poly(Permutation.longest(n), index) == p_poly(n, index)
            restricted = pw_poly(Permutation.identity(n), index)
            assert restricted == (z_ring(n).one if index == tuple(range(1, k + 1)) else z_ring(n).zero)


def test_evaluation_of_q():
    assert not evaluate(Q, 6, W)
    assert evaluate(Q, 6)


def test_evaluation_of_a_highest_symbol():
    zr = z_ring(4)
    assert zr.format(evaluate(PlueckerPolynomial.parse("X[1,2]", 4), 4)) == "z[2]"


def test_plucker_relation_lies_in_the_kernel():
    relation = plucker_relation(1, 2, 3, 4)
    assert not evaluate(relation, 4)
    for w in all_permutations(4):
        assert not evaluate(relation, 4, w)
    with pytest.raises(InputError):
        plucker_relation(1, 3, 2, 4)


def test_gradings_of_q():
    first, second = Q.monomials()
    assert wt_of(first, 6) == wt_of(second, 6) == WT_Q
    assert grad_of(first) == grad_of(second) == 6
    assert deg_of(first, 6) == deg_of(second, 6) == LAMBDA


def test_excluded_symbols():
    assert schubert_excluded_symbols(W, (1, 2, 4, 5)) == [(1, 4), (1, 2, 4, 5)]
    assert schubert_excluded_symbols(Permutation.longest(6), (1, 2, 3)) == []
    assert len(schubert_excluded_symbols(Permutation.identity(4), (2,))) == 5


def test_monomials_with_wt():
    assert monomials_with_wt(6, LAMBDA, WT_Q, (1, 4)) == []
    assert monomials_with_wt(6, LAMBDA, WT_Q, (1, 2, 4, 5)) == []
    with_six = monomials_with_wt(6, LAMBDA, WT_Q, (6,))
    assert Q.monomials()[0] in with_six
    everything = monomials_with_wt(6, LAMBDA, WT_Q)
    assert set(Q.monomials()) <= set(everything)


def test_irreducibility_and_division():
    zr = z_ring(6)
    p45 = p_poly(6, (4, 5))
    assert is_irreducible(p45)
    assert is_irreducible(p_poly(6, (6,)))
    assert not is_irreducible(zr.one)
    assert not is_irreducible(p45 * p45)
    assert divides(p45, p45 * zr.root((1, 6)))
    for index in [(5,), (4, 6), (1, 4, 5, 6), (2, 3, 4, 5, 6)]:
        assert not divides(p45, p_poly(6, index))


def test_parse_and_format():
    poly = PlueckerPolynomial.parse("X[6]*X[4,5] - 2*X[5]*X[4,6]", 6)
    assert poly.format() == "X[6]*X[4,5] - 2*X[5]*X[4,6]"
    assert Q.format() == Q_TEXT
    assert PlueckerPolynomial.parse("X[1,2]^2 + 1/2*X[1,3]*X[1,2]", 4).format() == "X[1,2]*X[1,2] + 1/2*X[1,2]*X[1,3]"
    assert PlueckerPolynomial.parse("X[1]*X[2] - X[2]*X[1]", 3).terms == {}


@pytest.mark.parametrize("text", ["", "X[6]*", "X[7]", "X[6] X[5]", "Y[1]", "X[2,1]"])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(InputError):
        PlueckerPolynomial.parse(text, 6)


def test_verify_q_passes():
    certificate = verify_q(W, Q)
    assert certificate.passed
    assert [check.name for check in certificate.checks] == [
        "restricted_zero",
        "full_nonzero",
        "excluded_wt_empty",
        "witness_divides_first_only",
    ]
    witness = certificate.checks[-1].detail
    assert witness["witness"] == "X[4,5]"
    assert witness["irreducible"] is True
    payload = certificate.to_json()
    assert payload["passed"] is True
    assert payload["w"] == "6,4,2,5,3,1"


def test_verify_q_detects_a_flipped_sign():
    flipped = PlueckerPolynomial.parse(Q_TEXT.replace(" - ", " + "), 6)
    certificate = verify_q(W, flipped)
    assert not certificate.passed
    assert [check.name for check in certificate.failed()] == ["restricted_zero"]


def test_verify_q_detects_the_longest_element():
    certificate = verify_q(Permutation.longest(6), Q)
    assert "restricted_zero" in [check.name for check in certificate.failed()]


def test_verify_q_rejects_non_binomials():
    with pytest.raises(InputError):
        verify_q(W, PlueckerPolynomial.parse("X[6]", 6))
    with pytest.raises(InputError):
        verify_q(W, PlueckerPolynomial.parse("X[6] - X[4,5]", 6))
