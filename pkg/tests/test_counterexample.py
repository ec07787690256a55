from pbwdemazure.algebra.counterexample import (
    EXPECTED_WEIGHT_DATA,
    MU,
    gamma_checks,
    pw_checks,
    run_checks,
    support_checks,
)
from pbwdemazure.algebra.demazure import GradedProfile


def _flat_loader(kind, w, weight):
    # one cell holding the expected total, enough to drive the check list without a closure
    label = "mu" if weight == MU else "lambda"
    _, d_dim, e_dim, *_ = EXPECTED_WEIGHT_DATA[label]
    total = e_dim if kind == "cartan" else d_dim
    return GradedProfile({(0, weight.partition()): total})


def test_support_checks_follow_the_labels():
    assert [check.name for check in support_checks()] == ["lambda.support", "mu.support"]
    only_mu = support_checks(("mu",))
    assert [check.name for check in only_mu] == ["mu.support"]
    assert only_mu[0].passed


def test_listed_gamma_and_pw_values_pass():
    assert all(check.passed for check in gamma_checks())
    assert all(check.passed for check in pw_checks())


def test_run_checks_restricted_to_mu():
    names = [check.name for check in run_checks(_flat_loader, only="mu")]
    assert names[0] == "mu.support"
    assert all(name.startswith("mu.") for name in names)
    assert "mu.kernel_total" in names
