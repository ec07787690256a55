"""
# pbwdemazure.algebra.counterexample

The sl_6 example showing that degenerate Schubert data depends on the highest weight and not
only on its support: `w = [6,4,2,5,3,1]`, `λ = (1,1,0,1,1)`, `μ = (2,1,0,1,1)`, support `(1,2,4,5)`.

`run_checks` evaluates every expected value and returns the results as `CheckResult` rows.
"""
from typing import Any, Callable, Iterable

from ..logging import logger
from .cartan import kernel_profile, limit_is_torus_fixed, top_grade_slice
from .demazure import GradedProfile, demazure_dim
from .fflv import exponent_vector, gamma_set, minkowski_count
from .plucker import CheckResult, PlueckerPolynomial, pw_table, verify_q
from .rootsystem import DominantWeight, Permutation, support

W = Permutation((6, 4, 2, 5, 3, 1))
LAMBDA = DominantWeight((1, 1, 0, 1, 1))
MU = DominantWeight((2, 1, 0, 1, 1))
SUPPORT = (1, 2, 4, 5)

Q_TEXT = "X[6]*X[4,5]*X[2,4,5,6]*X[1,3,4,5,6] - X[5]*X[4,6]*X[1,4,5,6]*X[2,3,4,5,6]"

EXPECTED_PW = {
    (6,): "z[1,6]",
    (4, 5): "z[1,4]*z[2,5]",
    (2, 4, 5, 6): "-z[1,5]*z[3,6]",
    (1, 3, 4, 5, 6): "-z[2,6]",
    (5,): "z[1,5]",
    (4, 6): "z[1,4]*z[2,6]",
    (1, 4, 5, 6): "z[2,5]*z[3,6]",
    (2, 3, 4, 5, 6): "z[1,6]",
}

# minimal monomials per level, as lists of root factors
EXPECTED_GAMMA: dict[int, list[list[tuple[int, int]]]] = {
    1: [[], [(1, 2)], [(1, 3)], [(1, 4)], [(1, 5)], [(1, 6)]],
    2: [
        [], [(2, 3)], [(2, 5)], [(2, 6)], [(1, 3)], [(1, 4)], [(1, 5)], [(1, 6)],
        [(1, 4), (2, 3)], [(1, 5), (2, 3)], [(1, 6), (2, 3)], [(1, 4), (2, 5)],
        [(1, 4), (2, 6)], [(1, 6), (2, 5)],
    ],
    4: [
        [], [(4, 5)], [(4, 6)], [(3, 6)], [(3, 6), (4, 5)], [(2, 5)], [(2, 6)],
        [(2, 6), (4, 5)], [(2, 5), (3, 6)], [(1, 5)], [(1, 6)], [(1, 6), (4, 5)],
        [(1, 5), (3, 6)], [(1, 6), (2, 5)],
    ],
    5: [[], [(5, 6)], [(4, 6)], [(3, 6)], [(2, 6)], [(1, 6)]],
}

# (weight, d_dim, e_dim, kernel grade, kernel cell count, limit point torus-fixed)
EXPECTED_WEIGHT_DATA = {
    "lambda": (LAMBDA, 2942, 2941, 7, 1, True),
    "mu": (MU, 8226, 8221, 8, 5, False),
}

ProfileLoader = Callable[[str, Permutation, DominantWeight], GradedProfile]



def _check(name: str, expected: Any, actual: Any) -> CheckResult:
    result = CheckResult(name, expected == actual, {"expected": expected, "actual": actual})
    logger.info(f"Counterexample check {name}: {'passed' if result.passed else 'FAILED'} ({actual})")
    return result


def support_checks(labels: Iterable[str] = ("lambda", "mu")) -> list[CheckResult]:
    """
    Both weights have the support listed in `SUPPORT`; one check per label.
    """
    return [
        _check(f"{label}.support", list(SUPPORT), list(support(EXPECTED_WEIGHT_DATA[label][0])))
        for label in labels
    ]


def gamma_checks() -> list[CheckResult]:
    """
    The four sets `Γ_{w_k}`, `k` in the support, against the listed minimal monomials.
    """
    results = []
    for k, factors in EXPECTED_GAMMA.items():
        expected = sorted(exponent_vector(W, f) for f in factors)
        actual = sorted(gamma_set(W, k))
        results.append(CheckResult(
            f"gamma.level{k}",
            expected == actual,
            {"expected_size": len(expected), "actual_size": len(actual),
             "missing": [list(v) for v in sorted(set(expected) - set(actual))],
             "extra": [list(v) for v in sorted(set(actual) - set(expected))]},
        ))
    return results


def pw_checks() -> list[CheckResult]:
    """
    The eight listed `p^w_S` against the computed ones.
    """
    actual = pw_table(W, EXPECTED_PW)
    return [
        _check(f"pw.{','.join(str(i) for i in index)}", text, actual[index])
        for index, text in EXPECTED_PW.items()
    ]


def q_checks() -> list[CheckResult]:
    """
    The `verify_q` certificate of `Q`, one row per sub-check, prefixed `verify_q.`.
    """
    certificate = verify_q(W, PlueckerPolynomial.parse(Q_TEXT, W.n))
    return [
        CheckResult(f"verify_q.{check.name}", check.passed, check.detail)
        for check in certificate.checks
    ]


def weight_checks(label: str, load: ProfileLoader) -> list[CheckResult]:
    """
    Dimensions, kernel localization, `|Γ|` and the limit-point criterion for `λ` or `μ`.

    ## Parameters
    - `label` ( *str* ) – `"lambda"` or `"mu"`.
    - `load` ( *Callable* ) – Returns the `classical`, `induced` or `cartan` profile of `(w, weight)`.
    """
    weight, d_dim, e_dim, grade, cells, fixed = EXPECTED_WEIGHT_DATA[label]
    classical = load("classical", W, weight)
    cartan = load("cartan", W, weight)
    report = kernel_profile(W, weight, classical, cartan)
    _, count = minkowski_count(W, weight)
    top, top_cells = top_grade_slice(classical)

    weights = report.weights()
    results = [
        _check(f"{label}.demazure_dim", d_dim, demazure_dim(W, weight)),
        _check(f"{label}.classical_total", d_dim, classical.total),
        _check(f"{label}.cartan_total", e_dim, cartan.total),
        _check(f"{label}.kernel_total", d_dim - e_dim, report.kernel_total),
        _check(f"{label}.kernel_grades", [grade], report.grades()),
        _check(f"{label}.kernel_cells", [1] * cells, [dim for _, dim in sorted(report.kernel_cells.items())]),
        _check(f"{label}.kernel_weights_distinct", cells, len(set(weights))),
        _check(f"{label}.top_grade", grade, top),
        _check(f"{label}.top_grade_dim", d_dim - e_dim, sum(top_cells.values())),
        _check(f"{label}.gamma_count", e_dim, count),
        _check(f"{label}.limit_torus_fixed", fixed, limit_is_torus_fixed(classical)),
    ]
    if label == "lambda":
        induced = load("induced", W, weight)
        gap = {
            m: dim - cartan.by_grade().get(m, 0)
            for m, dim in induced.by_grade().items()
            if dim != cartan.by_grade().get(m, 0)
        }
        results.append(_check("lambda.induced_minus_cartan", {6: 1}, gap))
    return results


def run_checks(load: ProfileLoader, only: str = "all") -> list[CheckResult]:
    """
    Runs the check list.

    ## Parameters
    - `load` ( *Callable* ) – Profile source, e.g. `cache.load_profile` bound to a cache.
    - `only` ( *str*, *optional* ) – `"lambda"`, `"mu"` or `"all"`. The `λ` part includes the
      `Γ_{w_k}`, `p^w` and `Q` checks.

    ## Returns
    - *list[CheckResult]* – In evaluation order.
    """
    labels: tuple[str, ...] = ("lambda", "mu") if only == "all" else (only,)
    results = support_checks(labels)
    if "lambda" in labels:
        results += gamma_checks() + pw_checks() + q_checks()
    for label in labels:
        results += weight_checks(label, load)
    return results
