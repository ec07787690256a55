"""
# pbwdemazure.algebra.demazure

Demazure module data for sl_n.

- `fund_basis` – the wedge basis of the fundamental Demazure modules `D~_{w w_k}`.
- `demazure_dim` – `dim D_{wλ}` from the Demazure character formula (divided differences along a reduced word).
- `classical_filtration_profile` – the (grade, weight) profile of `D~_{wλ}^a`: the PBW filtration of
  `D~_{wλ} = U(n_{-w}) v_λ` computed by exact span closure inside `T_λ`.
- `induced_profile` – the (grade, weight) profile of `H_{wλ}`, the associated graded of `D~_{wλ}`
  for the filtration induced by the grading of `T_λ`.

Both profiles come out of one closure: the filtration counts insertions per step, and the
induced profile reads the pivot grades of a span whose pivots prefer the highest grade.
"""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Sequence

from ..logging import logger
from ..errors import ConsistencyError, InputError
from .exactlinalg import EchelonSpan
from .rootsystem import (
    DominantWeight, Permutation, WeightVector,
    length, ordered_inversions, reduced_word, word_product,
)
from .wedgerep import (
    Action, WedgeIndex, act_on_vector, highest_tensor,
    torus_weight, total_grade, wedge_indices,
)

CharacterPolynomial = dict[WeightVector, int]



@dataclass
class GradedProfile:
    """
    Dimensions of a graded, weight-decomposed space.

    ## Attributes
    - `table` ( *dict* ) – Maps `(grade, GL_n weight)` to the dimension of that cell; zero cells are not stored.
    """
    table: dict[tuple[int, WeightVector], int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.table.values())

    def by_grade(self) -> dict[int, int]:
        grades: Counter[int] = Counter()
        for (m, _), dim in self.table.items():
            grades[m] += dim
        return dict(sorted(grades.items()))

    def grade_slice(self, m: int) -> dict[WeightVector, int]:
        """
        The weight cells of grade `m`.
        """
        return {weight: dim for (grade, weight), dim in sorted(self.table.items()) if grade == m}

    def max_grade(self) -> int:
        return max((m for m, _ in self.table), default=0)

    def cells(self) -> list[tuple[int, WeightVector, int]]:
        """
        `(grade, weight, dim)` triples in sorted order.
        """
        return [(m, weight, dim) for (m, weight), dim in sorted(self.table.items())]

    def to_json(self) -> dict[str, Any]:
        """
        Serializes to `{"total", "by_grade", "by_grade_weight"}` with deterministic ordering.
        """
        return {
            "total": self.total,
            "by_grade": {str(m): dim for m, dim in self.by_grade().items()},
            "by_grade_weight": [[m, list(weight), dim] for m, weight, dim in self.cells()],
        }

    @classmethod
    def from_json(cls, payload: dict[str, Any]) -> GradedProfile:
        table = {(int(m), tuple(weight)): int(dim) for m, weight, dim in payload["by_grade_weight"]}
        return cls(table)


def fund_basis(w: Permutation, k: int) -> list[WedgeIndex]:
    """
    The wedge indices spanning `E_{w w_k} = D~_{w w_k}^a`.

    `S` qualifies iff for each `l` the `l`-th smallest of `w(S)` is at most the `l`-th smallest of
    `w(1), ..., w(k)`.

    ## Parameters
    - `w` ( *Permutation* ) – The Weyl group element.
    - `k` ( *int* ) – The level, `1 <= k <= n-1`.

    ## Returns
    - *list[WedgeIndex]* – The qualifying indices in lexicographic order.
    """
    n = w.n
    if not 1 <= k < n:
        raise InputError(f"Level {k} out of range for n={n}")
    reference = sorted(w(i) for i in range(1, k + 1))
    basis = []
    for index in wedge_indices(n, k):
        values = sorted(w(i) for i in index)
        if all(v <= r for v, r in zip(values, reference)):
            basis.append(index)
    return basis


def demazure_operator(i: int, character: CharacterPolynomial) -> CharacterPolynomial:
    """
    Applies the isobaric divided difference `D_i f = (f - x^{-α_i} s_i f) / (1 - x^{-α_i})`.

    Expands the quotient monomial by monomial as a finite geometric series, which is exact
    because the numerator is always divisible.
    """
    result: Counter[WeightVector] = Counter()
    for mu, c in character.items():
        m = mu[i - 1] - mu[i]
        if m >= 0:
            for t in range(m + 1):
                nu = list(mu)
                nu[i - 1] -= t
                nu[i] += t
                result[tuple(nu)] += c
        elif m < -1:
            for t in range(1, -m):
                nu = list(mu)
                nu[i - 1] += t
                nu[i] -= t
                result[tuple(nu)] -= c
    return {mu: c for mu, c in result.items() if c}


def demazure_character(w: Permutation, weight: DominantWeight, word: Sequence[int] | None = None) -> CharacterPolynomial:
    """
    The character of `D_{wλ}` as a map from GL_n weights to multiplicities.

    ## Parameters
    - `w` ( *Permutation* ) – The Weyl group element.
    - `weight` ( *DominantWeight* ) – The highest weight; must have `n-1` coordinates.
    - `word` ( *list[int]*, *optional* ) – A reduced word for `w`; computed when omitted.

    ## Raises
    - *InputError* – If `word` is not a reduced word of `w` or the sizes disagree.
    - *ConsistencyError* – If a negative multiplicity appears.
    """
    check_sizes(w, weight)
    if word is None:
        word = reduced_word(w)
    elif len(word) != length(w) or word_product(w.n, word) != w:
        raise InputError(f"{list(word)} is not a reduced word for {w}")
    character: CharacterPolynomial = {weight.partition(): 1}
    for i in reversed(word):
        character = demazure_operator(i, character)
    negative = {mu: c for mu, c in character.items() if c < 0}
    if negative:
        raise ConsistencyError(f"Negative Demazure multiplicities for {w}, {weight}: {negative}")
    return character


def demazure_dim(w: Permutation, weight: DominantWeight, word: Sequence[int] | None = None) -> int:
    """
    `dim D_{wλ}`: the Demazure character evaluated at all-ones.
    """
    return sum(demazure_character(w, weight, word).values())


def weyl_dimension(weight: DominantWeight) -> int:
    """
    `dim L_λ` by the Weyl dimension formula.
    """
    p = weight.partition()
    n = len(p)
    value = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            value *= Fraction(p[i] - p[j] + j - i, j - i)
    return int(value)


def check_sizes(w: Permutation, weight: DominantWeight) -> None:
    """
    Rejects a weight whose size does not match `w`.

    ## Raises
    - *InputError* – If `weight.n != w.n`.
    """
    if weight.n != w.n:
        raise InputError(f"Weight {weight} has {len(weight.coords)} coordinates; expected {w.n - 1} for {w}")


def _induced_order(t: Any) -> tuple[int, Any]:
    return (-total_grade(t), t)


@lru_cache(maxsize=8)
def _classical_closure(w: Permutation, weight: DominantWeight) -> tuple[GradedProfile, GradedProfile]:
    check_sizes(w, weight)
    n = w.n
    roots = ordered_inversions(w)
    start_time = time.perf_counter()

    start = {highest_tensor(weight): 1}
    start_weight = torus_weight(highest_tensor(weight), n)
    spans: dict[WeightVector, EchelonSpan] = {start_weight: EchelonSpan(order=_induced_order)}
    spans[start_weight].insert(start)
    filtration: Counter[tuple[int, WeightVector]] = Counter({(0, start_weight): 1})

    frontier = [start]
    step = 0
    while frontier:
        step += 1
        added = []
        for vector in frontier:
            for root in roots:
                image = act_on_vector(Action.CLASSICAL, root, vector)
                if not image:
                    continue
                cell = torus_weight(next(iter(image)), n)
                span = spans.get(cell)
                if span is None:
                    span = spans[cell] = EchelonSpan(order=_induced_order)
                if span.insert(image):
                    added.append(image)
                    filtration[(step, cell)] += 1
        logger.debug(f"Classical closure {w} {weight}: step {step} added {len(added)}")
        frontier = added

    induced: Counter[tuple[int, WeightVector]] = Counter()
    for cell, span in spans.items():
        for pivot in span.pivots:
            induced[(total_grade(pivot), cell)] += 1

    filtration_profile = GradedProfile(dict(filtration))
    induced_profile = GradedProfile(dict(induced))
    logger.info(
        f"Classical closure {w} {weight}: dim {filtration_profile.total}, "
        f"{step - 1} steps, {time.perf_counter() - start_time:.2f}s"
    )
    return filtration_profile, induced_profile


def classical_filtration_profile(w: Permutation, weight: DominantWeight) -> GradedProfile:
    """
    The (grade, weight) profile of `D~_{wλ}^a`.

    Entry `(m, ν)` is `dim (D~_{≤m})_ν - dim (D~_{≤m-1})_ν` where `D~_{≤m} = U(n_{-w})_{≤m} v_λ`,
    computed by closing `t_λ` under the classical action of the roots of `n_{-w}` inside `T_λ`,
    one PBW degree per step, until a step adds nothing.

    ## Returns
    - *GradedProfile* – Its total equals `demazure_dim(w, λ)`.
    """
    filtration, _ = _classical_closure(w, weight)
    return GradedProfile(dict(filtration.table))


def induced_profile(w: Permutation, weight: DominantWeight) -> GradedProfile:
    """
    The (grade, weight) profile of `H_{wλ} ⊂ L_λ^a`: initial forms (top `T_λ`-grade parts) of `D~_{wλ}`.
    """
    _, induced = _classical_closure(w, weight)
    return GradedProfile(dict(induced.table))
