"""
# pbwdemazure.algebra.cartan

The Cartan component `E_{wλ} = U(n_{-w}^a) t_λ^a ⊂ T_λ^a` and the kernel of the comparison map
`φ_{wλ}: D~_{wλ}^a -> L_λ^a`.

`φ_{wλ}` respects grade and torus weight and maps onto `E_{wλ}`, so its kernel profile is the
cellwise difference between the classical filtration profile and the Cartan profile.
"""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Sequence

from ..logging import logger
from ..errors import ConsistencyError
from .demazure import GradedProfile, check_sizes, classical_filtration_profile, demazure_dim
from .exactlinalg import EchelonSpan
from .rootsystem import (
    DominantWeight, Permutation, RootIndex, WeightVector,
    ordered_inversions, positive_roots, root_order_key,
)
from .wedgerep import Action, act_on_vector, highest_tensor, torus_weight



@dataclass
class KernelReport:
    """
    Dimension data of `ker φ_{wλ}`.

    ## Attributes
    - `d_dim` ( *int* ) – `dim D_{wλ}`.
    - `e_dim` ( *int* ) – `dim E_{wλ}`.
    - `kernel_cells` ( *dict* ) – Nonzero kernel dimensions per `(grade, weight)`.
    """
    d_dim: int
    e_dim: int
    kernel_cells: dict[tuple[int, WeightVector], int] = field(default_factory=dict)

    @property
    def kernel_total(self) -> int:
        return sum(self.kernel_cells.values())

    @property
    def kernel_by_grade_weight(self) -> dict[tuple[int, WeightVector], int]:
        return dict(self.kernel_cells)

    def grades(self) -> list[int]:
        """
        The distinct grades carrying kernel cells, ascending.
        """
        return sorted({m for m, _ in self.kernel_cells})

    def weights(self) -> list[WeightVector]:
        """
        The distinct weights of the kernel cells, sorted.
        """
        return sorted({weight for _, weight in self.kernel_cells})

    def to_json(self) -> dict[str, Any]:
        return {
            "d_dim": self.d_dim,
            "e_dim": self.e_dim,
            "kernel_total": self.kernel_total,
            "kernel_cells": [[m, list(weight), dim] for (m, weight), dim in sorted(self.kernel_cells.items())],
        }

    @classmethod
    def from_json(cls, payload: dict[str, Any]) -> KernelReport:
        cells = {(int(m), tuple(weight)): int(dim) for m, weight, dim in payload["kernel_cells"]}
        return cls(int(payload["d_dim"]), int(payload["e_dim"]), cells)


@lru_cache(maxsize=8)
def _degenerate_closure(weight: DominantWeight, roots: tuple[RootIndex, ...]) -> GradedProfile:
    n = weight.n
    start_time = time.perf_counter()
    start = {highest_tensor(weight): 1}
    table: Counter[tuple[int, WeightVector]] = Counter({(0, torus_weight(highest_tensor(weight), n)): 1})

    # every degenerate move raises the grade by one, so step m produces exactly grade m
    frontier = [start]
    grade = 0
    while frontier:
        grade += 1
        spans: dict[WeightVector, EchelonSpan] = {}
        added = []
        for vector in frontier:
            for root in roots:
                image = act_on_vector(Action.DEGENERATE, root, vector)
                if not image:
                    continue
                cell = torus_weight(next(iter(image)), n)
                span = spans.setdefault(cell, EchelonSpan())
                if span.insert(image):
                    added.append(image)
                    table[(grade, cell)] += 1
        logger.debug(f"Degenerate closure {weight}: grade {grade} added {len(added)}")
        frontier = added

    profile = GradedProfile(dict(table))
    logger.info(
        f"Degenerate closure {weight} over {len(roots)} roots: dim {profile.total}, "
        f"top grade {profile.max_grade()}, {time.perf_counter() - start_time:.2f}s"
    )
    return profile


def cartan_profile(w: Permutation, weight: DominantWeight, roots: Sequence[RootIndex] | None = None) -> GradedProfile:
    """
    The (grade, weight) profile of `E_{wλ}`.

    ## Parameters
    - `w` ( *Permutation* ) – The Weyl group element; its inversions generate `n_{-w}^a`.
    - `weight` ( *DominantWeight* ) – The highest weight.
    - `roots` ( *list[RootIndex]*, *optional* ) – Overrides the generating roots.

    ## Returns
    - *GradedProfile* – The profile of the span closure of `t_λ^a` under the degenerate action.
    """
    check_sizes(w, weight)
    if roots is None:
        roots = ordered_inversions(w)
    profile = _degenerate_closure(weight, tuple(sorted(roots, key=root_order_key)))
    return GradedProfile(dict(profile.table))


def degenerate_flag_dim(weight: DominantWeight) -> int:
    """
    `dim U(n_-^a) t_λ^a`, the closure under every root vector; equals `dim L_λ`.
    """
    roots = tuple(sorted(positive_roots(weight.n), key=root_order_key))
    return _degenerate_closure(weight, roots).total


def kernel_profile(
    w: Permutation,
    weight: DominantWeight,
    classical: GradedProfile | None = None,
    cartan: GradedProfile | None = None,
) -> KernelReport:
    """
    The kernel profile of `φ_{wλ}`.

    ## Parameters
    - `w` ( *Permutation* ) – The Weyl group element.
    - `weight` ( *DominantWeight* ) – The highest weight.
    - `classical` ( *GradedProfile*, *optional* ) – A precomputed `classical_filtration_profile`.
    - `cartan` ( *GradedProfile*, *optional* ) – A precomputed `cartan_profile`.

    ## Raises
    - *ConsistencyError* – If the classical total differs from the character-formula dimension,
      or if some cell of the Cartan profile exceeds the classical one.
    """
    if classical is None:
        classical = classical_filtration_profile(w, weight)
    expected = demazure_dim(w, weight)
    if classical.total != expected:
        logger.error(f"Classical profile of {w} {weight} has total {classical.total}, character gives {expected}")
        raise ConsistencyError(
            f"Classical profile of {w}, {weight} has total {classical.total} but dim D = {expected}"
        )
    if cartan is None:
        cartan = cartan_profile(w, weight)

    cells: dict[tuple[int, WeightVector], int] = {}
    for key in sorted(set(classical.table) | set(cartan.table)):
        difference = classical.table.get(key, 0) - cartan.table.get(key, 0)
        if difference < 0:
            m, cell = key
            logger.error(f"Negative kernel cell for {w} {weight} at grade {m}, weight {cell}: {difference}")
            raise ConsistencyError(
                f"Kernel cell (grade {m}, weight {list(cell)}) of {w}, {weight} is negative: {difference}"
            )
        if difference:
            cells[key] = difference

    report = KernelReport(classical.total, cartan.total, cells)
    logger.info(f"Kernel {w} {weight}: {report.kernel_total} (d={report.d_dim}, e={report.e_dim})")
    return report


def top_grade_slice(profile: GradedProfile) -> tuple[int, dict[WeightVector, int]]:
    """
    The highest grade carrying a nonzero cell, with its weight cells.
    """
    m = profile.max_grade()
    return m, profile.grade_slice(m)


def limit_is_torus_fixed(profile: GradedProfile) -> bool:
    """
    True iff the top nonzero grade of a `D~_{wλ}^a` profile is a single one-dimensional weight cell.

    This is the condition for the limit of the generic point under the grading torus to be
    fixed by the maximal torus as well.
    """
    _, cells = top_grade_slice(profile)
    return len(cells) == 1 and sum(cells.values()) == 1
