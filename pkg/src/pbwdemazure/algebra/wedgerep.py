"""
# pbwdemazure.algebra.wedgerep

Fundamental representations `L_{w_k} = Λ^k V` of sl_n and their symmetric/tensor products.

A `WedgeIndex` is a strictly increasing tuple `(i_1, ..., i_k)` naming the basis vector
`b_{i_1} ∧ ... ∧ b_{i_k}`; its level `k` is its length. A `TensorIndex` names a basis vector
of `T_λ = Sym^{a_1}(L_{w_1}) ⊗ ... ⊗ Sym^{a_{n-1}}(L_{w_{n-1}})` (or of its degenerate twin
`T_λ^a`): a flat tuple of wedge indices ordered by `(level, entries)`, so that every group of
equal-level factors is sorted (symmetric-product normal form).

Root vectors act on wedges by the replacement `b_i -> b_j` followed by re-sorting, with sign
`(-1)^{#{s in S : i < s < j}}`. The degenerate action keeps only the moves that raise the
PBW degree by one. On products, root vectors act as derivations; equal components arising
from different slots accumulate additively.
"""
from __future__ import annotations

from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping

from ..errors import InputError
from .rootsystem import DominantWeight, RootIndex, WeightVector

WedgeIndex = tuple[int, ...]
TensorIndex = tuple[WedgeIndex, ...]



class Action(str, Enum):
    """
    Which root-vector action to use: on `L_λ` (classical) or on `L_λ^a` (degenerate).
    """
    CLASSICAL = "classical"
    DEGENERATE = "degenerate"


def wedge_index(entries: Iterable[int], n: int | None = None) -> WedgeIndex:
    """
    Validates and returns a wedge index.

    ## Raises
    - *InputError* – If the entries are not strictly increasing or fall outside `1..n`.
    """
    index = tuple(int(e) for e in entries)
    if not index or any(a >= b for a, b in zip(index, index[1:])):
        raise InputError(f"Wedge index {list(index)} must be nonempty and strictly increasing")
    if index[0] < 1 or (n is not None and (index[-1] > n or len(index) >= n)):
        raise InputError(f"Wedge index {list(index)} out of range for n={n}")
    return index


def wedge_indices(n: int, k: int) -> list[WedgeIndex]:
    """
    All level-`k` wedge indices over `1..n`, in lexicographic order.
    """
    return list(combinations(range(1, n + 1), k))


def highest_wedge(k: int) -> WedgeIndex:
    """
    `(1, ..., k)`, the highest weight basis vector of the `k`-th fundamental representation.
    """
    return tuple(range(1, k + 1))


def pbw_degree(index: WedgeIndex) -> int:
    """
    The PBW degree `s` of a wedge basis vector: the number of entries exceeding its level.
    """
    k = len(index)
    return sum(1 for i in index if i > k)


@lru_cache(maxsize=None)
def act_classical(root: tuple[int, int], index: WedgeIndex) -> tuple[int, WedgeIndex] | None:
    """
    Applies `f_{i,j}` (the matrix unit `b_i -> b_j`) to a wedge basis vector.

    ## Returns
    - `(sign, index')` or `None` when `i` is absent from the index or `j` is already present.
    """
    i, j = root
    if i not in index or j in index:
        return None
    between = sum(1 for s in index if i < s < j)
    replaced = tuple(sorted(j if s == i else s for s in index))
    return (-1 if between % 2 else 1, replaced)


@lru_cache(maxsize=None)
def act_degenerate(root: tuple[int, int], index: WedgeIndex) -> tuple[int, WedgeIndex] | None:
    """
    Applies `f^a_{i,j}` on `L_{w_k}^a`: the classical move when it raises the PBW degree.

    Equivalent to the classical action restricted to `i <= k < j`.
    """
    i, j = root
    k = len(index)
    if not (i <= k < j):
        return None
    return act_classical(root, index)


def _act(mode: Action, root: tuple[int, int], index: WedgeIndex) -> tuple[int, WedgeIndex] | None:
    if mode is Action.DEGENERATE:
        return act_degenerate(root, index)
    return act_classical(root, index)


def factor_shape(weight: DominantWeight) -> tuple[int, ...]:
    """
    The levels of the factors of `T_λ`: level `k` repeated `a_k` times, ascending.
    """
    return tuple(k for k, a in enumerate(weight.coords, start=1) for _ in range(a))


def normal_form(components: Iterable[WedgeIndex]) -> TensorIndex:
    """
    Sorts components by `(level, entries)`, i.e. each equal-level group in sorted order.
    """
    return tuple(sorted(components, key=lambda c: (len(c), c)))


def highest_tensor(weight: DominantWeight) -> TensorIndex:
    """
    The index of `t_λ`: the highest wedge `(1..k)` once per factor of level `k`.
    """
    return tuple(highest_wedge(k) for k in factor_shape(weight))


def tensor_act(mode: Action, root: tuple[int, int], t: TensorIndex) -> dict[TensorIndex, int]:
    """
    Applies a root vector to a product basis vector by the Leibniz rule.

    ## Parameters
    - `mode` ( *Action* ) – Classical or degenerate action on each factor.
    - `root` ( *RootIndex* ) – The root vector `f_{i,j}`.
    - `t` ( *TensorIndex* ) – A basis vector in normal form.

    ## Returns
    - *dict* – Integer coefficients over normal-form indices (empty when every factor is killed).
    """
    result: dict[TensorIndex, int] = {}
    components = list(t)
    for slot, component in enumerate(components):
        moved = _act(mode, root, component)
        if moved is None:
            continue
        sign, replaced = moved
        target = normal_form(components[:slot] + [replaced] + components[slot + 1:])
        value = result.get(target, 0) + sign
        if value:
            result[target] = value
        else:
            del result[target]
    return result


def act_on_vector(mode: Action, root: tuple[int, int], vector: Mapping[TensorIndex, int]) -> dict[TensorIndex, int]:
    """
    Linear extension of `tensor_act` to a sparse vector.
    """
    result: dict[TensorIndex, int] = {}
    for t, c in vector.items():
        for target, sign in tensor_act(mode, root, t).items():
            value = result.get(target, 0) + c * sign
            if value:
                result[target] = value
            else:
                del result[target]
    return result


def torus_weight(t: TensorIndex, n: int) -> WeightVector:
    """
    The GL_n weight of a product basis vector: coordinate `m` counts occurrences of `m`.
    """
    counts = [0] * n
    for component in t:
        for i in component:
            counts[i - 1] += 1
    return tuple(counts)


@lru_cache(maxsize=None)
def total_grade(t: TensorIndex) -> int:
    """
    The PBW grade of a product basis vector: the sum of the component degrees.
    """
    return sum(pbw_degree(component) for component in t)


def max_total_grade(weight: DominantWeight) -> int:
    """
    The top grade occurring in `T_λ^a`: `sum_k a_k min(k, n-k)`.
    """
    n = weight.n
    return sum(a * min(k, n - k) for k, a in enumerate(weight.coords, start=1))


def format_tensor(t: TensorIndex) -> str:
    """
    Nested bracket form, e.g. `[[1],[1,2],[1,2,3,4],[1,2,3,4,5]]`.
    """
    return "[" + ",".join("[" + ",".join(str(i) for i in c) + "]" for c in t) + "]"
