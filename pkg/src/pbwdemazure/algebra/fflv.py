"""
# pbwdemazure.algebra.fflv

Minimal monomials, the sets `Γ_{w_k}` and their Minkowski sums `Γ_λ`.

An `ExponentVector` is a tuple of non-negative integers aligned with `ordered_inversions(w)`:
entry `r` is the exponent of the `r`-th root vector. Monomials are compared by total degree
first and then lexicographically along that root order, so at the first root where two
monomials differ the one containing it in the lesser degree is smaller.
"""
from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Any, Iterable, Mapping, Sequence

from ..logging import logger
from ..errors import InputError
from .demazure import fund_basis
from .rootsystem import (
    DominantWeight, Permutation, RootIndex,
    ordered_inversions, root_order_key,
)
from .wedgerep import WedgeIndex, act_degenerate, highest_wedge, pbw_degree

ExponentVector = tuple[int, ...]
LatticeSet = frozenset[ExponentVector]



def monomial_key(exponents: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """
    Sort key of the monomial order on vectors aligned with one common root order.
    """
    return (sum(exponents), tuple(exponents))


def monomial_cmp(a: Mapping[RootIndex, int], b: Mapping[RootIndex, int]) -> int:
    """
    Compares two monomials given as `{root: exponent}` maps.

    ## Returns
    - *int* – Negative if `a < b`, zero if equal, positive if `a > b`.
    """
    roots = sorted({RootIndex(*r) for r in a} | {RootIndex(*r) for r in b}, key=root_order_key)
    key_a = monomial_key([a.get(r, 0) for r in roots])
    key_b = monomial_key([b.get(r, 0) for r in roots])
    return (key_a > key_b) - (key_a < key_b)


def exponent_vector(w: Permutation, factors: Iterable[tuple[int, int]]) -> ExponentVector:
    """
    Builds the exponent vector of a product of root vectors, e.g. `[(1, 4), (2, 3)]`.

    ## Raises
    - *InputError* – If a factor is not an inversion of `w`.
    """
    roots = ordered_inversions(w)
    exponents = [0] * len(roots)
    for factor in factors:
        root = RootIndex(*factor)
        if root not in roots:
            raise InputError(f"f{list(root)} is not in n_-w for w={w}")
        exponents[roots.index(root)] += 1
    return tuple(exponents)


def _apply_monomial(roots: Sequence[RootIndex], exponents: ExponentVector, k: int) -> dict[WedgeIndex, int]:
    vector = {highest_wedge(k): 1}
    for root, e in zip(roots, exponents):
        for _ in range(e):
            image: dict[WedgeIndex, int] = {}
            for index, c in vector.items():
                moved = act_degenerate(root, index)
                if moved is not None:
                    sign, target = moved
                    image[target] = image.get(target, 0) + sign * c
            vector = {index: c for index, c in image.items() if c}
            if not vector:
                return vector
    return vector


def minimal_monomial(w: Permutation, k: int, index: WedgeIndex) -> ExponentVector:
    """
    The least monomial `M` in `U(n_{-w}^a)` with `M v_{w_k}` a nonzero multiple of `b_S`.

    Searches the monomials of degree `pbw_degree(S)` in increasing order.

    ## Parameters
    - `w` ( *Permutation* ) – The Weyl group element.
    - `k` ( *int* ) – The level of `index`.
    - `index` ( *WedgeIndex* ) – The target `S`; must lie in `fund_basis(w, k)`.

    ## Raises
    - *InputError* – If `S` is not in the fundamental Demazure basis.
    """
    if len(index) != k or index not in fund_basis(w, k):
        raise InputError(f"{list(index)} is not in the level-{k} Demazure basis of {w}")
    roots = ordered_inversions(w)
    degree = pbw_degree(index)
    candidates = []
    for chosen in combinations_with_replacement(range(len(roots)), degree):
        exponents = [0] * len(roots)
        for r in chosen:
            exponents[r] += 1
        candidates.append(tuple(exponents))
    for exponents in sorted(candidates):
        if _apply_monomial(roots, exponents, k).get(index):
            return exponents
    # unreachable for members of fund_basis
    raise InputError(f"No monomial of {w} reaches {list(index)}")


def gamma_set(w: Permutation, k: int) -> LatticeSet:
    """
    `Γ_{w_k}`: the exponent vectors of the minimal monomials over `fund_basis(w, k)`.
    """
    return frozenset(minimal_monomial(w, k, index) for index in fund_basis(w, k))


def minkowski_sum(a: Iterable[ExponentVector], b: Iterable[ExponentVector]) -> LatticeSet:
    """
    `{u + v : u ∈ a, v ∈ b}` for vectors aligned with the same roots.
    """
    b = list(b)
    return frozenset(tuple(x + y for x, y in zip(p, q)) for p in a for q in b)


def minkowski_set(w: Permutation, weight: DominantWeight) -> LatticeSet:
    """
    `Γ_λ`: the Minkowski sum with `a_k` copies of `Γ_{w_k}` for every level `k`.
    """
    if weight.n != w.n:
        raise InputError(f"Weight {weight} does not match n={w.n}")
    result: LatticeSet = frozenset({(0,) * len(ordered_inversions(w))})
    for k, a in enumerate(weight.coords, start=1):
        if not a:
            continue
        summand = gamma_set(w, k)
        for _ in range(a):
            result = minkowski_sum(result, summand)
        logger.debug(f"Minkowski sum {w} {weight}: after level {k}, {len(result)} points")
    return result


def minkowski_count(w: Permutation, weight: DominantWeight) -> tuple[LatticeSet, int]:
    """
    `Γ_λ` together with its cardinality.
    """
    points = minkowski_set(w, weight)
    logger.info(f"|Γ| for {w} {weight}: {len(points)}")
    return points, len(points)


def sorted_points(points: Iterable[ExponentVector]) -> list[ExponentVector]:
    """
    The points in increasing monomial order.
    """
    return sorted(points, key=monomial_key)


def format_monomial(w: Permutation, exponents: ExponentVector) -> str:
    """
    Text form such as `f[1,4]*f[2,3]` or `f[1,2]^2`; the empty monomial prints as `1`.
    """
    factors = []
    for root, e in sorted(zip(ordered_inversions(w), exponents)):
        if e:
            factors.append(f"f[{root.i},{root.j}]" + (f"^{e}" if e > 1 else ""))
    return "*".join(factors) or "1"


def monomial_to_json(w: Permutation, exponents: ExponentVector) -> list[dict[str, Any]]:
    """
    The nonzero factors as `{"root": [i, j], "exp": e}` in root order.
    """
    return [
        {"root": [root.i, root.j], "exp": e}
        for root, e in sorted(zip(ordered_inversions(w), exponents))
        if e
    ]


def lattice_to_json(w: Permutation, points: Iterable[ExponentVector]) -> list[list[dict[str, Any]]]:
    """
    Serializes a lattice set as a list of `[{"root": [i, j], "exp": e}, ...]` entries in monomial order.
    """
    return [monomial_to_json(w, p) for p in sorted_points(points)]
