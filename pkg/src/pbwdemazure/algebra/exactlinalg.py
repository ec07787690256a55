"""
# pbwdemazure.algebra.exactlinalg

Exact sparse linear algebra over QQ.

A `SparseVector` is a plain dict from an opaque, hashable and orderable index to a nonzero
rational coefficient (`int` or `fractions.Fraction`). `EchelonSpan` tracks the span of the
vectors inserted so far in reduced row echelon form and answers membership by a single
`reduce` call.

Rows are kept as primitive integer vectors: denominators are cleared on entry and every
row is divided by the gcd of its coefficients after each elimination step, so no
`Fraction` arithmetic happens inside the elimination loop. Residuals are therefore
returned up to a nonzero rational scale, which never changes membership or rank.

Pivots default to the natural ordering of the indices. For the nested-tuple tensor indices this
is deterministic on every platform and differs from ordering their serialized text only in which
vector of each row carries the pivot; dimensions and membership do not depend on it.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Any, Callable, Hashable, Iterable, Mapping

SparseVector = dict[Hashable, "int | Fraction"]



def cleaned(vector: Mapping[Hashable, Any]) -> SparseVector:
    """
    Returns a copy of `vector` without zero coefficients.
    """
    return {index: c for index, c in vector.items() if c}


def add_scaled(target: SparseVector, source: Mapping[Hashable, Any], scale: Any = 1) -> None:
    """
    In place `target += scale * source`, dropping coefficients that cancel.
    """
    for index, c in source.items():
        value = target.get(index, 0) + scale * c
        if value:
            target[index] = value
        else:
            target.pop(index, None)


def primitive(vector: Mapping[Hashable, Any]) -> dict[Hashable, int]:
    """
    The primitive integer vector on the same line as `vector`.

    Clears denominators and divides by the gcd of the numerators; the sign is left as is.
    """
    coefficients = [c for c in vector.values() if c]
    if not coefficients:
        return {}
    denominator = lcm(*(Fraction(c).denominator for c in coefficients))
    scaled = {index: int(c * denominator) for index, c in vector.items() if c}
    divisor = gcd(*scaled.values())
    if divisor != 1:
        scaled = {index: c // divisor for index, c in scaled.items()}
    return scaled


def _combine(a: int, v: dict[Hashable, int], b: int, row: Mapping[Hashable, int]) -> dict[Hashable, int]:
    # a*v - b*row, made primitive
    result = {index: a * c for index, c in v.items()} if a != 1 else dict(v)
    for index, c in row.items():
        value = result.get(index, 0) - b * c
        if value:
            result[index] = value
        else:
            result.pop(index, None)
    if result:
        divisor = gcd(*result.values())
        if divisor != 1:
            result = {index: c // divisor for index, c in result.items()}
    return result


class EchelonSpan:
    """
    The span of a growing set of sparse vectors in reduced row echelon form.

    Each stored row is a primitive integer vector whose pivot (the least index in the
    span's pivot order) carries a positive coefficient; no other row has a nonzero entry
    at that pivot. Single writer; concurrent readers are safe between mutations.

    ## Init Parameters
    - `order` ( *Callable*, *optional* ) – Sort key choosing pivots; defaults to the natural
      ordering of the indices.
    """
    def __init__(self, order: Callable[[Any], Any] | None = None) -> None:
        self._order = order
        self._rows: dict[Hashable, dict[Hashable, int]] = {}


    @property
    def dimension(self) -> int:
        return len(self._rows)


    def __len__(self) -> int:
        return len(self._rows)


    @property
    def pivots(self) -> list[Hashable]:
        """
        The pivot indices of the stored rows, in pivot order.
        """
        return sorted(self._rows, key=self._order)


    def rows(self) -> Iterable[tuple[Hashable, dict[Hashable, int]]]:
        return self._rows.items()


    def _reduce_primitive(self, v: dict[Hashable, int]) -> dict[Hashable, int]:
        hits = [index for index in v if index in self._rows]
        for pivot in hits:
            c = v.get(pivot)
            if not c:
                continue
            row = self._rows[pivot]
            p = row[pivot]
            g = gcd(p, c)
            v = _combine(p // g, v, c // g, row)
        return v


    def reduce(self, v: Mapping[Hashable, Any]) -> SparseVector:
        """
        Eliminates `v` against every stored pivot.

        ## Parameters
        - `v` ( *SparseVector* ) – Vector over the same index universe.

        ## Returns
        - *SparseVector* – A nonzero rational multiple of the residual; empty iff `v` lies in the span.
        """
        return self._reduce_primitive(primitive(v))


    def absorb(self, v: Mapping[Hashable, Any]) -> SparseVector:
        """
        Reduces `v` and, if the residual is nonzero, adds it to the span.

        ## Returns
        - *SparseVector* – The (primitive) residual that was added, or an empty dict.
        """
        residual = self.reduce(v)
        if residual:
            self._add_reduced(residual)
        return residual


    def insert(self, v: Mapping[Hashable, Any]) -> bool:
        """
        Adds `v` to the span.

        ## Returns
        - `True` (and the dimension grows by one) iff `v` was not already in the span.
        """
        return bool(self.absorb(v))


    def __contains__(self, v: Mapping[Hashable, Any]) -> bool:
        return not self.reduce(v)


    def _add_reduced(self, residual: dict[Hashable, int]) -> None:
        pivot = min(residual, key=self._order)
        if residual[pivot] < 0:
            residual = {index: -c for index, c in residual.items()}
        p = residual[pivot]
        for key, row in list(self._rows.items()):
            c = row.get(pivot)
            if c:
                g = gcd(p, c)
                updated = _combine(p // g, row, c // g, residual)
                if updated[key] < 0:
                    updated = {index: -x for index, x in updated.items()}
                self._rows[key] = updated
        self._rows[pivot] = dict(residual)


def rank(vectors: Iterable[Mapping[Hashable, Any]]) -> int:
    """
    The dimension of the span of `vectors`.
    """
    span = EchelonSpan()
    for v in vectors:
        span.insert(v)
    return span.dimension
