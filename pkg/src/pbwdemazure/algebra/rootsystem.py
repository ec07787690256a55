"""
# pbwdemazure.algebra.rootsystem

Combinatorics of the symmetric group S_n and of type A weights.

`Permutation` – A Weyl group element in 1-indexed one-line notation `[w(1), ..., w(n)]`.
`RootIndex` – A positive root label `(i, j)` with `i < j`; also labels the root vectors `f_{i,j}`.
`DominantWeight` – Coordinates `(a_1, ..., a_{n-1})` in the basis of fundamental weights.

The inversion set of `w` labels the root vectors spanning the subalgebra `n_{-w}`.
Weights of the maximal torus are plain integer tuples in the `e_1..e_n` coordinates (GL_n
weights); two of them describe the same SL_n weight iff they differ by a constant vector.
"""
from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterator, NamedTuple, Sequence
from dataclasses import dataclass

from ..errors import InputError


WeightVector = tuple[int, ...]



class RootIndex(NamedTuple):
    """
    A positive root `alpha_{i,j}` of type A_{n-1}, `1 <= i < j <= n`.
    """
    i: int
    j: int

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.replace(" ", "").split(",") if part != "")
    except ValueError as e:
        raise InputError(f"Malformed {what} {text!r}: {e}") from None
    if not values:
        raise InputError(f"Empty {what} {text!r}")
    return values


@dataclass(frozen=True)
class Permutation:
    """
    A permutation of `{1, ..., n}` in one-line notation.

    ## Attributes
    - `image` ( *tuple[int]* ) – The values `w(1), ..., w(n)`.
    """
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(int(v) for v in self.image)
        object.__setattr__(self, "image", image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise InputError(f"{list(image)} is not a permutation of 1..{len(image)}")

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """
        Parses comma-separated one-line notation such as `"6,4,2,5,3,1"`.

        ## Raises
        - *InputError* – If the text is not a permutation of `1..n`.
        """
        return cls(_parse_ints(text, "permutation"))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def simple(cls, n: int, i: int) -> Permutation:
        """
        The simple transposition `s_i` swapping `i` and `i+1`.
        """
        if not 1 <= i < n:
            raise InputError(f"Simple reflection index {i} out of range for n={n}")
        image = list(range(1, n + 1))
        image[i - 1], image[i] = image[i], image[i - 1]
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        # composition as functions: (self * other)(i) = self(other(i))
        if self.n != other.n:
            raise InputError("Cannot compose permutations of different sizes")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        """
        The inverse permutation.
        """
        image = [0] * self.n
        for i, v in enumerate(self.image, start=1):
            image[v - 1] = i
        return Permutation(tuple(image))

    def format(self) -> str:
        return ",".join(str(v) for v in self.image)

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.image) + "]"


@dataclass(frozen=True)
class DominantWeight:
    """
    An integral dominant weight `a_1 w_1 + ... + a_{n-1} w_{n-1}`.

    ## Attributes
    - `coords` ( *tuple[int]* ) – The non-negative coordinates `(a_1, ..., a_{n-1})`.
    """
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(a) for a in self.coords)
        object.__setattr__(self, "coords", coords)
        if not coords:
            raise InputError("A weight needs at least one coordinate")
        if any(a < 0 for a in coords):
            raise InputError(f"Weight {list(coords)} is not dominant")

    @classmethod
    def parse(cls, text: str) -> DominantWeight:
        """
        Parses comma-separated coordinates such as `"1,1,0,1,1"`.
        """
        return cls(_parse_ints(text, "weight"))

    @classmethod
    def fundamental(cls, n: int, k: int) -> DominantWeight:
        if not 1 <= k < n:
            raise InputError(f"Level {k} out of range for n={n}")
        return cls(tuple(1 if m == k else 0 for m in range(1, n)))

    @property
    def n(self) -> int:
        return len(self.coords) + 1

    def __getitem__(self, k: int) -> int:
        """
        The coordinate `a_k` (1-indexed).
        """
        return self.coords[k - 1]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def partition(self) -> WeightVector:
        """
        The GL_n weight of the highest weight vector: coordinate `m` is `a_m + ... + a_{n-1}`.
        """
        parts = []
        total = 0
        for a in reversed(self.coords):
            total += a
            parts.append(total)
        return tuple(reversed(parts)) + (0,)

    def format(self) -> str:
        return ",".join(str(a) for a in self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.coords) + ")"


def canonical_weight(e: Sequence[int]) -> WeightVector:
    """
    The SL_n representative of a GL_n weight: subtracts the minimum entry.
    """
    low = min(e)
    return tuple(x - low for x in e)


def inversions(w: Permutation) -> frozenset[RootIndex]:
    """
    Returns the roots `(i, j)`, `i < j`, with `w(i) > w(j)`: the labels of `n_{-w}`.
    """
    return frozenset(
        RootIndex(i, j)
        for i, j in combinations(range(1, w.n + 1), 2)
        if w(i) > w(j)
    )


def length(w: Permutation) -> int:
    """
    The Coxeter length of `w`, i.e. the number of inversions.
    """
    return len(inversions(w))


def positive_roots(n: int) -> list[RootIndex]:
    """
    All `(i, j)` with `1 <= i < j <= n`, lexicographically.
    """
    return [RootIndex(i, j) for i, j in combinations(range(1, n + 1), 2)]


def root_order_key(root: RootIndex) -> tuple[int, int]:
    """
    Sort key for the root ordering used throughout: by `i + j`, then by `j`.
    """
    return (root.i + root.j, root.j)


def ordered_inversions(w: Permutation) -> list[RootIndex]:
    """
    The inversion set of `w` sorted by `root_order_key`.
    """
    return sorted(inversions(w), key=root_order_key)


def support(weight: DominantWeight) -> tuple[int, ...]:
    """
    The strictly increasing tuple `d` of levels `k` with `a_k > 0`.

    An empty tuple signals the zero weight; callers decide whether to reject it.
    """
    return tuple(k for k, a in enumerate(weight.coords, start=1) if a > 0)


def _pattern(values: Sequence[int]) -> tuple[int, ...]:
    ranked = sorted(values)
    return tuple(ranked.index(v) + 1 for v in values)


_TRIANGULAR_OBSTRUCTIONS = {(4, 2, 3, 1), (2, 4, 1, 3)}


def is_triangular(w: Permutation) -> bool:
    """
    True iff the one-line notation of `w` avoids the patterns 4231 and 2413.
    """
    return all(
        _pattern(sub) not in _TRIANGULAR_OBSTRUCTIONS
        for sub in combinations(w.image, 4)
    )


def _descents(w: Permutation) -> list[int]:
    return [i for i in range(1, w.n) if w(i) > w(i + 1)]


def reduced_word(w: Permutation, strategy: str = "first") -> list[int]:
    """
    Returns a reduced word `[i_1, ..., i_l]` with `w = s_{i_1} ... s_{i_l}`.

    Repeatedly strips a right descent: if `w(i) > w(i+1)` then `w = (w s_i) s_i` with
    `l(w s_i) = l(w) - 1`.

    ## Parameters
    - `w` ( *Permutation* ) – The element to factor.
    - `strategy` ( *str*, *optional* ) – `"first"` strips the leftmost descent, `"last"` the rightmost.

    ## Returns
    - *list[int]* – Simple reflection indices; the length equals `length(w)`.
    """
    if strategy not in ("first", "last"):
        raise InputError(f"Unknown reduced word strategy {strategy!r}")
    image = list(w.image)
    word: list[int] = []
    while True:
        descents = [i for i in range(1, len(image)) if image[i - 1] > image[i]]
        if not descents:
            break
        i = descents[0] if strategy == "first" else descents[-1]
        image[i - 1], image[i] = image[i], image[i - 1]
        word.append(i)
    word.reverse()
    return word


def reduced_words(w: Permutation) -> Iterator[list[int]]:
    """
    Yields every reduced word of `w` (exponentially many; intended for small `w`).
    """
    descents = _descents(w)
    if not descents:
        yield []
        return
    for i in descents:
        shorter = w * Permutation.simple(w.n, i)
        for word in reduced_words(shorter):
            yield word + [i]


def word_product(n: int, word: Sequence[int]) -> Permutation:
    """
    Multiplies out `s_{i_1} ... s_{i_l}` as a permutation of `1..n`.
    """
    result = Permutation.identity(n)
    for i in word:
        result = result * Permutation.simple(n, i)
    return result


def all_permutations(n: int) -> Iterator[Permutation]:
    """
    Every element of S_n, in lexicographic order of the one-line notation.
    """
    for image in permutations(range(1, n + 1)):
        yield Permutation(image)
