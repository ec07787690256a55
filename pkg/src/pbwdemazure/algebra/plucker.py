"""
# pbwdemazure.algebra.plucker

Coefficient polynomials of the degenerate flag embedding and Plücker polynomial checks.

- `p_poly(n, S)` – coefficient of `b_S` in `exp(sum z_{i,j} f^a_{i,j}) v_{w_k}` (`k = |S|`).
- `pw_poly(w, S)` – the same with every `z_{i,j}` outside the inversions of `w` set to zero.
- `PlueckerPolynomial` – polynomials in the symbols `X_S`, with the gradings `deg`, `wt`, `grad`.
- `evaluate(P, n, w)` – the substitution `X_S -> z_k p_S` (or `z_k p^w_S` when `w` is given).
- `verify_q(w, Q)` – certificate that `Q` lies in the restricted kernel but not in the initial
  ideal of the Schubert ideal.

Polynomials in the `z` variables are `sympy` ring elements over `QQ`, one ring per `n`.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Any, Iterable, Sequence

from sympy import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

from ..logging import logger
from ..errors import InputError
from .demazure import fund_basis
from .rootsystem import DominantWeight, Permutation, RootIndex, WeightVector, inversions, positive_roots
from .wedgerep import WedgeIndex, act_degenerate, highest_wedge, pbw_degree, wedge_index, wedge_indices

PlueckerMonomial = tuple[WedgeIndex, ...]



class ZRing:
    """
    The polynomial ring `QQ[z_1, ..., z_{n-1}, z_{i,j}]`.

    Column scalars `z_k` come first, then the root variables `z_{i,j}` in lexicographic order
    of `(i, j)`; the monomial order is lex on that generator order.
    """
    def __init__(self, n: int) -> None:
        self.n = n
        self.columns = list(range(1, n))
        self.roots = positive_roots(n)
        names = [f"z{k}" for k in self.columns] + [f"z{r.i}_{r.j}" for r in self.roots]
        self.ring = PolyRing(names, QQ, lex)
        gens = self.ring.gens
        self._column_gens = dict(zip(self.columns, gens[:n - 1]))
        self._root_gens = dict(zip(self.roots, gens[n - 1:]))
        self._labels = [f"z[{k}]" for k in self.columns] + [f"z[{r.i},{r.j}]" for r in self.roots]
        self._keys = [(k,) for k in self.columns] + [(r.i, r.j) for r in self.roots]


    @property
    def zero(self) -> PolyElement:
        return self.ring.zero


    @property
    def one(self) -> PolyElement:
        return self.ring.one


    def column(self, k: int) -> PolyElement:
        return self._column_gens[k]


    def root(self, root: tuple[int, int]) -> PolyElement:
        return self._root_gens[RootIndex(*root)]


    def restrict(self, poly: PolyElement, allowed: Iterable[RootIndex]) -> PolyElement:
        """
        Sets every root variable outside `allowed` to zero.
        """
        allowed = set(allowed)
        offset = self.n - 1
        dropped = [offset + r for r, root in enumerate(self.roots) if root not in allowed]
        kept = {monom: c for monom, c in poly.items() if not any(monom[g] for g in dropped)}
        return self.ring.from_dict(kept) if kept else self.ring.zero


    def format(self, poly: PolyElement) -> str:
        """
        Canonical text form, e.g. `z[1,4]*z[2,5] - z[1,5]*z[2,4]`.

        Terms are sorted by total degree and then by their sorted variable lists.

        ## Raises
        - *InputError* – If `poly` lives in the ring of another size.
        """
        if poly.ring is not self.ring:
            raise InputError(f"Polynomial belongs to another ring than z_ring({self.n})")
        if not poly:
            return "0"
        terms = []
        for monom, c in poly.items():
            factors = []
            for g, e in enumerate(monom):
                factors.extend([g] * e)
            factors.sort(key=lambda g: self._keys[g])
            key = (len(factors), [self._keys[g] for g in factors])
            body = "*".join(
                self._labels[g] + (f"^{monom[g]}" if monom[g] > 1 else "")
                for g in dict.fromkeys(factors)
            )
            terms.append((key, _to_fraction(c), body))
        terms.sort(key=lambda term: term[0])
        return _join_terms((c, body) for _, c, body in terms)


@lru_cache(maxsize=None)
def z_ring(n: int) -> ZRing:
    """
    The shared `ZRing` for `n`; one instance per size, so polynomials of equal size share a ring.
    """
    return ZRing(n)


def _to_fraction(c: Any) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _join_terms(terms: Iterable[tuple[Fraction, str]]) -> str:
    text = ""
    for c, body in terms:
        magnitude = abs(c)
        if not body:
            piece = str(magnitude)
        elif magnitude == 1:
            piece = body
        else:
            piece = f"{magnitude}*{body}"
        if not text:
            text = ("-" if c < 0 else "") + piece
        else:
            text += (" - " if c < 0 else " + ") + piece
    return text or "0"


@lru_cache(maxsize=None)
def p_vector(n: int, k: int) -> dict[WedgeIndex, PolyElement]:
    """
    `exp(sum_{i<j} z_{i,j} f^a_{i,j}) v_{w_k}` expanded in the wedge basis of `L_{w_k}^a`.

    The degenerate algebra is abelian, so the degree-`N` term is `(1/N) sum_r z_r f^a_r` applied
    to the degree-`N-1` term; the series stops once a term vanishes.
    """
    zr = z_ring(n)
    term: dict[WedgeIndex, PolyElement] = {highest_wedge(k): zr.one}
    total = dict(term)
    degree = 0
    while term:
        degree += 1
        following: dict[WedgeIndex, PolyElement] = {}
        for index, coefficient in term.items():
            for root in zr.roots:
                moved = act_degenerate(root, index)
                if moved is None:
                    continue
                sign, target = moved
                contribution = coefficient * zr.root(root) * sign
                following[target] = following.get(target, zr.zero) + contribution
        term = {index: c * QQ(1, degree) for index, c in following.items() if c}
        for index, c in term.items():
            total[index] = total.get(index, zr.zero) + c
    return {index: c for index, c in total.items() if c}


def p_poly(n: int, index: Sequence[int]) -> PolyElement:
    """
    The coefficient polynomial `p_S`; homogeneous of degree `pbw_degree(S)`.

    ## Parameters
    - `n` ( *int* ) – The rank plus one.
    - `index` ( *WedgeIndex* ) – The Plücker index `S`.
    """
    index = wedge_index(index, n)
    return p_vector(n, len(index)).get(index, z_ring(n).zero)


def pw_poly(w: Permutation, index: Sequence[int]) -> PolyElement:
    """
    `p^w_S`: `p_S` with `z_{i,j} = 0` whenever `w(i) < w(j)`.
    """
    return z_ring(w.n).restrict(p_poly(w.n, index), inversions(w))


def pw_table(w: Permutation, indices: Iterable[Sequence[int]]) -> dict[WedgeIndex, str]:
    """
    Formatted `p^w_S` for each given `S`.
    """
    zr = z_ring(w.n)
    return {tuple(index): zr.format(pw_poly(w, index)) for index in indices}


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")
_SYMBOL = re.compile(r"^X\[([0-9,\s]+)\](?:\^(\d+))?$")
_COEFFICIENT = re.compile(r"^\d+(?:/\d+)?$")


@dataclass
class PlueckerPolynomial:
    """
    A polynomial in the Plücker symbols `X_S`.

    ## Attributes
    - `terms` ( *dict* ) – Maps a monomial (sorted tuple of wedge indices, with repetition) to a nonzero `Fraction`.
    """
    terms: dict[PlueckerMonomial, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        merged: Counter = Counter()
        for monomial, c in self.terms.items():
            merged[normal_monomial(monomial)] += Fraction(c)
        self.terms = {m: c for m, c in merged.items() if c}

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> PlueckerPolynomial:
        """
        Parses text such as `X[6]*X[4,5] - 2*X[5]*X[4,6]`.

        ## Raises
        - *InputError* – On malformed text or an index invalid for `n`.
        """
        stripped = text.strip()
        if not stripped:
            raise InputError("Empty Plücker polynomial")
        terms: Counter = Counter()
        position = 0
        for match in _TERM.finditer(stripped):
            if match.start() != position:
                raise InputError(f"Malformed Plücker polynomial {text!r}")
            position = match.end()
            if match.group(1) is None and match.start() != 0:
                raise InputError(f"Missing operator in {text!r}")
            sign = -1 if match.group(1) == "-" else 1
            coefficient = Fraction(sign)
            symbols: list[WedgeIndex] = []
            for factor in match.group(2).strip().split("*"):
                factor = factor.strip()
                if _COEFFICIENT.match(factor):
                    coefficient *= Fraction(factor)
                    continue
                symbol = _SYMBOL.match(factor)
                if symbol is None:
                    raise InputError(f"Malformed factor {factor!r} in {text!r}")
                entries = [int(e) for e in symbol.group(1).replace(" ", "").split(",") if e]
                symbols.extend([wedge_index(entries, n)] * int(symbol.group(2) or 1))
            terms[normal_monomial(symbols)] += coefficient
        if position != len(stripped):
            raise InputError(f"Malformed Plücker polynomial {text!r}")
        return cls(dict(terms))

    def format(self) -> str:
        """
        Text form with terms in their stored order and symbols sorted by level.
        """
        pieces = []
        for monomial, c in self.terms.items():
            body = "*".join(f"X[{','.join(str(i) for i in index)}]" for index in monomial)
            pieces.append((c, body))
        return _join_terms(pieces)

    def monomials(self) -> list[PlueckerMonomial]:
        """
        The monomials of the terms, in input order.
        """
        return list(self.terms)

    def __str__(self) -> str:
        return self.format()


def normal_monomial(symbols: Iterable[WedgeIndex]) -> PlueckerMonomial:
    """
    Sorts the symbols of a Plücker monomial by size and then lexicographically.
    """
    return tuple(sorted((tuple(s) for s in symbols), key=lambda s: (len(s), s)))


def wt_of(monomial: Iterable[WedgeIndex], n: int) -> WeightVector:
    """
    The torus grading: coordinate `m` counts the occurrences of `m` across all symbol indices.
    """
    counts = [0] * n
    for index in monomial:
        for i in index:
            counts[i - 1] += 1
    return tuple(counts)


def grad_of(monomial: Iterable[WedgeIndex]) -> int:
    """
    The PBW grading: the sum of `pbw_degree` over the symbols.
    """
    return sum(pbw_degree(index) for index in monomial)


def deg_of(monomial: Iterable[WedgeIndex], n: int) -> DominantWeight:
    """
    The `Π⁺` grading: `w_k` for every symbol at level `k`.
    """
    coords = [0] * (n - 1)
    for index in monomial:
        coords[len(index) - 1] += 1
    return DominantWeight(tuple(coords))


def evaluate(poly: PlueckerPolynomial, n: int, w: Permutation | None = None) -> PolyElement:
    """
    Applies `X_S -> z_k p_S`, or `X_S -> z_k p^w_S` when `w` is given.

    ## Parameters
    - `poly` ( *PlueckerPolynomial* ) – The polynomial to evaluate.
    - `n` ( *int* ) – The rank plus one.
    - `w` ( *Permutation*, *optional* ) – Restricts the root variables to the inversions of `w`.

    ## Returns
    - *PolyElement* – An element of `z_ring(n).ring`.
    """
    if w is not None and w.n != n:
        raise InputError(f"Permutation {w} does not match n={n}")
    zr = z_ring(n)
    result = zr.zero
    for monomial, c in poly.terms.items():
        value = zr.one * QQ(c.numerator, c.denominator)
        for index in monomial:
            coefficient = pw_poly(w, index) if w is not None else p_poly(n, index)
            value = value * zr.column(len(index)) * coefficient
        result = result + value
    return result


def plucker_relation(a: int, b: int, c: int, d: int) -> PlueckerPolynomial:
    """
    The quadratic Grassmannian relation `X_ab X_cd - X_ac X_bd + X_ad X_bc` for `a < b < c < d`.
    """
    if not a < b < c < d:
        raise InputError(f"Plücker relation needs a < b < c < d, got {(a, b, c, d)}")
    return PlueckerPolynomial({
        ((a, b), (c, d)): Fraction(1),
        ((a, c), (b, d)): Fraction(-1),
        ((a, d), (b, c)): Fraction(1),
    })


def schubert_excluded_symbols(w: Permutation, levels: Iterable[int]) -> list[WedgeIndex]:
    """
    The symbols `X_S` at the given levels whose index is not in `fund_basis(w, k)`.
    """
    excluded = []
    for k in levels:
        basis = set(fund_basis(w, k))
        excluded.extend(index for index in wedge_indices(w.n, k) if index not in basis)
    return excluded


def monomials_with_wt(
    n: int,
    weight: DominantWeight,
    wt: Sequence[int],
    must_divide: Sequence[int] | None = None,
) -> list[PlueckerMonomial]:
    """
    Every Plücker monomial of degree `λ` and torus weight `wt`, optionally divisible by one symbol.

    ## Parameters
    - `n` ( *int* ) – The rank plus one.
    - `weight` ( *DominantWeight* ) – The degree `λ`: `a_k` symbols at level `k`.
    - `wt` ( *list[int]* ) – The torus weight to match.
    - `must_divide` ( *WedgeIndex*, *optional* ) – A symbol every returned monomial contains.
    """
    target = tuple(wt)
    divisor = tuple(must_divide) if must_divide is not None else None
    choices = [
        list(combinations_with_replacement(wedge_indices(n, k), a))
        for k, a in enumerate(weight.coords, start=1)
        if a
    ]
    found = []
    for parts in product(*choices):
        monomial = normal_monomial(index for part in parts for index in part)
        if divisor is not None and divisor not in monomial:
            continue
        if wt_of(monomial, n) == target:
            found.append(monomial)
    return sorted(found)


def is_irreducible(poly: PolyElement) -> bool:
    """
    True iff `poly` is non-constant and irreducible over `QQ`.
    """
    if not poly or poly.is_ground:
        return False
    _, factors = poly.factor_list()
    return len(factors) == 1 and factors[0][1] == 1


def divides(divisor: PolyElement, poly: PolyElement) -> bool:
    """
    Exact divisibility by multivariate division; a single divisor leaves remainder zero iff it divides.
    """
    return not poly.rem(divisor)


@dataclass
class CheckResult:
    """
    Outcome of one certificate sub-check.
    """
    name: str
    passed: bool
    detail: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class QCertificate:
    """
    The report produced by `verify_q`.
    """
    w: Permutation
    q: PlueckerPolynomial
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failed(self) -> list[CheckResult]:
        """
        The sub-checks that did not pass.
        """
        return [check for check in self.checks if not check.passed]

    def to_json(self) -> dict[str, Any]:
        return {
            "w": self.w.format(),
            "q": self.q.format(),
            "passed": self.passed,
            "checks": [check.to_json() for check in self.checks],
        }


def _default_witness(n: int, monomial: PlueckerMonomial) -> WedgeIndex | None:
    for index in monomial:
        if len(p_poly(n, index)) >= 2:
            return index
    return None


def verify_q(
    w: Permutation,
    q: PlueckerPolynomial,
    witness: Sequence[int] | None = None,
) -> QCertificate:
    """
    Certifies that a binomial `Q` lies in `J_{w,d}` but not in the initial ideal of the Schubert ideal.

    Checks, in order:

    1. `restricted_zero` – `Q` evaluates to zero under `X_S -> z_k p^w_S`.
    2. `full_nonzero` – `Q` does not vanish under `X_S -> z_k p_S`.
    3. `excluded_wt_empty` – no monomial of degree `deg Q` and weight `wt Q` contains a symbol
       outside the Schubert basis.
    4. `witness_divides_first_only` – the witness `p_S` (a factor of the first monomial, irreducible)
       divides none of the `p` factors of the second monomial.

    ## Parameters
    - `w` ( *Permutation* ) – The Weyl group element.
    - `q` ( *PlueckerPolynomial* ) – A `deg`- and `wt`-homogeneous binomial.
    - `witness` ( *WedgeIndex*, *optional* ) – The symbol of check 4; defaults to the first symbol of the
      first monomial whose `p` has at least two terms.

    ## Returns
    - *QCertificate* – One `CheckResult` per check.

    ## Raises
    - *InputError* – If `Q` is not a binomial or is not homogeneous.
    """
    n = w.n
    zr = z_ring(n)
    monomials = q.monomials()
    if len(monomials) != 2:
        raise InputError(f"Expected a binomial, got {len(monomials)} terms: {q}")
    first, second = monomials
    degree, weight = deg_of(first, n), wt_of(first, n)
    if deg_of(second, n) != degree or wt_of(second, n) != weight:
        raise InputError(f"{q} is not homogeneous in deg and wt")

    checks = []

    restricted = evaluate(q, n, w)
    checks.append(CheckResult("restricted_zero", not restricted, {"value": zr.format(restricted)}))

    full = evaluate(q, n)
    checks.append(CheckResult("full_nonzero", bool(full), {"value": zr.format(full)}))

    excluded = schubert_excluded_symbols(w, [k for k, a in enumerate(degree.coords, start=1) if a])
    hits = {
        _format_symbol(index): [_format_monomial(m) for m in monomials_with_wt(n, degree, weight, index)]
        for index in excluded
    }
    checks.append(CheckResult(
        "excluded_wt_empty",
        not any(hits.values()),
        {"wt": list(weight), "deg": list(degree.coords), "excluded": sorted(hits), "monomials": hits},
    ))

    if witness is None:
        witness_index = _default_witness(n, first)
    else:
        witness_index = wedge_index(witness, n)
    if witness_index is None:
        checks.append(CheckResult("witness_divides_first_only", False, {"reason": "no factor with two or more terms"}))
    else:
        p_witness = p_poly(n, witness_index)
        divides_first = any(divides(p_witness, p_poly(n, index)) for index in first)
        divided = [_format_symbol(index) for index in second if divides(p_witness, p_poly(n, index))]
        irreducible = is_irreducible(p_witness)
        checks.append(CheckResult(
            "witness_divides_first_only",
            divides_first and not divided and irreducible,
            {
                "witness": _format_symbol(witness_index),
                "p": zr.format(p_witness),
                "irreducible": irreducible,
                "divides_first": divides_first,
                "divides_second": divided,
                "against": [_format_symbol(index) for index in second],
            },
        ))

    certificate = QCertificate(w, q, checks)
    for check in checks:
        logger.info(f"verify_q {w}: {check.name} {'passed' if check.passed else 'FAILED'}")
    return certificate


def _format_symbol(index: Sequence[int]) -> str:
    return f"X[{','.join(str(i) for i in index)}]"


def _format_monomial(monomial: PlueckerMonomial) -> str:
    return "*".join(_format_symbol(index) for index in monomial)
