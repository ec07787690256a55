"""
# pbwdemazure.algebra

The computational core. Everything here is exact (Python integers, `Fraction`, sympy over QQ)
and deterministic; modules only depend on modules listed before them.

- `rootsystem` – permutations, dominant weights, inversions, root and monomial orders.
- `exactlinalg` – sparse integer row echelon spans.
- `wedgerep` – wedge bases and the classical and degenerate lowering actions.
- `demazure` – Demazure characters and the classical filtration and induced profiles.
- `cartan` – the Cartan component profile and the kernel report.
- `fflv` – minimal monomials and their Minkowski sums.
- `plucker` – Plücker coordinates, `p^w` values and certificates for binomials.
- `counterexample` – the fixed sl_6 check list.
"""
