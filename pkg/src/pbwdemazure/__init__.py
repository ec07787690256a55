"""
# pbwdemazure

Root package for `pbwdemazure`, an exact-arithmetic toolkit for PBW degenerations of type A
Demazure modules. Provides the computational core (`algebra/`) covering permutations, wedge
representations, Demazure characters and filtrations, Cartan components, FFLV monomial sets and
Plücker certificates, and a command registry (`cmd/`) exposed through the `pbwdemazure` CLI.
"""
__version__ = "0.1.0"
