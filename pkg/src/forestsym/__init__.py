"""Forest expansions of chromatic quasisymmetric functions and unicellular LLT polynomials.

Exact arithmetic over ``Fraction``-coefficient polynomials in q, symmetric
functions in the e, h, p and rho bases, increasing spanning forests of
indifference graphs, and brute-force oracles to check the expansions against.
"""

from .coeffs import QPoly, q_binomial, q_factorial, q_integer
from .forests import IncreasingForest, X_of, X_vertical, c_coefficients, enumerate_forests, forest_stats
from .graphs import Graph, HessenbergFunction, enumerate_hessenberg, graph_of, parse_edges, parse_hessenberg
from .oracles import csf_oracle, llt_oracle, orientation_sum
from .symfunc import MonomialSym, SymFunc, convert, monomial_expand, omega, rho_to_h

__version__ = "0.1.0"

__all__ = [
    "QPoly",
    "q_integer",
    "q_factorial",
    "q_binomial",
    "SymFunc",
    "MonomialSym",
    "convert",
    "monomial_expand",
    "omega",
    "rho_to_h",
    "HessenbergFunction",
    "Graph",
    "graph_of",
    "enumerate_hessenberg",
    "parse_hessenberg",
    "parse_edges",
    "IncreasingForest",
    "enumerate_forests",
    "forest_stats",
    "c_coefficients",
    "X_of",
    "X_vertical",
    "csf_oracle",
    "llt_oracle",
    "orientation_sum",
]
