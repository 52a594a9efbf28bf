"""
Exact computations with divided-difference operators on Z[x1, x2, ...].

Schubert, forest and slide polynomials arise as dual families of the
divided differences, the quasisymmetric divided differences and the slide
extractors; this package computes them, their expansions, and checks the
identities relating them.
"""

from .combinat import IndexedForest, Permutation, parse_forest, parse_permutation, parse_word
from .families import (
    Expansion,
    forest_polynomial,
    monomial_to_slide,
    pipe_dream_polynomial,
    pipe_dreams,
    schubert,
    schubert_via_staircase,
    slide,
    slide_expand,
    slide_product_expand,
)
from .operators import (
    INF,
    bs_map,
    forest_creator,
    partial,
    qs_dd,
    schubert_creator,
    slide_creator,
    slide_extractor,
    truncate,
    z_op,
)
from .polyring import Polynomial, parse, x

__version__ = "0.1.0"

__all__ = [
    "Polynomial", "parse", "x", "INF",
    "partial", "bs_map", "truncate", "qs_dd", "slide_extractor", "z_op",
    "schubert_creator", "forest_creator", "slide_creator",
    "Permutation", "IndexedForest", "parse_permutation", "parse_forest", "parse_word",
    "schubert", "schubert_via_staircase", "forest_polynomial", "slide",
    "pipe_dreams", "pipe_dream_polynomial", "Expansion", "slide_expand",
    "monomial_to_slide", "slide_product_expand",
]
