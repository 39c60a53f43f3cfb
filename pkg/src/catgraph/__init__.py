"""Six categories of conceptual graphs: constructions, counterexamples and tables."""
from __future__ import annotations

from .catalog import battery, standard_graph
from .errors import CatGraphError
from .graph import ALL_CATEGORIES, Category, Graph, components, is_isomorphic, isomorphic
from .limits import (coequalizer, coproduct, equalizer, initial, product, pullback, terminal,
                     verify_ump)
from .morphisms import (Morphism, classify_epi, classify_mono, compose, count_homs,
                        enumerate_homs, identity, iter_homs, validate)
from .report import Report
from .special import (classify, cofree_graph, free_graph, is_cogenerator, is_generator,
                      is_injective, is_projective, projective_presentation)
from .topos import (characteristic_morphism, check_choice, check_two_valued, exponential,
                    pigeonhole_refutation, refute_exponentiation, subobject_classifier,
                    transpose, verify_exponential)

__version__ = "0.1.0"

__all__ = [
    "ALL_CATEGORIES", "CatGraphError", "Category", "Graph", "Morphism", "Report",
    "battery", "characteristic_morphism", "check_choice", "check_two_valued", "classify",
    "classify_epi", "classify_mono", "coequalizer", "cofree_graph", "components", "compose",
    "coproduct", "count_homs", "enumerate_homs", "equalizer", "exponential", "free_graph",
    "identity", "initial", "is_cogenerator", "is_generator", "is_injective", "is_isomorphic",
    "is_projective", "isomorphic", "iter_homs", "pigeonhole_refutation", "product",
    "projective_presentation", "pullback", "refute_exponentiation", "standard_graph",
    "subobject_classifier", "terminal", "transpose", "validate", "verify_exponential",
    "verify_ump",
]
