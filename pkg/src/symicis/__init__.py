"""Algebraic restrictions of differential forms and the symplectic
classification of zero-dimensional quasi-homogeneous ICIS germs."""

from .poly import Poly, Weights, quasi_degree, truncate, variables
from .forms import (
    DiffForm, PolyMap, VectorField, exterior_derivative, interior_product, lie_derivative,
    pullback, standard_symplectic, wedge,
)
from .ideals import (
    FGIdeal, embedding_codim, find_weights, jet_membership, nilpotency_order,
    restrict_ideal_to_graph, suspend,
)
from .restrictions import (
    AlgRestriction, RestrictionSpace, build_space, homotopy_primitive, is_zero_restriction,
    reduce,
)
from .symclass import (
    ClassRecord, SymplecticForm, classify, derlog, index_of_isotropy, realizable,
    reduce_to_submanifold, symplectic_multiplicity, table_rows,
)
from .parser import parse_form, parse_poly
from .errors import DomainError

__version__ = "0.1.0"

__all__ = [
    "Poly", "Weights", "quasi_degree", "truncate", "variables",
    "DiffForm", "PolyMap", "VectorField", "exterior_derivative", "interior_product",
    "lie_derivative", "pullback", "standard_symplectic", "wedge",
    "FGIdeal", "embedding_codim", "find_weights", "jet_membership", "nilpotency_order",
    "restrict_ideal_to_graph", "suspend",
    "AlgRestriction", "RestrictionSpace", "build_space", "homotopy_primitive",
    "is_zero_restriction", "reduce",
    "ClassRecord", "SymplecticForm", "classify", "derlog", "index_of_isotropy", "realizable",
    "reduce_to_submanifold", "symplectic_multiplicity", "table_rows",
    "parse_form", "parse_poly", "DomainError",
]
