"""Determinantal facet ideals, Groebner bases, and interval-type simplicial complexes."""

from .errors import (
    BudgetExceededError,
    ContextMismatchError,
    DetFacetError,
    InvalidVariableError,
    NoLeadingTermError,
    ParseError,
    PreconditionError,
)
from .formats import load, parse_complex, parse_graph, parse_interval_rep, render_complex, render_graph, render_interval_rep
from .graphs import Graph, delta_d, ind_d, is_interval_graph
from .groebner import Basis, GBReport, buchberger, is_groebner, normal_form, reduce_basis
from .polyring import QQ, MatrixContext, Polynomial, PrimeField
from .scomplex import IntervalRep, Labelling, SimplicialComplex, determinantal_facet_ideal, exists_labelling, relabel
from .sortable import is_sortable_complex, sort_pair
from .symmatrix import MinorSpec, check_det_identity, minor

__version__ = "0.1.0"
