"""Exact invariants of simplicial complexes and their moment-angle complexes."""

from .complex import (
    Simplex,
    SimplicialComplex,
    build_complex,
    faces,
    full_subcomplex,
    join,
    link,
    missing_faces,
    parse_simplex,
    relabel,
    simplex_boundary,
    vertex_delete,
)
from .fillability import FillWitness, collapse, is_fillable
from .hochster import BigradedTable, bigraded_table, noncontractible_scan, predicted_wedge, za_poincare
from .homology import (
    HomologyProfile,
    IntegerMatrix,
    chain_boundary_matrices,
    is_homology_iso_inclusion,
    is_homology_point,
    is_homology_sphere,
    reduced_homology,
    relative_homology,
    smith_normal_form,
)
from .polynomial import PoincarePolynomial
from .spheres import (
    ConnectedSumSpec,
    SphereProduct,
    connected_sum_poincare,
    product_poincare,
    stacked_connected_sum,
    wedge_poincare,
)
from .stacked import StackedCertificate, recognize_stacked, stack_move

__version__ = "0.1.0"
