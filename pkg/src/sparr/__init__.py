"""Rational homology of arrangements of sub-symmetric-products in symmetric products of surfaces."""

from .arrangement_homology import (
    ComplementTable,
    DecompositionTerm,
    complement_tables,
    points_case_betti,
    union_betti,
    union_decomposition,
)
from .divisor_poset import (
    Arrangement,
    Divisor,
    IntersectionPoset,
    PointSet,
    divisor_join,
    divisor_leq,
    divisor_order,
    encode_integer,
    ideal,
    intersection_poset,
    order_complex,
)
from .endspace import DistinguishReport, EndCohomologyTable, distinguish, end_cohomology_closed, end_cohomology_pipeline
from .errors import ConsistencyError, DimensionError, SparrError, UnsupportedSpaceError, ValidationError
from .simplicial import BettiTable, RationalMatrix, SimplicialComplex, betti, boundary_matrix, reduced_betti
from .sp_tables import SpaceModel, im_cap, ker_im_beta, phi, sp_betti, sp_euler, sp_relative_betti

__version__ = "0.1.0"
