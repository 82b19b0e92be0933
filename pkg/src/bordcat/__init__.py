"""Exact gauging of finite abelian higher-form symmetries on triangulated
bordisms: simplicial cohomology with transform tracking, decorated bordism
categories, the gauging functor with its dual-symmetry refinement, and
verification suites for the structural identities.
"""

from .bordisms import (
    BoundaryEmbedding,
    DecoratedBordism,
    DecoratedObject,
    bordism_union,
    compose,
    enumerate_backgrounds,
    identity_bordism,
    make_object,
    object_union,
    skeleton_change,
    symmetry_cylinder,
)
from .cohomology import (
    CohomologyClass,
    CohomologyGroup,
    InducedMap,
    cohomology,
    cohomology_order,
    forget_relative,
    induced_pullback,
    long_exact_sequence_check,
)
from .complexes import Cochain, SimplicialComplex, SimplicialMap, SimplicialPair
from .cyclotomic import Amplitude
from .gauging import (
    GaugedTheory,
    delta_identity_check,
    double_gauge_check,
    gauge,
    gauged_closed_value,
    projector,
)
from .groups import FinAbGroup, pontryagin_dual
from .manifolds import SkeletonPair, TriangulatedManifold, glue, library, library_names
from .theory import (
    FunctorReport,
    LinearMap,
    ScaledTheory,
    TheoryInterface,
    TrivialTheory,
    trivial_theory,
    verify_functor,
)
from .verification import SUITES, run_suite

__version__ = "1.0.0"

__all__ = [
    "Amplitude",
    "BoundaryEmbedding",
    "Cochain",
    "CohomologyClass",
    "CohomologyGroup",
    "DecoratedBordism",
    "DecoratedObject",
    "FinAbGroup",
    "FunctorReport",
    "GaugedTheory",
    "InducedMap",
    "LinearMap",
    "ScaledTheory",
    "SimplicialComplex",
    "SimplicialMap",
    "SimplicialPair",
    "SkeletonPair",
    "SUITES",
    "TheoryInterface",
    "TriangulatedManifold",
    "TrivialTheory",
    "bordism_union",
    "cohomology",
    "cohomology_order",
    "compose",
    "delta_identity_check",
    "double_gauge_check",
    "enumerate_backgrounds",
    "forget_relative",
    "gauge",
    "gauged_closed_value",
    "glue",
    "identity_bordism",
    "induced_pullback",
    "library",
    "library_names",
    "long_exact_sequence_check",
    "make_object",
    "object_union",
    "pontryagin_dual",
    "projector",
    "run_suite",
    "skeleton_change",
    "symmetry_cylinder",
    "trivial_theory",
    "verify_functor",
]
