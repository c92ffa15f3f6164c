"""Exact-arithmetic toolkit for weighted sphere-product rings.

The package builds the rank-8 weighted rings, computes integral homology
of their boundary cell models, certifies the realization ring arithmetic,
classifies orders in the three-generated sphere-product algebra, and
provides the alternating-square section on SL(3, Z) that the classifier
uses.  Everything is computed over arbitrary-precision integers and
rationals; no floating point anywhere.
"""

from .alt2 import alt2, alt2_section, elementary_factorization, \
    elementary_matrix, product_of_elementaries
from .cellmodel import (
    PowerSequence3,
    build_boundary_complex,
    build_comparison_chain_map,
    build_face_square,
    build_unweighted_boundary_complex,
    power_sequence_from_coefficients,
    top_comparison_multiplier,
    top_cycles,
)
from .chains import (
    ChainComplex,
    ChainMap,
    HomologyResult,
    homology,
    induced_on_homology,
    mapping_cone_of_degree_map,
    pushout_complex,
)
from .errors import SphereProdError
from .lattices import Lattice, intersect_subspace, split_complement
from .matrices import IntMatrix, RatMatrix
from .normal_forms import SNFResult, hnf, snf, snf_constrained_sl
from .orders import (
    ClassificationResult,
    Decomposition,
    OrderGenerator,
    OrderInput,
    classify_order,
    decompose,
    monomial_order_input,
    not_weighted_search,
    verify_order,
)
from .realize import (
    RealizedRing,
    les_top_degree_check,
    realize_ring,
    ring_of_weighted_product,
)
from .rings import (
    CoefficientSequence,
    RingMapWitness,
    StructRing,
    build_weighted_ring,
    check_ring_map,
    sign_of_product,
    verify_ring_axioms,
)

__version__ = "0.1.0"
