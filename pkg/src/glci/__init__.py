"""Exact-arithmetic invariants of Geigle-Lenzing complete intersections."""

from .grading import (
    GroupElement,
    Trichotomy,
    WeightSystem,
    add,
    coset_data_mod_omega,
    delta,
    hom_ext_dim,
    interval,
    leq,
    negate,
    normal_form,
    normalize_weights,
    omega,
    piece_dim,
    smith_normal_form,
    trichotomy,
)
from .algebra import (
    Quiver,
    StructureAlgebra,
    canonical_interval,
    cartan_matrix,
    cm_interval,
    cm_tensor_check,
    global_dimension,
    i_canonical_quiver,
    structure_constants,
)
from .coxeter import (
    BlockBasisIndex,
    IntPolynomial,
    char_poly,
    coxeter_polynomial,
    grothendieck_basis,
    k0_rank,
    omega_action_matrix,
    phi,
)
from .matfac import (
    GradedMatrixPair,
    MFIndex,
    MultiPoly,
    mf_build,
    mf_enumerate,
    mf_minor_nonsingular,
    mf_verify,
)
from .atilde import OrbitQuiverWithCut, atilde_presentation, verify_cut
from .classify import (
    ClassificationReport,
    classification_report,
    cm_finite,
    d_cm_finite_sufficient,
    enumerate_weight_systems,
    frac_cy,
    gldim_canonical,
    knoerrer_partner,
    main2_slice,
    orlov_rank_delta,
    vb_finite,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
