"""Exact-arithmetic invariants of rational cuspidal curve neighborhoods and
their symplectic fillings: singularity invariants, plumbing intersection
forms, characteristic sublinks and rotation invariants, homological
embedding enumeration, and rational blow-down analysis."""

from .blowdown import (
    FillingHomology,
    chain_determinant_p,
    classes_by_square,
    complement_sphere_classes,
    expand_chains,
    filling_homology,
    find_plumbing_in_complement,
    is_linear_blowdownable,
)
from .embeddings import (
    ConfigurationSpec,
    EmbeddingSolution,
    SpherePattern,
    canonical_form,
    enumerate_embeddings,
    solutions_by_n_used,
    sphere_class_candidates,
    verify_solution,
)
from .errors import ContractError, CuspfillError, InputError
from .lattices import (
    HomologyClass,
    Residue,
    cokernel,
    determinant,
    elementary_divisors,
    express_in_generator,
    gram_matrix,
    inverse_rational,
    is_negative_definite,
    orthogonal_complement,
    signature,
    smith_normal_form,
)
from .plumbing import (
    PlumbingGraph,
    SeifertData,
    euler_number,
    intersection_matrix,
    linear_chain,
    neg_continued_fraction,
    plumbing_from_seifert,
    seifert_from_torus_surgery,
    star_isomorphic,
)
from .singularities import (
    Cusp,
    CurveData,
    Fillability,
    FillabilityVerdict,
    arithmetic_genus,
    big_m,
    classify_unicuspidal,
    delta,
    ell,
    family_triples,
    fillability_verdict,
    milnor_number,
    multiplicity_sequence,
    seifert_genus,
)
from .spin import (
    SurgeryDiagram,
    characteristic_sublinks,
    gamma_invariant,
    gamma_theoretical,
    minimize_theta,
    rotation_lattice,
    theta,
)

__version__ = "0.1.0"
