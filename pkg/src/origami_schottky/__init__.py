"""Kleinian HNN extensions of finite Moebius groups, with certified
circle pairings, coset enumeration, and limit-set clouds."""

from .moebius import (
    INF,
    MapClass,
    MoebiusMap,
    a4_generators,
    dn_generators,
    eval_word,
    fuchsian_punctured_torus,
    is_inf,
    projective_closure,
    to_zero_inf,
)
from .geometry import (
    Circle,
    CombinationCertificate,
    DegenerateCircleError,
    PairedCircles,
    PairingSearchError,
    disjointness_margin,
    find_pairing_a4,
    find_pairing_dihedral,
    image_circle,
    invariant_circle,
    verify_combination,
)
from .presentation import (
    CosetTable,
    EnumerationOverflow,
    FiniteGroup,
    Homomorphism,
    Presentation,
    alternating_group_4,
    cyclic_group,
    dihedral_group,
    enumerate_homs,
    is_normal,
    normal_core,
    permutation_rep,
    presentation_case_a,
    presentation_case_b,
    quotient_structure,
    subgroup_words_a4,
    subgroup_words_even,
    subgroup_words_odd,
    todd_coxeter,
    torsion_free_kernel,
)
from .builder import (
    FreenessReport,
    LoxodromyReport,
    OrigamiSchottkyGroup,
    SubgroupReport,
    build_case_a,
    build_case_b,
    default_subgroup_words,
    freeness_certificate,
    hurwitz_equality,
    loxodromy_certificate,
    realize_subgroup,
    riemann_hurwitz_genus,
)
from .limitset import (
    ElementCapExceeded,
    NestingReport,
    OrbitPoint,
    enumerate_elements,
    limit_points,
    nesting_report,
    points_contained,
    points_to_csv,
    render_ppm,
)

__version__ = "0.1.0"
