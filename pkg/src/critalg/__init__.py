"""Homological workbench for schurian quotients of poset incidence algebras.

Decides minimal projective resolutions, projective/injective dimensions, and
global dimension with exact rational arithmetic, and certifies global
dimension at most two by the absence of critical full subcategories.
"""

from .errors import (
    ClassificationGap,
    CritalgError,
    DualizationRequired,
    EmptySelection,
    InternalError,
    InvalidTemplate,
    MalformedRelation,
    NotAHasseDiagram,
    NotAMorphism,
    NotAnIncidenceAlgebra,
    NotAPartialOrder,
    NotAThirdSyzygyPair,
    SpecError,
    TriangularityViolation,
)
from .quivers import (
    Contour,
    Path,
    Quiver,
    contours,
    has_bypass,
    hasse_reduction,
    is_convex,
    is_interlaced,
    is_irreducible,
    is_triangular,
    opposite,
    reachability,
)
from .presentation import (
    IncidenceQuotient,
    SchurianAlgebra,
    Validity,
    as_incidence_quotient,
    convex_hull,
    from_poset,
    full_subcategory,
    hom_support,
    kill_vertices,
    minimal_relation_pairs,
    minimal_relation_pairs_combinatorial,
    minimal_zero_pairs,
    opposite_algebra,
    second_syzygy_multiplicity,
    sinks,
    sources,
)
from .homology import (
    ProjResolution,
    Representation,
    RepMorphism,
    composition_multiplicity,
    dual_representation,
    ext_dim,
    gl_dim,
    idim,
    idim_of_simple,
    injective,
    kernel,
    loewy_length,
    minimal_injective_coresolution,
    minimal_projective_resolution,
    pd,
    pd_of_simple,
    projective,
    projective_cover,
    radical,
    resolution_of_simple,
    simple,
    socle,
    top,
    verify_exactness,
    verify_minimality,
)
from .criteria import (
    CriticalReport,
    CriticalTemplate,
    GlDim2Verdict,
    SyzygyConfig,
    audit_resolution_structure,
    build_critical_candidate,
    build_syzygy_config,
    check_critical,
    classify_critical,
    convex_crown_witness,
    critical_template,
    find_all_critical_subcategories,
    find_critical_subcategory,
    find_critical_subcategory_guided,
    gldim2_criterion,
    igusa_zacharia,
    is_critical,
    pd_spectrum_check,
    proper_subcategories_gldim_le2,
    second_term_engine,
    second_term_from_relations,
    third_syzygy_test,
    third_syzygy_test_auto,
)
from .specfile import AlgebraSpecDocument, load_algebra, parse_spec, render_spec
from .report import ReportDocument, build_report, parse_report, render_report
from .randgen import RandomModel, random_algebra
from .compare import ComparisonReport, oracle_compare
from .posets import hasse_quiver_of, posets_up_to_iso

__version__ = "0.1.0"
