"""Highly twisted plat diagrams: representation, canonical forms, and invariants."""

from .braid import (
    BraidLetter,
    BraidWord,
    from_braid_word,
    parse_braid,
    serialize_braid,
    to_braid_word,
)
from .canonical import (
    CanonicalForm,
    EquivalenceVerdict,
    SymmetryElement,
    Verdict,
    apply_symmetry,
    canonicalize,
    decide_equivalence,
)
from .census import CensusSpec, OrbitReport, count_orbits, dedupe, genericity_ratio, sample
from .errors import (
    AmbiguousLength,
    BraidSyntaxError,
    DegenerateFraction,
    EmptyDiagram,
    EvenPlatUnsupported,
    ExtremeRegion,
    HypothesesNotMet,
    IndexOutOfRange,
    InvalidGrid,
    NotAKnot,
    NotAlmostVertical,
    NotASphere,
    NotStandardForm,
    PlatError,
)
from .grid import (
    Closure,
    HypothesisReport,
    PlatGrid,
    TwistRegionId,
    ValidationResult,
    bridge_distance,
    component_count,
    format_plat,
    grid_from_rows,
    hypothesis_report,
    is_c_highly_twisted,
    parse_plat,
    twist_region_count,
    validate,
)
from .knotcodes import (
    InvariantFingerprint,
    PDCode,
    fingerprint,
    gauss_code,
    gauss_code_checks,
    to_pd_code,
)
from .spheres import (
    Corner,
    IsolatingSphere,
    RegionClass,
    SphereKind,
    VerticalSphereSpec,
    check_sphere,
    classify_region,
    corner_fraction,
    enumerate_vertical_spheres,
    isolating_sphere_for,
)
from .svgrender import render_svg

__version__ = "0.1.0"

__all__ = [
    "AmbiguousLength",
    "BraidLetter",
    "BraidSyntaxError",
    "BraidWord",
    "CanonicalForm",
    "CensusSpec",
    "Closure",
    "Corner",
    "DegenerateFraction",
    "EmptyDiagram",
    "EquivalenceVerdict",
    "EvenPlatUnsupported",
    "ExtremeRegion",
    "HypothesesNotMet",
    "HypothesisReport",
    "IndexOutOfRange",
    "InvalidGrid",
    "InvariantFingerprint",
    "IsolatingSphere",
    "NotAKnot",
    "NotAlmostVertical",
    "NotASphere",
    "NotStandardForm",
    "OrbitReport",
    "PDCode",
    "PlatError",
    "PlatGrid",
    "RegionClass",
    "SphereKind",
    "SymmetryElement",
    "TwistRegionId",
    "ValidationResult",
    "Verdict",
    "VerticalSphereSpec",
    "apply_symmetry",
    "bridge_distance",
    "canonicalize",
    "check_sphere",
    "classify_region",
    "component_count",
    "corner_fraction",
    "count_orbits",
    "decide_equivalence",
    "dedupe",
    "enumerate_vertical_spheres",
    "fingerprint",
    "format_plat",
    "from_braid_word",
    "gauss_code",
    "gauss_code_checks",
    "genericity_ratio",
    "grid_from_rows",
    "hypothesis_report",
    "is_c_highly_twisted",
    "isolating_sphere_for",
    "parse_braid",
    "parse_plat",
    "render_svg",
    "sample",
    "serialize_braid",
    "to_braid_word",
    "to_pd_code",
    "twist_region_count",
    "validate",
]
