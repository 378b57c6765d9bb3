"""Two-bridge links in Conway form: combinatorial stable-map models,
singular-fiber censuses, and volume-based complexity certificates."""

from .conway import (
    ConwayWord,
    EquivalencePolicy,
    FailureReport,
    SchubertFraction,
    all_b_even,
    component_count,
    even_b_normalize,
    format_conway,
    fraction_of,
    is_reduced_alternating,
    parse_conway,
    schubert_equivalent,
    transform,
    twist_number,
)
from .curves import (
    Column,
    Crossing,
    CrossingCensus,
    ImmersedCurve,
    PlatDiagram,
    Strip,
    StripDecomposition,
    bigon_reduce,
    build_plat_diagram,
    crossing_census,
    outer_smooth,
    strip_decompose,
)
from .morse import (
    BlockMap,
    CrossSection,
    DefiniteFoldTrace,
    FiberEvent,
    SingularFiberCensus,
    StableMapModel,
    assemble_stable_map,
    build_block,
    fiber_census,
    standard_cross_section,
    trace_definite_folds,
    validate_model,
)
from .complexity import (
    Certificate,
    ComplexityBounds,
    V_OCT,
    VolumeRecord,
    certify_smc,
    ingest_volume_table,
    smc_lower_bound_from_volume,
    smc_upper_bound,
    volume_upper_bound,
    weighted_sum,
)
from .serialize import SCHEMA_VERSION, export_json, import_json
from .render import render_svg
from . import errors

__version__ = "0.1.0"

__all__ = [
    "BlockMap",
    "Certificate",
    "Column",
    "ComplexityBounds",
    "ConwayWord",
    "CrossSection",
    "Crossing",
    "CrossingCensus",
    "DefiniteFoldTrace",
    "EquivalencePolicy",
    "FailureReport",
    "FiberEvent",
    "ImmersedCurve",
    "PlatDiagram",
    "SCHEMA_VERSION",
    "SchubertFraction",
    "SingularFiberCensus",
    "StableMapModel",
    "Strip",
    "StripDecomposition",
    "V_OCT",
    "VolumeRecord",
    "all_b_even",
    "assemble_stable_map",
    "bigon_reduce",
    "build_block",
    "build_plat_diagram",
    "certify_smc",
    "component_count",
    "crossing_census",
    "errors",
    "even_b_normalize",
    "export_json",
    "fiber_census",
    "format_conway",
    "fraction_of",
    "import_json",
    "ingest_volume_table",
    "is_reduced_alternating",
    "outer_smooth",
    "parse_conway",
    "render_svg",
    "schubert_equivalent",
    "smc_lower_bound_from_volume",
    "smc_upper_bound",
    "standard_cross_section",
    "strip_decompose",
    "trace_definite_folds",
    "transform",
    "twist_number",
    "validate_model",
    "volume_upper_bound",
    "weighted_sum",
]
