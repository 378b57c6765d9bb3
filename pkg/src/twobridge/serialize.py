"""JSON interchange for assembled stable map models.

The document is the single source of truth for a model: schema version
"1", closed schema (unknown fields are rejected, not ignored), integer
numerics only.  Import never trusts the document's census: the model is
re-derived from the word and every stored structure is checked against
the fresh one.  ``granularity`` is stored so that round-trips are
lossless across slicing conventions.
"""

from __future__ import annotations

import json

from .complexity import smc_upper_bound, weighted_sum
from .conway import format_conway, fraction_of, parse_conway
from .errors import InvariantViolationError, SchemaError, TwoBridgeError
from .morse import StableMapModel, assemble_stable_map

SCHEMA_VERSION = "1"

_TOP_KEYS = (
    "schema_version",
    "conway",
    "variant",
    "granularity",
    "fraction",
    "strips",
    "blocks",
    "census",
    "bounds",
)


def _model_document(model: StableMapModel) -> dict:
    fraction = fraction_of(model.word)
    census = model.census
    return {
        "schema_version": SCHEMA_VERSION,
        "conway": format_conway(model.word),
        "variant": model.variant,
        "granularity": model.granularity,
        "fraction": {"p": fraction.p, "q": fraction.q},
        "strips": [
            {"type": strip.kind, "param": strip.param} for strip in model.strips.strips
        ],
        "blocks": [
            {
                "kind": block.kind,
                "events": [{"kind": e.kind, "slice": e.slice} for e in block.events],
                "permutation": list(block.permutation),
            }
            for block in model.blocks
        ],
        "census": {
            "ii2": census.ii2,
            "ii3": census.ii3,
            "definite_components": census.definite_components,
            "indefinite_circles": census.indefinite_circles,
        },
        "bounds": {
            "smc_upper": smc_upper_bound(model.word).smc_upper,
            "weighted_sum": weighted_sum(census),
        },
    }


def export_json(model: StableMapModel) -> str:
    """Serialize with deterministic field order; integers only."""
    return json.dumps(_model_document(model), indent=2) + "\n"


def _require_keys(obj: dict, keys: tuple[str, ...], where: str) -> None:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    missing = [k for k in keys if k not in obj]
    unknown = [k for k in obj if k not in keys]
    if missing:
        raise SchemaError(f"{where}: missing fields {missing}")
    if unknown:
        raise SchemaError(f"{where}: unknown fields {unknown}")


def _require_int(value, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaError(f"{where}: expected an integer, got {value!r}")
    return value


def import_json(text: str) -> StableMapModel:
    """Reconstruct a model from document text and revalidate everything.

    The word, variant, and granularity determine a fresh assembly; the
    document's strips, blocks, census, fraction, and bounds must all
    agree with it, otherwise the document is internally inconsistent.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError(f"not valid JSON: {err}") from None
    _require_keys(doc, _TOP_KEYS, "document")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {doc['schema_version']!r}")
    if doc["variant"] not in ("f2", "f3"):
        raise SchemaError(f"unknown variant {doc['variant']!r}")
    if doc["granularity"] not in ("crossing", "region", "fine"):
        raise SchemaError(f"unknown granularity {doc['granularity']!r}")
    _require_keys(doc["fraction"], ("p", "q"), "fraction")
    _require_keys(doc["census"], ("ii2", "ii3", "definite_components", "indefinite_circles"), "census")
    _require_keys(doc["bounds"], ("smc_upper", "weighted_sum"), "bounds")
    if not isinstance(doc["strips"], list) or not isinstance(doc["blocks"], list):
        raise SchemaError("strips and blocks must be arrays")
    for i, strip in enumerate(doc["strips"]):
        _require_keys(strip, ("type", "param"), f"strips[{i}]")
        _require_int(strip["param"], f"strips[{i}].param")
    for i, block in enumerate(doc["blocks"]):
        _require_keys(block, ("kind", "events", "permutation"), f"blocks[{i}]")
        if not isinstance(block["events"], list):
            raise SchemaError(f"blocks[{i}].events must be an array")
        for j, event in enumerate(block["events"]):
            _require_keys(event, ("kind", "slice"), f"blocks[{i}].events[{j}]")
        if (
            not isinstance(block["permutation"], list)
            or len(block["permutation"]) != 4
            or sorted(_require_int(v, f"blocks[{i}].permutation") for v in block["permutation"])
            != [1, 2, 3, 4]
        ):
            raise SchemaError(f"blocks[{i}].permutation must be a permutation of 1..4")
    for key in ("ii2", "ii3", "definite_components", "indefinite_circles"):
        _require_int(doc["census"][key], f"census.{key}")

    try:
        word = parse_conway(doc["conway"])
        model = assemble_stable_map(word, doc["variant"], doc["granularity"])
    except TwoBridgeError as err:
        raise InvariantViolationError(f"document does not assemble: {err}") from None

    fresh = _model_document(model)
    for key in _TOP_KEYS:
        if doc[key] != fresh[key]:
            raise InvariantViolationError(
                f"field {key!r} disagrees with the recomputed model: "
                f"document {doc[key]!r}, recomputed {fresh[key]!r}"
            )
    return model
