"""Command-line interface.

Exit status: 0 on success, 2 when a construction hypothesis fails for
the given input (odd vertical twists, torus words, exhausted even-b
search), 1 on any other error including usage problems.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

from .complexity import (
    certify_smc,
    ingest_volume_table,
    smc_upper_bound,
    volume_upper_bound,
)
from .conway import (
    EquivalencePolicy,
    FailureReport,
    SchubertFraction,
    all_b_even,
    component_count,
    even_b_normalize,
    format_conway,
    fraction_of,
    parse_conway,
    schubert_equivalent,
    twist_number,
)
from .curves import bigon_reduce, build_plat_diagram, outer_smooth, strip_decompose
from .errors import (
    HypothesisError,
    NotReducedAlternatingError,
    TorusCaseError,
    TwoBridgeError,
)
from .morse import assemble_stable_map
from .render import render_svg
from .serialize import export_json

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_HYPOTHESIS = 2


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems with exit status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _write_output(text: str, path: str | None, out) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        out.write(text)


def _cmd_analyze(args, out) -> int:
    word = parse_conway(args.word)
    fraction = fraction_of(word)
    lines = [
        f"word: {format_conway(word)}",
        f"fraction: {fraction}",
        f"components: {component_count(fraction)}",
        f"all_b_even: {'true' if all_b_even(word) else 'false'}",
        f"m: {word.m}",
    ]
    try:
        lines.append(f"twist_number: {twist_number(word)}")
    except NotReducedAlternatingError:
        lines.append("twist_number: undefined (not reduced alternating)")
    if all_b_even(word):
        bounds = smc_upper_bound(word)
        try:
            bounds = replace(bounds, volume_upper=volume_upper_bound(word))
        except (NotReducedAlternatingError, TorusCaseError):
            pass
        lines.append(f"smc_upper: {bounds.smc_upper} (f2 witness)")
        lines.append(f"f3_weighted_sum: {bounds.f3_weighted_sum}")
        if bounds.volume_upper is not None:
            lines.append(f"volume_upper: {bounds.volume_upper:.6f} (4m V_oct)")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_build(args, out) -> int:
    word = parse_conway(args.word)
    model = assemble_stable_map(word, args.variant, args.granularity)
    _write_output(export_json(model), args.output, out)
    return EXIT_OK


def _reference_fraction(reference: str):
    """Best-effort reading of a table reference as a Conway word or p/q."""
    try:
        return fraction_of(parse_conway(reference))
    except TwoBridgeError:
        pass
    try:
        p_text, q_text = reference.split("/")
        return SchubertFraction.normalized(int(p_text), int(q_text))
    except (TwoBridgeError, ValueError):
        return None


def _lookup_volume(args, word) -> float:
    if args.volume is not None:
        return args.volume
    with open(args.volume_table, encoding="utf-8") as handle:
        records = ingest_volume_table(handle.read(), source=args.volume_table)
    if args.label:
        for record in records:
            if record.label == args.label:
                return record.volume
        raise TwoBridgeError(f"no table entry labeled {args.label!r}")
    fraction = fraction_of(word)
    policy = EquivalencePolicy(allow_mirror=True)  # volume is mirror-invariant
    matches = []
    for record in records:
        other = _reference_fraction(record.reference)
        if other is not None and schubert_equivalent(fraction, other, policy):
            matches.append(record)
    if len(matches) == 1:
        return matches[0].volume
    if not matches:
        raise TwoBridgeError(
            "no table entry matches the word; pass --label to pick one explicitly"
        )
    raise TwoBridgeError(
        f"{len(matches)} table entries match; pass --label to disambiguate"
    )


def _cmd_certify(args, out) -> int:
    word = parse_conway(args.word)
    volume = _lookup_volume(args, word)
    certificate = certify_smc(word, volume, epsilon=args.epsilon)
    if args.json:
        doc = {
            "word": format_conway(word),
            "status": certificate.status,
            "smc": certificate.smc_value,
            "volume": certificate.volume,
            "threshold": certificate.threshold,
            "volume_cap": certificate.volume_cap,
            "lower_bound": certificate.lower_bound,
            "upper_bound": certificate.upper_bound,
            "epsilon": certificate.epsilon,
            "volume_inconsistent": certificate.volume_inconsistent,
            "chain": list(certificate.chain),
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        lines = [
            f"word: {format_conway(word)}",
            f"status: {certificate.status}",
        ]
        if certificate.smc_value is not None:
            lines.append(f"certified smc={certificate.smc_value}")
        lines.append("chain:")
        lines.extend(f"  {step}" for step in certificate.chain)
        out.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_render(args, out) -> int:
    word = parse_conway(args.word)
    diagram = build_plat_diagram(word)
    curve = outer_smooth(diagram)
    if args.subject == "curve":
        subject = curve if args.variant == "f2" else bigon_reduce(curve)
    elif args.subject == "strips":
        if args.variant == "f3":
            curve = bigon_reduce(curve)
        subject = strip_decompose(curve, args.variant, args.granularity)
    else:
        subject = assemble_stable_map(word, args.variant, args.granularity)
    _write_output(render_svg(subject), args.output, out)
    return EXIT_OK


def _cmd_normalize(args, out) -> int:
    word = parse_conway(args.word)
    result = even_b_normalize(word, sum_bound=args.bound)
    if isinstance(result, FailureReport):
        out.write(
            f"search exhausted: no even-b form of {format_conway(word)} found "
            f"within sum bound {result.sum_bound} and length bound "
            f"{result.length_bound} (existence not excluded)\n"
        )
        return EXIT_HYPOTHESIS
    out.write(f"{format_conway(word)} -> {format_conway(result)}\n")
    return EXIT_OK


def _cmd_batch(args, out) -> int:
    with open(args.input, encoding="utf-8") as handle:
        inputs = [
            line.strip()
            for line in handle
            if line.strip() and not line.strip().startswith("#")
        ]

    def run_one(text: str) -> dict:
        argv = [args.command] + args.args + [text]
        buffer = io.StringIO()
        try:
            status = _dispatch(argv, buffer)
            return {"input": text, "exit": status, "output": buffer.getvalue()}
        except HypothesisError as err:
            return {"input": text, "exit": EXIT_HYPOTHESIS, "error": str(err)}
        except (TwoBridgeError, OSError, ValueError) as err:
            return {"input": text, "exit": EXIT_ERROR, "error": str(err)}

    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        results = list(pool.map(run_one, inputs))
    for result in results:
        out.write(json.dumps(result) + "\n")
    statuses = {r["exit"] for r in results}
    if EXIT_ERROR in statuses:
        return EXIT_ERROR
    if EXIT_HYPOTHESIS in statuses:
        return EXIT_HYPOTHESIS
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="twobridge", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("analyze", help="fraction, components, parity, twist number")
    p.add_argument("word")

    p = sub.add_parser("build", help="emit the model document for one word")
    p.add_argument("word")
    p.add_argument("--variant", choices=("f2", "f3"), required=True)
    p.add_argument("--granularity", choices=("crossing", "region", "fine"), default="crossing")
    p.add_argument("-o", "--output")

    p = sub.add_parser("certify", help="evaluate the smc = 2m certificate")
    p.add_argument("word")
    p.add_argument("--volume", type=float)
    p.add_argument("--volume-table")
    p.add_argument("--label")
    p.add_argument("--epsilon", type=float, default=1e-9)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("render", help="emit an SVG drawing")
    p.add_argument("word")
    p.add_argument("--subject", choices=("curve", "strips", "model"), default="model")
    p.add_argument("--variant", choices=("f2", "f3"), default="f2")
    p.add_argument("--granularity", choices=("crossing", "region", "fine"), default="crossing")
    p.add_argument("-o", "--output")

    p = sub.add_parser("normalize", help="search for an even-b Conway form")
    p.add_argument("word")
    p.add_argument("--bound", type=int, default=40)

    p = sub.add_parser("batch", help="map a file of words through a subcommand")
    p.add_argument("--command", required=True, choices=("analyze", "build", "certify", "render", "normalize"))
    p.add_argument("--input", required=True)
    p.add_argument("--jobs", type=int, default=4)
    p.add_argument(
        "args",
        nargs="*",
        help="extra flags for the subcommand, after a -- separator",
    )

    return parser


def _dispatch(argv: list[str], out) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.subcommand == "analyze":
        return _cmd_analyze(args, out)
    if args.subcommand == "build":
        return _cmd_build(args, out)
    if args.subcommand == "certify":
        if (args.volume is None) == (args.volume_table is None):
            raise _UsageError("pass exactly one of --volume or --volume-table")
        return _cmd_certify(args, out)
    if args.subcommand == "render":
        return _cmd_render(args, out)
    if args.subcommand == "normalize":
        return _cmd_normalize(args, out)
    if args.subcommand == "batch":
        return _cmd_batch(args, out)
    raise _UsageError(f"unknown command {args.subcommand!r}")


def run_cli(argv: list[str]) -> int:
    """Run one invocation; returns the exit status instead of raising."""
    try:
        return _dispatch(argv, sys.stdout)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR
    except HypothesisError as err:
        offending = next((a for a in argv if a.startswith(("C(", "["))), "")
        print(f"hypothesis failure on {offending!r}: {err}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (TwoBridgeError, OSError, ValueError) as err:
        offending = next((a for a in argv if a.startswith(("C(", "["))), "")
        print(f"error on {offending!r}: {err}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
