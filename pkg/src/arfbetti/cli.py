"""Command-line front end.

Every subcommand reads a semigroup from a comma-separated generator list
and prints either stable text or JSON (--json). Exit codes: 0 for a
successful run (including "not Arf" answers and failed closure checks
that are answers, not errors), 1 for a mathematical failure or a
computation aborted by scale limits, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arf import arf_closure, arf_violation, blowup, enumerate_arf, is_arf
from .betti import DEFAULT_LIMITS, graded_betti
from .divisor_complex import squarefree_divisor_complex
from .errors import (
    ArfBettiError,
    BettiScaleError,
    ClassificationGapError,
    PreconditionFailedError,
)
from .homology import RATIONALS, FieldSpec
from .semigroup_core import NumericalSemigroup, from_generators, parse_generators
from .verify import check_theorem, classify_unmatched_faces, sweep

EXIT_OK = 0
EXIT_MATH = 1
EXIT_USAGE = 2


def _field_arg(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except (ValueError, ArfBettiError) as e:
        raise argparse.ArgumentTypeError(str(e))


def _emit(payload: dict, as_json: bool, lines) -> None:
    if as_json:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        for line in lines:
            print(line)


def _semigroup(text: str) -> NumericalSemigroup:
    return from_generators(parse_generators(text))


def _gen_text(S: NumericalSemigroup) -> str:
    return ",".join(str(g) for g in S.min_generators)


def _cmd_info(args) -> int:
    S = _semigroup(args.generators)
    payload = {
        "schema_version": 1,
        "generators": list(S.min_generators),
        "multiplicity": S.multiplicity,
        "embedding_dimension": S.embedding_dimension,
        "conductor": S.conductor,
        "frobenius": S.frobenius(),
        "genus": S.genus(),
        "gaps": list(S.gaps()),
        "min_mod_multiplicity": list(S.min_elements_mod_multiplicity()),
        "arf": is_arf(S),
    }
    _emit(
        payload,
        args.json,
        [
            f"generators: {_gen_text(S)}",
            f"multiplicity: {S.multiplicity}",
            f"embedding dimension: {S.embedding_dimension}",
            f"conductor: {S.conductor}",
            f"frobenius: {S.frobenius()}",
            f"genus: {S.genus()}",
            "gaps: " + ",".join(str(g) for g in S.gaps()),
            "min mod multiplicity: "
            + ",".join(str(v) for v in S.min_elements_mod_multiplicity()),
            "arf: " + ("yes" if payload["arf"] else "no"),
        ],
    )
    return EXIT_OK


def _cmd_arf_check(args) -> int:
    S = _semigroup(args.generators)
    witness = arf_violation(S)
    if witness is None:
        payload = {
            "schema_version": 1,
            "generators": list(S.min_generators),
            "arf": True,
            "witness": None,
        }
        _emit(payload, args.json, ["Arf"])
    else:
        s, t, u = witness
        missing = s + t - u
        payload = {
            "schema_version": 1,
            "generators": list(S.min_generators),
            "arf": False,
            "witness": {"s": s, "t": t, "u": u, "missing": missing},
        }
        _emit(
            payload,
            args.json,
            [f"not Arf: witness s={s} t={t} u={u} ({missing} ∉ S)"],
        )
    return EXIT_OK


def _cmd_arf_closure(args) -> int:
    S = _semigroup(args.generators)
    C = arf_closure(S)
    payload = {
        "schema_version": 1,
        "generators": list(S.min_generators),
        "closure_generators": list(C.min_generators),
        "changed": C != S,
    }
    _emit(
        payload,
        args.json,
        [
            f"input: {_gen_text(S)}",
            f"closure: {_gen_text(C)}",
            "changed: " + ("yes" if payload["changed"] else "no"),
        ],
    )
    return EXIT_OK


def _cmd_blowup(args) -> int:
    S = _semigroup(args.generators)
    B = blowup(S)
    payload = {
        "schema_version": 1,
        "generators": list(S.min_generators),
        "blowup_generators": list(B.min_generators),
        "multiplicity_preserved": B.multiplicity == S.multiplicity,
    }
    _emit(
        payload,
        args.json,
        [
            f"input: {_gen_text(S)}",
            f"blowup: {_gen_text(B)}",
            "multiplicity preserved: "
            + ("yes" if payload["multiplicity_preserved"] else "no"),
        ],
    )
    return EXIT_OK


def _cmd_complex(args) -> int:
    S = _semigroup(args.generators)
    if args.degree < 0:
        print("degree must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    C = squarefree_divisor_complex(S, args.degree)
    faces = C.faces_as_vertex_tuples()
    payload = {
        "schema_version": 1,
        "generators": list(S.min_generators),
        "s": args.degree,
        "faces": [list(f) for f in faces],
    }
    dim = C.dim
    _emit(
        payload,
        args.json,
        [
            f"s: {args.degree}",
            f"vertices: {S.embedding_dimension}",
            "dim: " + ("void" if dim is None else str(dim)),
            "faces: "
            + " ".join("[" + ",".join(str(v) for v in f) + "]" for f in faces),
        ],
    )
    return EXIT_OK


def _cmd_betti(args) -> int:
    S = _semigroup(args.generators)
    table = graded_betti(S, args.field, max_degree=args.max_degree)
    if args.json:
        print(json.dumps(table.to_json_dict(), separators=(",", ":")))
    else:
        print(f"generators: {_gen_text(S)}")
        print(f"field: {args.field.label}")
        print(table.text_diagram())
        print(
            "total: "
            + " ".join(f"i={i}:{v}" for i, v in table.total_betti().items())
        )
    return EXIT_OK


def _cmd_verify(args) -> int:
    S = _semigroup(args.generators)
    report = check_theorem(S, args.field)
    unmatched = {1: 0, 2: 0, 3: 0, 4: 0}
    pairs = 0
    for (i, ds) in report.checked_range:
        if ds < 0:
            continue
        census = classify_unmatched_faces(S, i, ds)
        pairs += 1
        unmatched[1] += len(census.type1)
        unmatched[2] += len(census.type2)
        unmatched[3] += len(census.type3)
        unmatched[4] += len(census.type4)
    payload = report.to_json_dict()
    payload["classification"] = {
        "pairs": pairs,
        "unmatched_by_type": {str(t): n for t, n in sorted(unmatched.items())},
        "gaps": 0,
    }
    _emit(
        payload,
        args.json,
        [
            f"generators: {_gen_text(S)}",
            "blowup: " + ",".join(str(g) for g in report.blowup_generators),
            f"field: {args.field.label}",
            f"shift base: {report.shift_base}",
            f"checked pairs: {len(report.checked_range)}",
            f"mismatches: {len(report.mismatches)}",
            "unmatched faces: "
            + " ".join(f"type{t}={n}" for t, n in sorted(unmatched.items())),
            f"verdict: {report.verdict}",
            f"note: {report.i0_note}",
        ],
    )
    return EXIT_OK if report.passed else EXIT_MATH


def _cmd_sweep(args) -> int:
    report = sweep(
        args.bound,
        args.field,
        jobs=args.jobs,
        deadline_s=args.deadline,
    )
    payload = report.to_json_dict()
    _emit(
        payload,
        args.json,
        [
            f"bound: {report.bound}",
            f"field: {args.field.label}",
            f"total: {report.total}",
            f"eligible: {report.eligible}",
            f"passes: {report.passes}",
            f"failures: {len(report.failures)}",
            f"prop failures: {len(report.prop_failures)}",
            f"skipped infeasible: {len(report.skipped_infeasible)}",
            f"classification pairs: {report.classification_pairs}",
            "unmatched: "
            + " ".join(
                f"type{t}={n}" for t, n in sorted(report.unmatched_by_type.items())
            ),
            "completed: " + ("yes" if report.completed else "no"),
            "verdict: " + ("pass" if report.ok else "fail"),
        ],
    )
    return EXIT_OK if report.ok else EXIT_MATH


def _cmd_enumerate(args) -> int:
    if args.bound < 0:
        print("bound must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    members = [list(S.min_generators) for S in enumerate_arf(args.bound)]
    members.sort()
    payload = {
        "schema_version": 1,
        "bound": args.bound,
        "count": len(members),
        "semigroups": members,
    }
    lines = [f"count: {len(members)}"]
    lines.extend(",".join(str(g) for g in gens) for gens in members)
    _emit(payload, args.json, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arfbetti",
        description=(
            "Numerical semigroups, divisor complexes, graded Betti numbers,"
            " and the blowup shift identity."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    p = add("info", _cmd_info, "invariants of a semigroup")
    p.add_argument("generators")

    p = add("arf-check", _cmd_arf_check, "test the closure condition")
    p.add_argument("generators")

    p = add("arf-closure", _cmd_arf_closure, "smallest Arf oversemigroup")
    p.add_argument("generators")

    p = add("blowup", _cmd_blowup, "blowup semigroup")
    p.add_argument("generators")

    p = add("complex", _cmd_complex, "squarefree divisor complex at a degree")
    p.add_argument("generators")
    p.add_argument("degree", type=int)

    p = add("betti", _cmd_betti, "graded Betti table")
    p.add_argument("generators")
    p.add_argument("--field", type=_field_arg, default=RATIONALS)
    p.add_argument(
        "--max-degree",
        type=int,
        default=None,
        help="scan past the provable bound (only takes effect beyond it)",
    )

    p = add("verify", _cmd_verify, "check the shift identity for one semigroup")
    p.add_argument("generators")
    p.add_argument("--field", type=_field_arg, default=RATIONALS)

    p = add("sweep", _cmd_sweep, "check the whole corpus up to a bound")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--field", type=_field_arg, default=RATIONALS)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument(
        "--deadline",
        type=float,
        default=None,
        help="soft wall-clock budget in seconds; the report is marked"
        " incomplete when it triggers",
    )

    p = add("enumerate", _cmd_enumerate, "list Arf semigroups up to a bound")
    p.add_argument("--bound", type=int, required=True)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except PreconditionFailedError as e:
        if e.reason == "multiplicity_drops":
            print("blowup multiplicity drops", file=sys.stderr)
        else:
            print("not an Arf semigroup", file=sys.stderr)
        return EXIT_USAGE
    except ClassificationGapError as e:
        print(f"classification gap: {e}", file=sys.stderr)
        return EXIT_MATH
    except BettiScaleError as e:
        print(f"scale limit: {e}", file=sys.stderr)
        return EXIT_MATH
    except ArfBettiError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
