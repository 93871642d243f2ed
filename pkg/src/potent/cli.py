"""``potent`` command-line front end.

Exit status: 0 success / true, 1 a property fails (not graphic, not
potential, mismatch found), 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .characterize import DomainError, predicate_for
from .graph import target_pattern
from .oracle import DEFAULT_CAP, HARD_CAP, OracleError, oracle_search
from .sequence import (
    LayOffError,
    SequenceParseError,
    enumerate_graphic,
    is_graphic,
    lay_off,
    parse_sequence,
    path_cycle_check,
    sequence_stats,
)
from .sigma import check_sigma_formula, closed_form, extremal_sequence, sigma_value
from .verify import verify_range

TARGETS = ("k23", "k5p4", "k33", "k6c6")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    def with_target(p, required=True):
        p.add_argument("--target", choices=TARGETS, required=required)

    def with_cap(p):
        p.add_argument("--max-n", type=int, default=DEFAULT_CAP, dest="max_n")

    parser = _Parser(prog="potent", description="Graphic and potentially H-graphic degree sequences.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="is the sequence graphic?")
    p.add_argument("--graphic", action="store_true", help="graphicality test (the default)")
    p.add_argument("--method", choices=("erdos_gallai", "kleitman_wang"), default="erdos_gallai")
    p.add_argument("sequence")

    p = sub.add_parser("potential", parents=[common], help="closed-form potential test")
    with_target(p)
    p.add_argument("sequence")

    p = sub.add_parser("oracle", parents=[common], help="search realizations for the target")
    with_target(p)
    p.add_argument("--mode", choices=("exhaustive", "top-degree"), default="exhaustive")
    with_cap(p)
    p.add_argument("sequence")

    p = sub.add_parser("lay-off", parents=[common], help="residual sequence after laying off d_k")
    p.add_argument("--k", type=int, default=None, help="1-based position (default n)")
    p.add_argument("sequence")

    p = sub.add_parser("enumerate", parents=[common], help="list graphic n-term sequences")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--positive", action="store_true", help="only sequences without zero terms")

    p = sub.add_parser("sigma", parents=[common], help="sigma(H, n) by exhaustive scan")
    with_target(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("predicate", "oracle"), default="predicate")
    p.add_argument("--mode", choices=("exhaustive", "top-degree"), default="exhaustive")
    with_cap(p)

    p = sub.add_parser("extremal", parents=[common], help="standard extremal sequence")
    with_target(p)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="predicate vs oracle over a range of n")
    with_target(p)
    p.add_argument("--n-min", type=int, required=True, dest="n_min")
    p.add_argument("--n-max", type=int, required=True, dest="n_max")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--mode", choices=("exhaustive", "top-degree"), default="exhaustive")
    with_cap(p)
    return parser


def _cap(args) -> int:
    if args.max_n > HARD_CAP:
        raise UsageError(f"--max-n may not exceed {HARD_CAP}")
    return args.max_n


def _mode(args) -> str:
    return args.mode.replace("-", "_")


def _cmd_check(args):
    seq = parse_sequence(args.sequence)
    graphic = is_graphic(seq, args.method)
    stats = sequence_stats(seq)
    doc = {
        "sequence": str(seq),
        "graphic": graphic,
        "method": args.method,
        "sigma": stats.sigma,
        "m": stats.m,
        "h": stats.h,
        "n": stats.n,
        "path_cycle": path_cycle_check(seq),
    }
    text = f"({seq}) is {'graphic' if graphic else 'not graphic'}  [sigma={stats.sigma}, n={stats.n}]"
    return (0 if graphic else 1), doc, text


def _cmd_potential(args):
    seq = parse_sequence(args.sequence)
    target = target_pattern(args.target)
    verdict = predicate_for(target)(seq)
    doc = {"sequence": str(seq), "target": target.tag, **verdict.to_json()}
    if verdict.potential:
        text = f"({seq}) is potentially {target.tag}-graphic"
    else:
        text = f"({seq}) is not potentially {target.tag}-graphic; violated: " + ", ".join(
            str(c) for c in verdict.violated
        )
    return (0 if verdict.potential else 1), doc, text


def _cmd_oracle(args):
    seq = parse_sequence(args.sequence)
    result = oracle_search(seq, target_pattern(args.target), _mode(args), _cap(args))
    doc = result.to_json()
    if result.witness is not None:
        w = result.witness
        edges = " ".join(f"{u}-{v}" for u, v in w.graph.to_json()["edges"])
        text = (
            f"({seq}) has a realization containing {w.target.tag}\n"
            f"  embedding (1-based): {[p + 1 for p in w.embedding]}\n  edges: {edges}"
        )
    else:
        text = (
            f"no realization of ({seq}) contains {args.target} "
            f"(search exhausted, {result.states_explored} states)"
        )
    return (0 if result.potential else 1), doc, text


def _cmd_lay_off(args):
    seq = parse_sequence(args.sequence)
    k = len(seq) if args.k is None else args.k
    try:
        residual = lay_off(seq, k)
    except LayOffError as exc:
        doc = {"sequence": str(seq), "k": k, "residual": None, "error": str(exc)}
        return 1, doc, f"lay-off failed: {exc}"
    doc = {"sequence": str(seq), "k": k, "residual": str(residual)}
    return 0, doc, f"({seq}) minus d_{k} -> ({residual})"


def _cmd_enumerate(args):
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    seqs = [str(s) for s in enumerate_graphic(args.n, positive_only=args.positive)]
    doc = {"n": args.n, "positive": args.positive, "count": len(seqs), "sequences": seqs}
    return 0, doc, "\n".join(seqs + [f"# {len(seqs)} sequences"])


def _cmd_sigma(args):
    target = target_pattern(args.target)
    result = sigma_value(target, args.n, args.method, _mode(args), _cap(args))
    doc = result.to_json()
    expected = closed_form(target, args.n)
    doc["closed_form"] = expected
    status = 0
    text = f"sigma({target.tag}, {args.n}) = {result.sigma}  via {args.method}, extremal ({result.extremal})"
    if expected is not None:
        doc["formula_holds"] = result.sigma == expected
        text += f"; closed form {expected} {'holds' if doc['formula_holds'] else 'FAILS'}"
        status = 0 if doc["formula_holds"] else 1
    return status, doc, text


def _cmd_extremal(args):
    target = target_pattern(args.target)
    seq = extremal_sequence(target, args.n)
    graphic = is_graphic(seq)
    verdict = predicate_for(target)(seq) if graphic else None
    doc = {
        "target": target.tag,
        "n": args.n,
        "sequence": str(seq),
        "sigma": seq.sigma,
        "graphic": graphic,
        "potential": None if verdict is None else verdict.potential,
    }
    text = f"({seq})  sigma={seq.sigma}  graphic={graphic}  potential={doc['potential']}"
    return 0, doc, text


def _cmd_verify(args):
    report = verify_range(args.target, args.n_min, args.n_max, args.workers, _mode(args), _cap(args))
    doc = report.to_json()
    lines = [
        f"{report.target.tag}, n={args.n_min}..{args.n_max}: {report.sequences_tested} sequences, "
        f"{report.agreements} agree, {len(report.mismatches)} mismatches ({report.elapsed:.1f}s)"
    ]
    lines += [f"  MISMATCH {json.dumps(m, sort_keys=True)}" for m in report.mismatches]
    return (0 if report.ok else 1), doc, "\n".join(lines)


_COMMANDS = {
    "check": _cmd_check,
    "potential": _cmd_potential,
    "oracle": _cmd_oracle,
    "lay-off": _cmd_lay_off,
    "enumerate": _cmd_enumerate,
    "sigma": _cmd_sigma,
    "extremal": _cmd_extremal,
    "verify": _cmd_verify,
}


def run_command(argv: Sequence[str], out=None, err=None) -> int:
    """Run one CLI invocation; returns the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
        status, doc, text = _COMMANDS[args.command](args)
    except (UsageError, SequenceParseError, DomainError, OracleError, ValueError, IndexError) as exc:
        print(f"potent: error: {exc}", file=err)
        return 2
    if args.format == "json":
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")
    return status


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
