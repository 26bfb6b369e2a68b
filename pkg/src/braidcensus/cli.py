"""Command line surface: construct, count, paths, recognize, game,
atypical, verify, formula.

Every subcommand writes exactly one line to standard output: a graph6
code or a JSON document with counts as decimal strings.  Diagnostics go
to the error stream.  Exit codes: 0 success, 2 for any input problem
(unparseable flags, bad graphs, violated preconditions), 3 when a
--expect assertion fails.

Graph input is one --input value: either a literal graph6 code or a
path to a file whose first non-empty line is one.  Subcommands that
also accept --family/--n build the requested family member instead;
exactly one input source must be given.

Sharded sweeps checkpoint through the directory named by the
BRAIDCENSUS_CHECKPOINT_DIR environment variable: each finished shard
appends one "shard,max,codes..." line, completed shards are skipped on
rerun, and --merge combines a fully checkpointed run.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

from .census import count_induced_cycles, count_induced_st_paths
from .families import (
    FAMILY_TAGS,
    ClusterPartition,
    build_E,
    build_G,
    build_H,
    member_of_F,
    members_of_script_G,
)
from .formulas import (
    f2,
    f2_even,
    f2_odd,
    m_lower,
    short_cycle_mass,
    vertex_cycle_bound,
)
from .game import atypical_set, solve_typical_game
from .graphs import (
    Graph,
    Graph6Error,
    InputError,
    UnsupportedError,
    parse_graph6,
    to_graph6,
)
from .recognition import classify_family_all, discover_cyclic_braid, verify_braid
from .sweep import (
    QUANTITIES,
    checkpoint_line,
    exhaustive_max,
    merge_sweeps,
    parse_checkpoint_line,
)

CHECKPOINT_DIR_VAR = "BRAIDCENSUS_CHECKPOINT_DIR"

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_EXPECT = 3


def _default_threads() -> int:
    return os.cpu_count() or 1


def _emit(doc: dict) -> None:
    print(json.dumps(doc), flush=True)


# ======================================================================
# input sources
# ======================================================================


def _load_graph(text: str) -> Graph:
    """A literal graph6 code, or a file whose first line holds one."""
    if os.path.isfile(text):
        with open(text, encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    return parse_graph6(line)
        raise InputError(f"no graph6 code in {text}")
    return parse_graph6(text)


def _build_family(tag: str, n: int, variant: int) -> tuple[Graph, ClusterPartition]:
    if tag in ("H", "G", "E"):
        if variant != 0:
            raise InputError(f"family {tag} has a single variant per n")
        builder = {"H": build_H, "G": build_G, "E": build_E}[tag]
        return builder(n)
    if tag in ("F", "F_odd", "F_even"):
        parity = {"F": "all", "F_odd": "odd", "F_even": "even"}[tag]
        return member_of_F(n, parity=parity, variant=variant)
    if tag == "G_script":
        member = next(
            itertools.islice(members_of_script_G(n), variant, variant + 1), None
        )
        if member is None:
            raise InputError(f"G_script at n={n} has no variant {variant}")
        return member
    raise InputError(f"unknown family {tag!r}")


def _graph_argument(args: argparse.Namespace) -> Graph:
    """Resolve the one allowed input source of count/paths."""
    if args.input is not None:
        if args.family is not None or args.n is not None:
            raise InputError("give either --input or --family/--n, not both")
        return _load_graph(args.input)
    if args.family is None or args.n is None:
        raise InputError("need an input source: --input, or --family with --n")
    return _build_family(args.family, args.n, args.variant)[0]


def _add_graph_source(sub: argparse.ArgumentParser, family_too: bool) -> None:
    sub.add_argument("--input", help="graph6 code or file")
    if family_too:
        sub.add_argument("--family", choices=FAMILY_TAGS)
        sub.add_argument("--n", type=int)
        sub.add_argument("--variant", type=int, default=0)


# ======================================================================
# subcommands
# ======================================================================


def _cmd_construct(args: argparse.Namespace) -> int:
    g, part = _build_family(args.family, args.n, args.variant)
    if args.out == "g6":
        print(to_graph6(g), flush=True)
    else:
        _emit({"n": g.n, "g6": to_graph6(g), **part.to_json_dict()})
    return EXIT_OK


def _cmd_count(args: argparse.Namespace) -> int:
    g = _graph_argument(args)
    census = count_induced_cycles(g, threads=args.threads)
    _emit(census.to_json_dict(n=g.n))
    return EXIT_OK


def _cmd_paths(args: argparse.Namespace) -> int:
    g = _graph_argument(args)
    census = count_induced_st_paths(g, args.x, args.y)
    _emit(census.to_json_dict(x=args.x, y=args.y))
    return EXIT_OK


def _cmd_recognize(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    part = discover_cyclic_braid(g)
    if part is None:
        doc = {
            "verified": False,
            "family": None,
            "cluster_sizes": None,
            "intra_pattern": None,
            "failure_witness": None,
            "clusters": None,
        }
    else:
        doc = verify_braid(g, part).to_json_dict()
        doc["clusters"] = part.to_json_dict()["clusters"]
    tags = [family.tag for family in classify_family_all(g)]
    doc["families"] = tags
    _emit(doc)
    if args.expect is not None and args.expect not in tags:
        print(f"expected family {args.expect}, found {tags}", file=sys.stderr)
        return EXIT_EXPECT
    return EXIT_OK


def _cmd_game(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    verdict = solve_typical_game(g, args.v, args.w)
    _emit(verdict.to_json_dict())
    return EXIT_OK


def _cmd_atypical(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    report = atypical_set(g, args.v, threads=args.threads)
    _emit(report.to_json_dict())
    return EXIT_OK


def _checkpoint_path(n: int, quantity: str, shards: int) -> str | None:
    directory = os.environ.get(CHECKPOINT_DIR_VAR)
    if directory is None:
        return None
    return os.path.join(directory, f"sweep_{quantity}_n{n}_s{shards}.txt")


def _read_checkpoints(path: str, n: int, quantity: str, shards: int) -> dict:
    done = {}
    if os.path.isfile(path):
        with open(path, encoding="ascii") as fh:
            for line in fh:
                if line.strip():
                    shard, result = parse_checkpoint_line(
                        n, quantity, shards, line
                    )
                    done[shard] = result
    return done


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.shards < 1:
        raise InputError("--shards must be at least 1")
    path = None
    if args.shards > 1:
        path = _checkpoint_path(args.n, args.quantity, args.shards)
    if args.merge:
        if args.shards < 2 or path is None:
            raise InputError(
                f"--merge needs --shards > 1 and {CHECKPOINT_DIR_VAR} set"
            )
        done = _read_checkpoints(path, args.n, args.quantity, args.shards)
        missing = sorted(set(range(args.shards)) - set(done))
        if missing:
            raise InputError(f"checkpoint incomplete, missing shards {missing}")
        result = merge_sweeps([done[i] for i in sorted(done)])
    else:
        done = (
            _read_checkpoints(path, args.n, args.quantity, args.shards)
            if path
            else {}
        )
        if args.shard in done:
            result = done[args.shard]
        else:
            result = exhaustive_max(
                args.n,
                args.quantity,
                threads=args.threads,
                long_run=args.long_run,
                shards=args.shards,
                shard=args.shard,
            )
            if path is not None:
                with open(path, "a", encoding="ascii") as fh:
                    fh.write(checkpoint_line(args.shard, result) + "\n")
    _emit(result.to_json_dict())
    if args.expect is not None and result.max.value != args.expect:
        print(
            f"expected max {args.expect}, swept {result.max.value}",
            file=sys.stderr,
        )
        return EXIT_EXPECT
    return EXIT_OK


_FORMULAS = {
    "f2": f2,
    "f2o": f2_odd,
    "f2e": f2_even,
    "m_lower": m_lower,
    "short_mass": short_cycle_mass,
}


def _cmd_formula(args: argparse.Namespace) -> int:
    if args.name == "vertex_bound":
        if args.d is None:
            raise InputError("vertex_bound needs --d")
        bound = vertex_cycle_bound(args.n, args.d)
        _emit({"name": args.name, "n": args.n, "d": args.d,
               "value": repr(bound.value)})
        return EXIT_OK
    if args.d is not None:
        raise InputError(f"--d only applies to vertex_bound, not {args.name}")
    count = _FORMULAS[args.name](args.n)
    _emit({"name": args.name, "n": args.n, "value": str(count.value)})
    return EXIT_OK


# ======================================================================
# parser and entry point
# ======================================================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidcensus",
        description="Braid families, induced cycle/path censuses, "
        "recognition, the walk game, and exhaustive small-n sweeps.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("construct", help="build a family member")
    sub.add_argument("--family", required=True, choices=FAMILY_TAGS)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--variant", type=int, default=0)
    sub.add_argument("--out", choices=("g6", "json"), default="g6")
    sub.set_defaults(handler=_cmd_construct)

    sub = subs.add_parser("count", help="induced cycle census of one graph")
    _add_graph_source(sub, family_too=True)
    sub.add_argument("--threads", type=int, default=_default_threads())
    sub.set_defaults(handler=_cmd_count)

    sub = subs.add_parser("paths", help="induced x-y path census")
    _add_graph_source(sub, family_too=True)
    sub.add_argument("--x", type=int, required=True)
    sub.add_argument("--y", type=int, required=True)
    sub.set_defaults(handler=_cmd_paths)

    sub = subs.add_parser("recognize", help="discover cyclic braid structure")
    sub.add_argument("--input", required=True, help="graph6 code or file")
    sub.add_argument("--expect", choices=("H", "G", "E"))
    sub.set_defaults(handler=_cmd_recognize)

    sub = subs.add_parser("game", help="solve the walk game for one probe")
    sub.add_argument("--input", required=True, help="graph6 code or file")
    sub.add_argument("--v", type=int, required=True)
    sub.add_argument("--w", type=int, required=True)
    sub.set_defaults(handler=_cmd_game)

    sub = subs.add_parser("atypical", help="classify every eligible probe")
    sub.add_argument("--input", required=True, help="graph6 code or file")
    sub.add_argument("--v", type=int, required=True)
    sub.add_argument("--threads", type=int, default=_default_threads())
    sub.set_defaults(handler=_cmd_atypical)

    sub = subs.add_parser("verify", help="exhaustive sweep of all graphs")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--quantity", required=True, choices=QUANTITIES)
    sub.add_argument("--threads", type=int, default=_default_threads())
    sub.add_argument("--long-run", action="store_true", dest="long_run")
    sub.add_argument("--shards", type=int, default=1)
    sub.add_argument("--shard", type=int, default=0)
    sub.add_argument("--merge", action="store_true")
    sub.add_argument("--expect", type=int)
    sub.set_defaults(handler=_cmd_verify)

    sub = subs.add_parser("formula", help="evaluate a closed form")
    sub.add_argument(
        "--name",
        required=True,
        choices=tuple(_FORMULAS) + ("vertex_bound",),
    )
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--d", type=int)
    sub.set_defaults(handler=_cmd_formula)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (InputError, Graph6Error, UnsupportedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
