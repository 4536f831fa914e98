"""Command-line interface.

All mathematical output is JSON (canonical by default, indented with
``--pretty``).  Exit codes: 0 success, 1 precondition or usage errors,
2 internal-consistency failures (a verified construction contradicting one
of the classification or construction theorems).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import metadata

from . import braces, bracoids, corpus, groups, ideals, maps, serialize, ybe
from .errors import InternalConsistencyError, PreconditionError
from .groups import Subgroup

INTERFACE_VERSION = "1.0"


def _version_string() -> str:
    try:
        pkg_version = metadata.version("skewbracoid")
    except metadata.PackageNotFoundError:
        pkg_version = "unknown"
    return f"skewbracoid {pkg_version} (interface {INTERFACE_VERSION})"


def _load_json_arg(arg: str) -> dict:
    """A positional group/map argument: inline JSON or a path to a file."""
    text = arg
    if not arg.lstrip().startswith("{"):
        try:
            with open(arg) as f:
                text = f.read()
        except OSError as exc:
            raise PreconditionError(f"cannot read {arg!r}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"invalid JSON in {arg!r}: {exc}") from exc
    if not isinstance(obj, dict):
        raise PreconditionError(f"{arg!r} must contain a JSON object")
    return obj


def _emit(value, args) -> None:
    if args.pretty:
        print(serialize.export_pretty(value))
    else:
        print(serialize.export_json(value))


def _group_and_map(args):
    G = serialize.parse_group(_load_json_arg(args.group),
                              order_cap=args.max_order)
    psi = serialize.parse_map(_load_json_arg(args.map), G,
                              order_cap=args.max_order)
    return G, psi


def _parse_subgroup(G, text: str) -> Subgroup:
    members = []
    for part in text.split(","):
        part = part.strip()
        members.append(G.index_of(part) if not part.lstrip("-").isdigit()
                       else int(part))
    return Subgroup(G, tuple(members))


def _cmd_group_build(args) -> int:
    G = serialize.parse_group(_load_json_arg(args.spec),
                              order_cap=args.max_order)
    _emit(G, args)
    return 0


def _cmd_abmaps_enumerate(args) -> int:
    G = serialize.parse_group(_load_json_arg(args.group),
                              order_cap=args.max_order)
    found = maps.enumerate_abelian_maps(G)
    _emit({"count": len(found), "maps": found}, args)
    return 0


def _cmd_brace_build(args) -> int:
    G, psi = _group_and_map(args)
    if args.block is not None:
        tables = braces.brace_block(psi, args.block)
        _emit({"block_depth": args.block, "tables": tables}, args)
        return 0
    left, right = braces.braces_from_map(G, psi)
    _emit({"dot_circ": left, "circ_dot": right}, args)
    return 0


def _cmd_ideals_classify(args) -> int:
    G, psi = _group_and_map(args)
    if args.named:
        named = ideals.named_subgroups(G, psi)
        _emit({"ker": named.ker, "fix": named.fix, "h_hat": named.h_hat}, args)
        return 0
    if args.subgroup is not None:
        H = _parse_subgroup(G, args.subgroup)
        _emit(ideals.classify_subgroup(G, psi, H), args)
        return 0
    verdicts = ideals.find_strong_left_ideals(G, psi)
    _emit({"count": len(verdicts), "verdicts": verdicts}, args)
    return 0


def _cmd_bracoid_build(args) -> int:
    G, psi = _group_and_map(args)
    via = args.via
    if via.startswith("tower:"):
        try:
            n = int(via.split(":", 1)[1])
        except ValueError:
            raise PreconditionError("tower index must be an integer") from None
        if args.opposite:
            raise PreconditionError("--opposite does not apply to the tower")
        b = bracoids.phi_tower_bracoid(G, psi, n)
    else:
        if args.subgroup is None:
            raise PreconditionError(f"--via {via} requires --subgroup")
        H = _parse_subgroup(G, args.subgroup)
        build = bracoids.bracoid_from_C1 if via == "C1" else bracoids.bracoid_from_C2
        b = build(G, psi, H, opposite=args.opposite)
    if args.reduce:
        b = bracoids.reduce_bracoid(b)
    _emit({"bracoid": b, "report": bracoids.verify_bracoid(b)}, args)
    return 0


def _cmd_ybe_build(args) -> int:
    construction = args.construction
    payload = {}
    if construction == "product":
        if not (args.g1 and args.g2 and args.alpha and args.beta):
            raise PreconditionError(
                "--construction product needs --g1, --g2, --alpha, --beta")
        G1 = serialize.parse_group(_load_json_arg(args.g1), order_cap=args.max_order)
        G2 = serialize.parse_group(_load_json_arg(args.g2), order_cap=args.max_order)
        alpha = serialize.parse_map(_load_json_arg(args.alpha), G1, G2,
                                    order_cap=args.max_order)
        beta = serialize.parse_map(_load_json_arg(args.beta), G2, G1,
                                   order_cap=args.max_order)
        solutions = {"R": ybe.build_ybe_product(G1, G2, alpha, beta)}
    else:
        if not (args.group and args.map):
            raise PreconditionError(
                f"--construction {construction} needs a group and a map")
        G, psi = _group_and_map(args)
        if construction == "idempotent":
            solutions = {"R": ybe.build_ybe_idempotent(G, psi)}
        elif construction == "abelian-pair":
            R, Rp = ybe.build_ybe_abelian_pair(G, psi)
            solutions = {"R": R, "R_prime": Rp}
        else:  # contained
            if args.subgroup is None:
                raise PreconditionError("--construction contained needs --subgroup")
            H = _parse_subgroup(G, args.subgroup)
            b = bracoids.bracoid_from_C2(G, psi, H)
            K = bracoids.find_contained_brace(b)
            if K is None:
                raise PreconditionError(
                    "no subgroup of the acting group acts regularly on the target")
            solutions = {"R": ybe.build_ybe_from_contained_brace(b, K)}
    out = dict(solutions)
    if args.verify:
        cap = 0 if args.sample else ybe.TRIPLE_EXHAUSTIVE_CAP
        out["reports"] = {key: ybe.verify_ybe(sol, exhaustive_cap=cap,
                                              seed=args.seed)
                          for key, sol in solutions.items()}
    _emit(out, args)
    return 0


def _cmd_corpus_run(args) -> int:
    results = ([corpus.run_fixture(args.name)] if args.name
               else corpus.run_all())
    ok = all(r.ok for r in results)
    _emit({"ok": ok, "fixtures": [r.to_jsonable() for r in results]}, args)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="canonical JSON output (the default)")
    common.add_argument("--pretty", action="store_true",
                        help="indented JSON output")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for sampled verification sweeps")
    common.add_argument("--threads", type=int,
                        default=int(os.environ.get("SKEWBRACOID_THREADS", "1")),
                        help="worker count hint (sweeps are deterministic "
                             "regardless)")
    common.add_argument("--max-order", type=int,
                        default=groups.DEFAULT_ORDER_CAP,
                        help="refuse to build groups above this order")

    parser = argparse.ArgumentParser(
        prog="skewbracoid",
        description="Skew braces, skew bracoids, and Yang-Baxter solutions "
                    "from abelian maps.")
    parser.add_argument("--version", action="version",
                        version=_version_string())
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="group construction")
    gsub = p.add_subparsers(dest="subcommand", required=True)
    g = gsub.add_parser("build", parents=[common],
                        help="build and verify a group from a spec")
    g.add_argument("spec", help="group spec (JSON file or inline JSON)")
    g.set_defaults(func=_cmd_group_build)

    p = sub.add_parser("abmaps", help="abelian map enumeration")
    asub = p.add_subparsers(dest="subcommand", required=True)
    a = asub.add_parser("enumerate", parents=[common],
                        help="list every abelian endomorphism of a group")
    a.add_argument("group")
    a.set_defaults(func=_cmd_abmaps_enumerate)

    p = sub.add_parser("brace", help="skew brace construction")
    bsub = p.add_subparsers(dest="subcommand", required=True)
    b = bsub.add_parser("build", parents=[common],
                        help="build the bi-skew pair (or a block) from a map")
    b.add_argument("group")
    b.add_argument("map")
    b.add_argument("--block", type=int, default=None,
                   help="build the iterated-operation block to this depth")
    b.set_defaults(func=_cmd_brace_build)

    p = sub.add_parser("ideals", help="strong left ideal classification")
    isub = p.add_subparsers(dest="subcommand", required=True)
    i = isub.add_parser("classify", parents=[common])
    i.add_argument("group")
    i.add_argument("map")
    mode = i.add_mutually_exclusive_group()
    mode.add_argument("--all", action="store_true",
                      help="classify every subgroup (the default)")
    mode.add_argument("--named", action="store_true",
                      help="report ker, fix, and the phi-preimage of the center")
    mode.add_argument("--subgroup",
                      help="comma-separated members (indices or names)")
    i.set_defaults(func=_cmd_ideals_classify)

    p = sub.add_parser("bracoid", help="skew bracoid construction")
    osub = p.add_subparsers(dest="subcommand", required=True)
    o = osub.add_parser("build", parents=[common])
    o.add_argument("group")
    o.add_argument("map")
    o.add_argument("--via", required=True,
                   help="C1, C2, or tower:n")
    o.add_argument("--subgroup",
                   help="comma-separated members (indices or names)")
    o.add_argument("--opposite", action="store_true",
                   help="use the opposite operation on the target")
    o.add_argument("--reduce", action="store_true",
                   help="quotient the acting group by the action kernel")
    o.set_defaults(func=_cmd_bracoid_build)

    p = sub.add_parser("ybe", help="Yang-Baxter solution construction")
    ysub = p.add_subparsers(dest="subcommand", required=True)
    y = ysub.add_parser("build", parents=[common])
    y.add_argument("group", nargs="?")
    y.add_argument("map", nargs="?")
    y.add_argument("--construction", required=True,
                   choices=["idempotent", "product", "abelian-pair", "contained"])
    y.add_argument("--g1")
    y.add_argument("--g2")
    y.add_argument("--alpha")
    y.add_argument("--beta")
    y.add_argument("--subgroup")
    y.add_argument("--verify", action="store_true")
    y.add_argument("--sample", action="store_true",
                   help="force sampled verification instead of exhaustive")
    y.set_defaults(func=_cmd_ybe_build)

    p = sub.add_parser("corpus", help="built-in end-to-end fixtures")
    csub = p.add_subparsers(dest="subcommand", required=True)
    c = csub.add_parser("run", parents=[common])
    c.add_argument("name", nargs="?", choices=list(corpus.FIXTURE_NAMES))
    c.set_defaults(func=_cmd_corpus_run)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalConsistencyError as exc:
        print(json.dumps({"error": "internal-consistency", "message": str(exc)}),
              file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(json.dumps({"error": "precondition", "message": str(exc)}),
              file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
