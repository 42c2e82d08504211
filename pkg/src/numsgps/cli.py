"""Command line front end.

Eight subcommands cover the whole library: info, extensions, chain,
complexity, enumerate, tree-dot, verify and search-pf-gap.  Output is
deterministic; data-emitting commands take --json, whose payloads follow
schemas/cli_output.v1.json.  Exit codes: 0 success, 1 a verify check
found a discrepancy, 2 usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .complexity import ThetaMap, chain, classify, complexity
from .errors import SemigroupError
from .extensions import ideal_extensions
from .genealogy import DEFAULT_NODE_CAP, enumerate_semigroups, export_dot
from .oracle import CHECKS, enumerate_by_genus, pf_gap_search
from .semigroup import NumericalSemigroup, from_gaps

NODE_CAP_ENV = "NUMSGPS_NODE_CAP"


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(p.strip()) for p in text.split(",")]
    except ValueError:
        raise ValueError(f"expected a comma-separated integer list, got {text!r}") from None


def _semigroup_from(args, parser) -> NumericalSemigroup:
    if args.gaps is not None and args.semigroup is not None:
        parser.error("give a semigroup literal or --gaps, not both")
    if args.gaps is not None:
        return from_gaps(_parse_int_list(args.gaps))
    if args.semigroup is None:
        parser.error("a semigroup literal (or --gaps) is required")
    return NumericalSemigroup.parse(args.semigroup)


def _msg_line(s: NumericalSemigroup, gap_style: bool) -> str:
    gens = s.min_generators
    if gap_style:
        return "[ " + ", ".join(str(g) for g in gens) + " ]"
    return "[" + ",".join(str(g) for g in gens) + "]"


def _node_cap() -> int:
    raw = os.environ.get(NODE_CAP_ENV)
    if raw is None:
        return DEFAULT_NODE_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{NODE_CAP_ENV} must be an integer, got {raw!r}") from None


def _add_semigroup_args(sub):
    sub.add_argument("semigroup", nargs="?",
                     help="literal like '<5,6,8,9>' or a bare comma list")
    sub.add_argument("--gaps", metavar="LIST",
                     help="build the semigroup from its gap set, e.g. 1,2,3,4,7")


def cmd_info(args, parser) -> int:
    s = _semigroup_from(args, parser)
    if args.json:
        print(json.dumps(s.to_dict()))
        return 0
    print(f"semigroup: {s}")
    print(f"multiplicity: {s.multiplicity}")
    print(f"frobenius: {s.frobenius}")
    print(f"genus: {s.genus}")
    print("small elements: " + ",".join(str(x) for x in s.small_elements))
    print("gaps: " + (",".join(str(x) for x in s.gaps) or "-"))
    if s.is_whole:
        print("pseudo-frobenius: -")
    else:
        pf = s.pseudo_frobenius()
        print("pseudo-frobenius: " + ",".join(str(x) for x in pf))
        print(f"type: {len(pf)}")
    print(f"complexity: {complexity(s)}")
    print(f"class: {classify(s).value}")
    return 0


def cmd_extensions(args, parser) -> int:
    s = _semigroup_from(args, parser)
    exts = ideal_extensions(s, proper=args.proper)
    if args.json:
        print(json.dumps([list(d.min_generators) for d in exts]))
        return 0
    for d in exts:
        print(_msg_line(d, args.gap_style))
    return 0


def cmd_chain(args, parser) -> int:
    s = _semigroup_from(args, parser)
    theta = ThetaMap(args.theta)
    links = chain(theta, s).links
    if args.json:
        print(json.dumps({"theta": theta.value,
                          "links": [list(l.min_generators) for l in links],
                          "length": len(links) - 1}))
        return 0
    shown = links if args.full else links[1:]
    for link in shown:
        print(_msg_line(link, args.gap_style))
    return 0


def cmd_complexity(args, parser) -> int:
    s = _semigroup_from(args, parser)
    c = complexity(s)
    if args.json:
        print(json.dumps({"generators": list(s.min_generators), "complexity": c}))
        return 0
    print(c)
    return 0


def cmd_enumerate(args, parser) -> int:
    found = enumerate_semigroups(args.multiplicity, args.complexity,
                                 max_nodes=_node_cap())
    if args.count:
        print(len(found))
        return 0
    if args.json:
        print(json.dumps([list(s.min_generators) for s in found]))
        return 0
    for s in found:
        print(_msg_line(s, args.gap_style))
    return 0


def cmd_tree_dot(args, parser) -> int:
    sys.stdout.write(export_dot(args.multiplicity, args.depth))
    return 0


def cmd_verify(args, parser) -> int:
    names = [n.strip() for n in args.checks.split(",") if n.strip()]
    for name in names:
        if name not in CHECKS:
            parser.error(f"unknown check {name!r}; choose from {','.join(CHECKS)}")
    catalog = enumerate_by_genus(args.max_genus)
    results = []
    for name in names:
        detail = CHECKS[name](catalog)
        results.append({"name": name, "ok": detail is None, "detail": detail})
        if detail is not None:
            break
    ok = all(r["ok"] for r in results)
    if args.json:
        print(json.dumps({"max_genus": args.max_genus, "ok": ok, "checks": results}))
    else:
        for r in results:
            if r["ok"]:
                print(f"check {r['name']}: ok (genus <= {args.max_genus})")
            else:
                print(f"check {r['name']}: FAIL {r['detail']}")
    return 0 if ok else 1


def cmd_search_pf_gap(args, parser) -> int:
    hits = pf_gap_search(args.max_genus)
    if args.json:
        print(json.dumps([{"generators": list(s.min_generators),
                           "complexity": c, "mu_pf": steps}
                          for s, c, steps in hits]))
        return 0
    for s, c, steps in hits:
        print(f"{s} complexity={c} mu_pf={steps}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numsgps",
        description="Numerical semigroups: invariants, ideal extensions, "
                    "chains, and genealogy enumeration.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("info", help="invariants of one semigroup")
    _add_semigroup_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = subs.add_parser("extensions", help="all ideal extensions")
    _add_semigroup_args(p)
    p.add_argument("--proper", action="store_true",
                   help="drop the semigroup itself from the list")
    p.add_argument("--gap-style", action="store_true",
                   help="print generator lists as '[ 3, 5 ]'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_extensions)

    p = subs.add_parser("chain", help="iterate a gap selection up to the full monoid")
    _add_semigroup_args(p)
    p.add_argument("--theta", default="gamma",
                   choices=[t.value for t in ThetaMap],
                   help="which selection to iterate (default gamma)")
    p.add_argument("--full", action="store_true",
                   help="include the starting semigroup as the first line")
    p.add_argument("--gap-style", action="store_true",
                   help="print generator lists as '[ 5, 7, 23 ]'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_chain)

    p = subs.add_parser("complexity", help="the complexity invariant")
    _add_semigroup_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_complexity)

    p = subs.add_parser("enumerate",
                        help="all semigroups of a multiplicity and complexity")
    p.add_argument("-m", "--multiplicity", type=int, required=True)
    p.add_argument("-c", "--complexity", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true", help="print only how many")
    group.add_argument("--json", action="store_true")
    p.add_argument("--gap-style", action="store_true",
                   help="print generator lists as '[ 3, 7 ]'")
    p.set_defaults(func=cmd_enumerate)

    p = subs.add_parser("tree-dot", help="genealogy tree as a DOT digraph")
    p.add_argument("-m", "--multiplicity", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=cmd_tree_dot)

    p = subs.add_parser("verify",
                        help="certify closed forms against brute force")
    p.add_argument("--max-genus", type=int, default=8)
    p.add_argument("--checks", default="pf,ext,complexity,tree",
                   help="comma list from pf,ext,complexity,tree")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("search-pf-gap",
                        help="semigroups where the PF chain overshoots the minimum")
    p.add_argument("--max-genus", type=int, default=8)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search_pf_gap)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except (SemigroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
