"""Command-line interface: gamma, rc, witness, enumerate, verify.

Exit codes: 0 decided/pass, 2 usage or parse error, 3 resource bound
exceeded, 4 undecided (Unknown verdict or suite failure uses 1).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .action import coset_action, max_fixity_classes, natural_action, regular_action
from .classgraph import build_gamma, build_gamma_rational, dot_export, graph_summary
from .config import DEFAULT_BOUNDS, BoundExceeded, RunConfig, load_config_file
from .group import PermGroup, class_of, rational_class
from .perm import from_cycles
from .relcomplex import is_binary, rc_exact
from .verify import enumerate_binary_actions, run_suite, suite_passed

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BOUND = 3
EXIT_UNKNOWN = 4


class SpecError(ValueError):
    """Unparseable group/element specification."""


def parse_group_spec(spec: str) -> PermGroup:
    """`A5`, `S7`, or `gens:5:(1,2,3)(4,5);(1,2)`."""
    spec = spec.strip()
    if spec.startswith(("A", "S")) and spec[1:].isdigit():
        n = int(spec[1:])
        if n < 1:
            raise SpecError(f"bad degree in group spec: {spec!r}")
        return PermGroup.alternating(n) if spec[0] == "A" else PermGroup.symmetric(n)
    if spec.startswith("gens:"):
        parts = spec.split(":", 2)
        if len(parts) != 3:
            raise SpecError(f"bad generator spec: {spec!r}")
        try:
            degree = int(parts[1])
            gens = [from_cycles(degree, g) for g in parts[2].split(";") if g.strip()]
        except ValueError as exc:
            raise SpecError(str(exc)) from exc
        return PermGroup(degree, gens)
    raise SpecError(f"cannot parse group spec: {spec!r}")


def parse_subgroup_spec(G: PermGroup, spec: str) -> PermGroup:
    """Subgroup from generator syntax (or A_n/S_m shorthand), validated for
    containment in G."""
    spec = spec.strip()
    if spec in ("1", "triv", "trivial"):
        return PermGroup.trivial(G.degree)
    if spec.startswith("gens:"):
        H = parse_group_spec(spec)
    else:
        try:
            gens = [from_cycles(G.degree, g) for g in spec.split(";") if g.strip()]
        except ValueError as exc:
            raise SpecError(str(exc)) from exc
        H = PermGroup(G.degree, gens)
    if H.degree != G.degree or not G.is_subgroup(H):
        raise SpecError("subgroup spec is not contained in the group")
    return H


def _emit(doc, cfg: RunConfig) -> None:
    if cfg.output_format == "json":
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        text = _as_text(doc) + "\n"
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _as_text(doc, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(doc, dict):
        return "\n".join(f"{pad}{k}: " + (("\n" + _as_text(v, indent + 1))
                                          if isinstance(v, (dict, list)) else str(v))
                         for k, v in doc.items())
    if isinstance(doc, list):
        return "\n".join(_as_text(v, indent) if isinstance(v, (dict, list))
                         else f"{pad}- {v}" for v in doc)
    return f"{pad}{doc}"


def _action_from_flags(G, args, bounds):
    if getattr(args, "natural", False):
        return natural_action(G)
    if getattr(args, "regular", False):
        return regular_action(G, bounds)
    if getattr(args, "cosets", None):
        H = parse_subgroup_spec(G, args.cosets)
        return coset_action(G, H, bounds)
    raise SpecError("choose one of --natural, --regular, --cosets SUBGROUP")


def cmd_gamma(args, cfg: RunConfig) -> int:
    G = parse_group_spec(args.group)
    bounds = cfg.bounds
    if args.max_fixity:
        if args.order is None:
            raise SpecError("--max-fixity needs --order P")
        if args.action_subgroup:
            H = parse_subgroup_spec(G, args.action_subgroup)
            act = coset_action(G, H, bounds)
        else:
            act = natural_action(G)
        classes = max_fixity_classes(act, args.order, bounds=bounds)
        if not classes:
            raise SpecError(f"no classes of order {args.order}")
        cls = classes[0]
    else:
        if not args.class_rep:
            raise SpecError("give a class representative or --max-fixity")
        rep = from_cycles(G.degree, args.class_rep)
        if not G.contains(rep):
            raise SpecError("representative is not in the group")
        cls = rational_class(G, rep) if args.rational else class_of(G, rep)
    graph = build_gamma_rational(cls, bounds) if cls.rational else build_gamma(cls, bounds)
    doc = graph_summary(graph)
    if args.components:
        doc["component_count"] = len(doc["components"])
    _emit(doc, cfg)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot_export(graph, components=args.components))
    return EXIT_OK


def cmd_rc(args, cfg: RunConfig) -> int:
    G = parse_group_spec(args.group)
    act = _action_from_flags(G, args, cfg.bounds)
    report = rc_exact(act, cfg.bounds)
    _emit(report.to_json(), cfg)
    return EXIT_OK


def cmd_witness(args, cfg: RunConfig) -> int:
    G = parse_group_spec(args.group)
    H = parse_subgroup_spec(G, args.subgroup)
    act = coset_action(G, H, cfg.bounds)
    verdict = is_binary(act, bounds=cfg.bounds)
    _emit(verdict.to_json(), cfg)
    return EXIT_UNKNOWN if verdict.outcome == "unknown" else EXIT_OK


def cmd_enumerate(args, cfg: RunConfig) -> int:
    G = parse_group_spec(args.group)
    results = enumerate_binary_actions(G, cfg.bounds)
    doc = []
    for H, verdict in results:
        doc.append({
            "subgroup_order": H.order(),
            "generators": [g.cycle_string() for g in H.generators] or ["()"],
            "verdict": verdict.to_json(),
        })
    _emit(doc, cfg)
    if any(v.outcome == "unknown" for _, v in results):
        return EXIT_UNKNOWN
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    names = args.suite or ["paper"]
    try:
        results = run_suite(names, seed=cfg.seed, bounds=cfg.bounds)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    _emit([r.to_json() for r in results], cfg)
    return EXIT_OK if suite_passed(results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binact",
        description="conjugacy-class graphs, relational complexity and "
                    "binariness witnesses for permutation group actions")
    parser.add_argument("--config", help="key=value config file (or env BINACT_CONFIG)")
    parser.add_argument("--seed", type=int, help="seed for randomized checks")
    parser.add_argument("--workers", type=int, help="worker count (informational)")
    parser.add_argument("--format", choices=("json", "text"), dest="output_format")
    parser.add_argument("--output", dest="output_path", help="write output to a file")
    parser.add_argument("--bound", action="append", default=[], metavar="NAME=VALUE",
                        help="override a resource bound, e.g. exhaustive_omega=14")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", help="build a class graph and summarize it")
    p.add_argument("group")
    p.add_argument("class_rep", nargs="?", help="class representative in cycle notation")
    p.add_argument("--rational", action="store_true", help="use the rational class")
    p.add_argument("--order", type=int, help="element order for --max-fixity")
    p.add_argument("--max-fixity", action="store_true",
                   help="pick the maximal-fixity class of the given order")
    p.add_argument("--action", dest="action_subgroup",
                   help="subgroup spec: fixity measured on its coset action")
    p.add_argument("--components", action="store_true", help="color components in DOT")
    p.add_argument("--dot", help="write DOT output to a file")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("rc", help="exact relational complexity of an action")
    p.add_argument("group")
    p.add_argument("--natural", action="store_true")
    p.add_argument("--regular", action="store_true")
    p.add_argument("--cosets", help="subgroup spec")
    p.add_argument("--exact", action="store_true", default=True,
                   help="exhaustive computation (default)")
    p.set_defaults(func=cmd_rc)

    p = sub.add_parser("witness", help="decide binariness of a coset action")
    p.add_argument("group")
    p.add_argument("subgroup")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("enumerate", help="binary verdicts for every subgroup class")
    p.add_argument("group")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run named verification suites")
    p.add_argument("--suite", action="append", help="suite or check name (default: paper)")
    p.set_defaults(func=cmd_verify)
    return parser


def _load_config(args) -> RunConfig:
    cfg = RunConfig()
    path = args.config or os.environ.get("BINACT_CONFIG", "")
    overrides = {}
    if path:
        overrides.update(load_config_file(path))
    for item in args.bound:
        if "=" not in item:
            raise SpecError(f"bad --bound value: {item!r}")
        key, val = item.split("=", 1)
        overrides[key.strip()] = val.strip()
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.workers is not None:
        overrides["workers"] = args.workers
    if args.output_format:
        overrides["output_format"] = args.output_format
    if args.output_path:
        overrides["output_path"] = args.output_path
    return cfg.with_overrides(**overrides)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        cfg = _load_config(args)
        return args.func(args, cfg)
    except (SpecError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except BoundExceeded as exc:
        sys.stderr.write(f"resource bound exceeded: {exc}\n")
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())
