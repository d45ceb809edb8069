"""Command-line front end.

Exit codes: 0 success or stable, 1 unstable or oracle mismatch, 2 usage
or parse error, 3 budget exceeded or no verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .catalog import build_group, paper_subset
from .cayley import boundary_set, cayley_graph, export_dot, graph_components
from .groups import ElementSet, FiniteGroup, GroupError, parse_element, parse_subset
from .solver import BudgetExceeded, SolveBudget
from .stability import (
    BRUTE_FORCE_ORDER,
    InconclusiveError,
    brute_force_indices,
    is_stable_group,
    left_subset_indices,
    subset_indices,
)
from .witnesses import (
    WitnessError,
    cyclic_quotient_witness,
    find_cyclic_quotient_instances,
    quotient_order,
    verify_classification,
)

EXIT_OK = 0
EXIT_UNSTABLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    group_spec: str | None = None
    subset_spec: str | None = None
    side: str = "right"
    output: str = "text"
    budget_nodes: int | None = None
    budget_seconds: float | None = None
    workers: int = 1
    exhaustive: bool = False
    highlight: str | None = None
    all_subsets: bool = False
    normal: str | None = None
    g: str | None = None
    h: str | None = None

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "CliConfig":
        return cls(**{k: v for k, v in vars(ns).items() if k in cls.__dataclass_fields__})

    def budget(self) -> SolveBudget:
        nodes = SolveBudget().node_limit if self.budget_nodes is None else self.budget_nodes
        return SolveBudget(node_limit=nodes, time_limit=self.budget_seconds)


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _emit_json(data: dict) -> None:
    _emit(json.dumps(data, indent=2) + "\n")


def _group(cfg: CliConfig) -> FiniteGroup:
    if not cfg.group_spec:
        raise UsageError("--group is required")
    return build_group(cfg.group_spec)


def _subset(cfg: CliConfig, G: FiniteGroup) -> ElementSet:
    if not cfg.subset_spec:
        raise UsageError("--subset is required")
    if cfg.subset_spec.strip() == "paper":
        return paper_subset(cfg.group_spec, G)
    return parse_subset(G, cfg.subset_spec)


def _labels(G: FiniteGroup, s: ElementSet | int) -> list[str]:
    bits = s.bits if isinstance(s, ElementSet) else s
    return [G.labels[i] for i in range(G.order) if bits >> i & 1]


def _indices(G: FiniteGroup, A: ElementSet, side: str, budget: SolveBudget):
    if side == "left":
        return left_subset_indices(G, A, budget)
    return subset_indices(G, A, budget)


# ---------------------------------------------------------------------------
# commands


def cmd_indices(cfg: CliConfig) -> int:
    G = _group(cfg)
    A = _subset(cfg, G)
    rep = _indices(G, A, cfg.side, cfg.budget())
    # the left graph is the right graph of the opposite group
    H = G if cfg.side == "right" else G.opposite()
    S = boundary_set(H, A)
    components = len(graph_components(H, S))
    if cfg.output == "structured":
        _emit_json({
            "group": G.name, "order": G.order, "side": cfg.side,
            "subset": _labels(G, A), "boundary": _labels(G, S),
            "components": components, "lower": rep.lower, "upper": rep.upper,
            "witness_small": _labels(G, rep.witness_small),
            "witness_large": _labels(G, rep.witness_large),
            "stable": rep.stable,
        })
    else:
        _emit("\n".join([
            f"group: {G.name} (order {G.order})",
            f"side: {cfg.side}",
            f"subset: {G.format_set(A)}",
            f"boundary: {G.format_set(S)}",
            f"components: {components}",
            f"lower: {rep.lower}",
            f"upper: {rep.upper}",
            f"witness_small: {G.format_set(rep.witness_small)}",
            f"witness_large: {G.format_set(rep.witness_large)}",
            f"stable: {'yes' if rep.stable else 'no'}",
        ]) + "\n")
    return EXIT_OK


def cmd_stable(cfg: CliConfig) -> int:
    G = _group(cfg)
    designated = ()
    try:
        designated = (paper_subset(cfg.group_spec, G),)
    except GroupError:
        pass
    if cfg.subset_spec:
        designated = (_subset(cfg, G),)
    report = is_stable_group(G, cfg.budget(), workers=cfg.workers, exhaustive=cfg.exhaustive,
                             designated=designated, name=G.name)
    _emit(report.to_json(G) if cfg.output == "structured" else report.to_text(G))
    return EXIT_OK if report.stable else EXIT_UNSTABLE


def cmd_classify(cfg: CliConfig) -> int:
    run = verify_classification(cfg.budget(), workers=cfg.workers)
    _emit(run.to_json() if cfg.output == "structured" else run.to_text())
    if run.budget_exceeded:
        return EXIT_BUDGET
    return EXIT_OK if run.all_pass else EXIT_UNSTABLE


def cmd_witness(cfg: CliConfig) -> int:
    G = _group(cfg)
    if cfg.normal is None:
        if cfg.g is not None or cfg.h is not None:
            raise UsageError("--g and --h need --normal")
        inst = next(find_cyclic_quotient_instances(G), None)
        if inst is None:
            raise WitnessError("no-instance", f"{G.name} has no subgroup meeting the preconditions")
        H, g, h = inst
    else:
        H = parse_subset(G, cfg.normal)
        if cfg.g is None:
            raise UsageError("--g is required with --normal")
        g = parse_element(G, cfg.g)
        h = parse_element(G, cfg.h) if cfg.h is not None else min(x for x in H if x != 0)
    A, I = cyclic_quotient_witness(G, H, g, h)
    n = quotient_order(G, H, g)
    rep = subset_indices(G, A, cfg.budget())
    if cfg.output == "structured":
        _emit_json({
            "group": G.name, "normal": _labels(G, H), "g": G.labels[g], "h": G.labels[h], "n": n,
            "subset": _labels(G, A), "dominating": _labels(G, I),
            "lower": rep.lower, "upper": rep.upper,
        })
    else:
        _emit("\n".join([
            f"group: {G.name} (order {G.order})",
            f"normal: {G.format_set(H)}",
            f"g: {G.labels[g]}  h: {G.labels[h]}  n: {n}",
            f"subset: {G.format_set(A)}",
            f"dominating: {G.format_set(I)}",
            f"lower: {rep.lower}",
            f"upper: {rep.upper}",
        ]) + "\n")
    return EXIT_OK if rep.lower < rep.upper else EXIT_UNSTABLE


def _highlight(cfg: CliConfig, G: FiniteGroup, A: ElementSet) -> int:
    if not cfg.highlight:
        return 0
    key = cfg.highlight.strip()
    if key in ("witness-small", "witness-large"):
        rep = _indices(G, A, cfg.side, cfg.budget())
        return (rep.witness_small if key == "witness-small" else rep.witness_large).bits
    return parse_subset(G, key).bits


def cmd_export(cfg: CliConfig) -> int:
    G = _group(cfg)
    A = _subset(cfg, G)
    H = G if cfg.side == "right" else G.opposite()
    graph = cayley_graph(H, boundary_set(H, A))
    _emit(export_dot(graph, _highlight(cfg, G, A)))
    return EXIT_OK


def _oracle_subsets(G: FiniteGroup) -> list[ElementSet]:
    # every subset containing the identity
    out = []
    others = range(1, G.order)
    for k in range(G.order):
        for combo in combinations(others, k):
            out.append(G.subset((0, *combo)))
    return out


def cmd_oracle(cfg: CliConfig) -> int:
    G = _group(cfg)
    if G.order > BRUTE_FORCE_ORDER:
        raise UsageError(f"oracle is limited to order {BRUTE_FORCE_ORDER}, got {G.order}")
    if cfg.all_subsets:
        subsets = _oracle_subsets(G)
    else:
        subsets = [_subset(cfg, G)]
    budget = cfg.budget()
    mismatches = []
    for A in subsets:
        fast = _indices(G, A, cfg.side, budget)
        slow = brute_force_indices(G, A, cfg.side)
        if (fast.lower, fast.upper) != (slow.lower, slow.upper):
            mismatches.append((A, fast, slow))
    if cfg.output == "structured":
        _emit_json({
            "group": G.name, "side": cfg.side, "checked": len(subsets), "agree": not mismatches,
            "mismatches": [
                {"subset": _labels(G, A), "solver": [f.lower, f.upper], "brute_force": [s.lower, s.upper]}
                for A, f, s in mismatches
            ],
        })
    else:
        lines = [f"group: {G.name}", f"checked: {len(subsets)}"]
        for A, f, s in mismatches:
            lines.append(f"mismatch: {G.format_set(A)} solver ({f.lower}, {f.upper}) "
                         f"brute force ({s.lower}, {s.upper})")
        lines.append("agree" if not mismatches else f"disagree: {len(mismatches)}")
        _emit("\n".join(lines) + "\n")
    return EXIT_OK if not mismatches else EXIT_UNSTABLE


COMMANDS = {
    "indices": cmd_indices,
    "stable": cmd_stable,
    "classify": cmd_classify,
    "witness": cmd_witness,
    "export": cmd_export,
    "oracle": cmd_oracle,
}


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stablegroups",
                                     description="Subset indices and stability of finite groups.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "structured"), default="text")
    common.add_argument("--budget-nodes", type=int, default=None, help="search nodes per solve")
    common.add_argument("--budget-seconds", type=float, default=None, help="wall clock per solve")
    grp = argparse.ArgumentParser(add_help=False)
    grp.add_argument("--group", dest="group_spec", required=True,
                     help="catalog name such as cyclic:9, a product like cyclic:2xcyclic:4, or a table file")
    sub = argparse.ArgumentParser(add_help=False)
    sub.add_argument("--subset", dest="subset_spec", help="comma-separated labels, or 'paper'")
    sub.add_argument("--side", choices=("right", "left"), default="right")

    cmds = parser.add_subparsers(dest="command", required=True)
    cmds.add_parser("indices", parents=[common, grp, sub], help="lower and upper index of a subset")
    p = cmds.add_parser("stable", parents=[common, grp], help="decide group stability")
    p.add_argument("--subset", dest="subset_spec", help="designated subset for large groups")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--exhaustive", action="store_true", help="full scan for orders 17..32")
    p = cmds.add_parser("classify", parents=[common], help="verify the stable group classification")
    p.add_argument("--workers", type=int, default=1)
    p = cmds.add_parser("witness", parents=[common, grp], help="cyclic quotient instability witness")
    p.add_argument("--normal", help="normal subgroup H as element labels")
    p.add_argument("--g", help="coset generator g")
    p.add_argument("--h", help="removed element h of H")
    p = cmds.add_parser("export", parents=[common, grp, sub], help="DOT of the Cayley graph")
    p.add_argument("--highlight", help="labels, witness-small or witness-large")
    p = cmds.add_parser("oracle", parents=[common, grp, sub], help="compare with brute force")
    p.add_argument("--all-subsets", action="store_true", help="every subset containing the identity")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    cfg = CliConfig.from_args(ns)
    try:
        return COMMANDS[cfg.command](cfg)
    except (BudgetExceeded, InconclusiveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, GroupError) as exc:
        code = getattr(exc, "code", None)
        prefix = f"error [{code}]" if isinstance(code, str) else "error"
        print(f"{prefix}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
