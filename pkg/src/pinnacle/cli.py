"""Command-line front end.

Subcommands: ``pinnacles``, ``enumerate``, ``realize``, ``transform``,
``poset``, ``count``, ``reduce``, ``verify``.  Graphs are read from text
files (``n m`` header, then 1-based edge lines); labelings are passed as
comma-separated label lists in vertex order.  Output is aligned text by
default or a key-sorted JSON report with ``--json``.  Exit codes: 0 on
success, 1 on domain errors, 2 on usage errors.  The brute-force guard
defaults to ``PINNACLE_MAX_N`` from the environment (else 10).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Any

from .constructions import (
    complete_bipartite_labeling,
    cycle_labeling,
    path_labeling,
    realize_any_set,
)
from .counting import (
    count_from_bottom,
    count_labelings_cycle_max_set,
    cycle_table,
    path_table,
    pinn_closed_form,
    pinn_complete_bipartite,
)
from .families import parse_family
from .graphs import Labeling, PinnacleSet, pinnacles
from .oracle import enumerate_pinnacle_sets, find_labeling
from .posets import bottom_elements, build_poset, lattice_report
from .reductions import (
    DecisionInstance,
    reduce_to_pinnacle_existence,
    reduce_to_pinnacle_size,
    verify_existence_certificate,
    verify_size_certificate,
)
from .textio import emit_hasse_dot, format_graph, parse_graph_file
from .transforms import (
    dominance_steps,
    drop_min_pinnacle,
    swap_down,
    swap_up,
)

__all__ = ["RunReport", "main"]


@dataclass
class RunReport:
    """Echo of one CLI invocation: what ran, on what, and what came out."""

    command: str
    inputs: dict[str, Any]
    result: dict[str, Any]
    elapsed_ms: float

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "elapsed_ms": self.elapsed_ms,
        }
        return json.dumps(payload, sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        for key in sorted(self.inputs):
            lines.append(f"input.{key}: {_plain(self.inputs[key])}")
        lines.extend(_render("result", self.result))
        lines.append(f"elapsed_ms: {self.elapsed_ms:.2f}")
        return "\n".join(lines)


def _plain(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_plain(v) for v in value) + "]"
    return str(value)


def _render(prefix: str, value: Any) -> list[str]:
    if isinstance(value, dict):
        out: list[str] = []
        for key in sorted(value, key=str):
            out.extend(_render(f"{prefix}.{key}", value[key]))
        return out
    return [f"{prefix}: {_plain(value)}"]


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError:
        raise ValueError(f"{what} must be a comma-separated integer list: {text!r}") from None


def _label_set(text: str) -> PinnacleSet:
    return PinnacleSet(_parse_ints(text, "label set"))


def _labeling(text: str) -> Labeling:
    return Labeling(_parse_ints(text, "labeling"))


def _set_out(s: PinnacleSet) -> list[int]:
    return list(s)


def _labeling_out(lam: Labeling) -> list[int]:
    return list(lam.labels)


def _default_guard() -> int:
    return int(os.environ.get("PINNACLE_MAX_N", "10"))


def _guard(args: argparse.Namespace) -> int:
    return args.max_n if args.max_n is not None else _default_guard()


# --- subcommand handlers; each returns a result payload dict ---


def _cmd_pinnacles(args: argparse.Namespace) -> dict[str, Any]:
    g = parse_graph_file(args.graph)
    lam = _labeling(args.labels)
    return {"pinnacle_set": _set_out(pinnacles(g, lam))}


def _cmd_enumerate(args: argparse.Namespace) -> dict[str, Any]:
    g = parse_graph_file(args.graph)
    catalog = enumerate_pinnacle_sets(g, max_n_guard=_guard(args))
    return {
        "total": catalog.total,
        "by_size": {
            str(k): [_set_out(s) for s in catalog.by_size[k]] for k in catalog.sizes()
        },
    }


def _cmd_realize(args: argparse.Namespace) -> dict[str, Any]:
    target = _label_set(args.set)
    if args.family is not None:
        family = parse_family(args.family)
        kind = family[0]
        if kind == "cycle":
            lam = cycle_labeling(family[1], target)
        elif kind == "path":
            lam = path_labeling(family[1], target)
        elif kind == "complete_bipartite":
            m, n = family[1], family[2]
            if not target or target != PinnacleSet.interval(target[0], m + n):
                raise ValueError(
                    f"{target} is not a pinnacle set of the complete bipartite "
                    f"graph with sides {m}, {n}"
                )
            lam = complete_bipartite_labeling(m, n, target[0])
        elif kind == "complete":
            if target != PinnacleSet((family[1],)):
                raise ValueError(
                    f"the complete graph on {family[1]} vertices only realizes "
                    f"{{{family[1]}}}"
                )
            lam = Labeling.identity(family[1])
        else:
            raise ValueError(f"unknown family {args.family!r}")
        return {"labeling": _labeling_out(lam), "pinnacle_set": _set_out(target)}
    if args.graph is not None:
        g = parse_graph_file(args.graph)
        lam = find_labeling(g, target, max_n_guard=_guard(args))
        if lam is None:
            return {"labeling": None, "realizable": False}
        return {
            "labeling": _labeling_out(lam),
            "realizable": True,
            "pinnacle_set": _set_out(target),
        }
    inst = realize_any_set(target, shape=args.build)
    return {
        "graph": format_graph(inst.graph),
        "labeling": _labeling_out(inst.labeling),
        "pinnacle_set": _set_out(inst.claimed),
    }


def _cmd_transform(args: argparse.Namespace) -> dict[str, Any]:
    g = parse_graph_file(args.graph)
    lam = _labeling(args.labels)
    if args.swap_up is not None:
        new_lam, pins = swap_up(g, lam, args.swap_up)
        return {"labeling": _labeling_out(new_lam), "pinnacle_set": _set_out(pins)}
    if args.swap_down is not None:
        moved = swap_down(g, lam, args.swap_down)
        if moved is None:
            return {"applicable": False}
        new_lam, pins = moved
        return {
            "applicable": True,
            "labeling": _labeling_out(new_lam),
            "pinnacle_set": _set_out(pins),
        }
    if args.target is not None:
        steps = dominance_steps(g, lam, _label_set(args.target))
        final = steps[-1][0] if steps else lam
        return {
            "swaps": len(steps),
            "trace": [_set_out(p) for _, p in steps],
            "labeling": _labeling_out(final),
        }
    new_lam = drop_min_pinnacle(g, lam)
    return {
        "labeling": _labeling_out(new_lam),
        "pinnacle_set": _set_out(pinnacles(g, new_lam)),
    }


def _cmd_poset(args: argparse.Namespace) -> dict[str, Any]:
    g = parse_graph_file(args.graph)
    source = "oracle" if args.source == "oracle" else parse_family(args.source)
    poset = build_poset(g, args.k, source=source, max_n_guard=_guard(args))
    if args.dot:
        return {"text_block": emit_hasse_dot(poset)}
    report = lattice_report(poset)
    return {
        "elements": [_set_out(s) for s in poset.elements],
        "covers": [list(c) for c in poset.covers],
        "bottoms": [_set_out(s) for s in bottom_elements(poset)],
        "report": {
            "is_join_semilattice": report.is_join_semilattice,
            "has_minimum": report.has_minimum,
            "is_lattice": report.is_lattice,
            "is_distributive": report.is_distributive,
        },
    }


def _cmd_count(args: argparse.Namespace) -> dict[str, Any]:
    if args.table is not None:
        if args.table == "cycle":
            rows, first_n = cycle_table(), 3
        else:
            rows, first_n = path_table(), 2
        max_k = len(rows[0])
        if args.csv:
            lines = ["n," + ",".join(f"k{j}" for j in range(1, max_k + 1))]
            lines += [
                f"{first_n + i}," + ",".join(map(str, row))
                for i, row in enumerate(rows)
            ]
        else:
            cells = [["n"] + [f"k={j}" for j in range(1, max_k + 1)]]
            cells += [
                [str(first_n + i)] + [str(c) for c in row]
                for i, row in enumerate(rows)
            ]
            widths = [max(len(r[c]) for r in cells) for c in range(len(cells[0]))]
            lines = [
                "  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in cells
            ]
        text = "\n".join(lines) + "\n"
        return {
            "family": args.table,
            "rows": {str(first_n + i): row for i, row in enumerate(rows)},
            "text_block": text,
        }
    if args.family is not None:
        value = pinn_closed_form(args.family, args.n, args.k)
        return {"family": args.family, "n": args.n, "k": args.k, "count": value}
    if args.bipartite is not None:
        m, n = _parse_ints(args.bipartite, "side sizes")
        return {"m": m, "n": n, "count": pinn_complete_bipartite(m, n)}
    if args.from_bottom is not None:
        bottom = _label_set(args.from_bottom)
        return {"bottom": _set_out(bottom), "count": count_from_bottom(bottom)}
    n, k = _parse_ints(args.cycle_top_labelings, "n,k")
    return {"n": n, "k": k, "labelings": count_labelings_cycle_max_set(n, k)}


def _cmd_reduce(args: argparse.Namespace) -> dict[str, Any]:
    g = parse_graph_file(args.graph)
    inst = DecisionInstance(kind="independent_set", graph=g, k=args.k)
    if args.to == "size":
        out = reduce_to_pinnacle_size(inst)
        return {"kind": out.kind, "k": out.k, "graph": format_graph(out.graph)}
    out = reduce_to_pinnacle_existence(inst)
    return {
        "kind": out.kind,
        "target_set": _set_out(out.target_set),
        "graph": format_graph(out.graph),
    }


def _cmd_verify(args: argparse.Namespace) -> dict[str, Any]:
    g = parse_graph_file(args.graph)
    if args.mode == "size":
        witness = [v - 1 for v in _parse_ints(args.witness, "witness")]
        ok = verify_size_certificate(g, args.k, witness)
    else:
        ok = verify_existence_certificate(g, _label_set(args.set), _labeling(args.labels))
    return {"accepted": ok}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pinnacle",
        description="Pinnacle sets of vertex-labeled graphs: compute, enumerate, "
        "construct, transform, order, and count.",
    )
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.set_defaults(handler=handler)
        return p

    p = add("pinnacles", _cmd_pinnacles, "pinnacle set of a labeled graph")
    p.add_argument("graph", help="graph file")
    p.add_argument("--labels", required=True, help="labels in vertex order, e.g. 5,2,3,1,4")

    p = add("enumerate", _cmd_enumerate, "all pinnacle sets, by exhaustive search")
    p.add_argument("graph")
    p.add_argument("--max-n", type=int, default=None, help="brute-force guard override")

    p = add("realize", _cmd_realize, "produce a labeling achieving a target set")
    p.add_argument("--set", required=True, help="target pinnacle set, e.g. 3,5,8")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--family", help="cycle:N, path:N, complete:N, complete_bipartite:M,N")
    which.add_argument("--graph", help="graph file (backtracking search)")
    which.add_argument(
        "--build",
        choices=["forest", "tree"],
        help="construct a graph realizing the set from scratch",
    )
    p.add_argument("--max-n", type=int, default=None)

    p = add("transform", _cmd_transform, "rewrite a labeling to a new pinnacle set")
    p.add_argument("graph")
    p.add_argument("--labels", required=True)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--swap-up", type=int, metavar="P", help="promote pinnacle P to P+1")
    which.add_argument("--swap-down", type=int, metavar="P", help="demote pinnacle P to P-1")
    which.add_argument("--target", help="walk the pinnacle set up to this set")
    which.add_argument("--drop-min", action="store_true", help="drop the smallest pinnacle")

    p = add("poset", _cmd_poset, "dominance poset of size-k pinnacle sets")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--source", default="oracle", help="'oracle' or a family like cycle:8")
    p.add_argument("--dot", action="store_true", help="emit the cover diagram as DOT")
    p.add_argument("--max-n", type=int, default=None)

    p = add("count", _cmd_count, "closed-form counts and tables")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--family", choices=["cycle", "path"], help="per-size count")
    which.add_argument("--table", choices=["cycle", "path"], help="full count table")
    which.add_argument("--bipartite", metavar="M,N", help="number of pinnacle sets of K_{M,N}")
    which.add_argument("--from-bottom", metavar="SET", help="sets above a unique bottom")
    which.add_argument(
        "--cycle-top-labelings",
        metavar="N,K",
        help="labelings of the N-cycle realizing the top-K block",
    )
    p.add_argument("--n", type=int, help="family size for --family")
    p.add_argument("-k", type=int, default=None, help="set size (omit for the total)")
    p.add_argument("--csv", action="store_true", help="CSV output for --table")

    p = add("reduce", _cmd_reduce, "map an independent-set instance to a pinnacle problem")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--to", choices=["size", "existence"], required=True)

    p = add("verify", _cmd_verify, "check a certificate in polynomial time")
    p.add_argument("mode", choices=["size", "existence"])
    p.add_argument("graph")
    p.add_argument("-k", type=int, help="size threshold (size mode)")
    p.add_argument("--witness", help="1-based vertex list (size mode)")
    p.add_argument("--set", help="claimed pinnacle set (existence mode)")
    p.add_argument("--labels", help="certificate labeling (existence mode)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "count" and args.family is not None and args.n is None:
        parser.error("--family requires --n")
    if args.command == "verify":
        if args.mode == "size" and (args.k is None or args.witness is None):
            parser.error("verify size requires -k and --witness")
        if args.mode == "existence" and (args.set is None or args.labels is None):
            parser.error("verify existence requires --set and --labels")
    start = time.perf_counter()
    try:
        result = args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    elapsed = (time.perf_counter() - start) * 1000.0
    inputs = {
        key: value
        for key, value in vars(args).items()
        if key not in ("handler", "command", "json") and value is not None
    }
    report = RunReport(
        command=args.command, inputs=inputs, result=result, elapsed_ms=elapsed
    )
    if args.json:
        print(report.to_json())
    elif "text_block" in result:
        print(result["text_block"], end="")
    else:
        print(report.to_text())
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
