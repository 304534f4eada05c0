"""Command-line front end.

Subcommands: sample, solve, components, mc, sweep, gadget, choosability,
gsearch, bounds. A JSON config file (--config) may supply any option value;
explicit flags override it. Seeds are mandatory wherever randomness is
consumed.

Exit codes: 0 success, 1 usage error, 2 input parse error, 3 solver cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import bounds as bounds_mod
from .choosability import choice_number, g_search, is_k_choosable
from .errors import (
    AssignmentParseError,
    CapExceededError,
    ComponentTooLargeError,
    GraphParseError,
    RandlistsError,
)
from .experiments import (
    CSV_HEADER,
    component_experiment,
    gadget_experiment,
    mc_colourable,
    sweep,
)
from .gadget import load_gadget_json
from .graphs import (
    ForbiddenSpec,
    Graph,
    complete_multipartite,
    cycle_power,
    disjoint_cliques,
)
from .graphio import load_edge_list
from .lists import ListAssignment, sample_assignment
from .rng import Seed
from .solver import is_colourable, minimal_witness

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_CAP = 3

# filled in after the config merge, so config values beat them; --cap is
# handled per command (solver cap 64, choosability cap 8). gsearch's --stream
# is a path, so the trial-index default applies only where it means an index.
_DEFAULTS = {
    "sample": {"stream": 0},
    "solve": {"stream": 0},
    "components": {"workers": 1},
    "mc": {"workers": 1},
    "sweep": {"workers": 1},
    "gadget": {"workers": 1},
    "gsearch": {"forbidden": ""},
}
SOLVER_CAP = 64
CHOOSE_CAP = 8


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        raise UsageError(message)


def parse_graph_spec(spec: str) -> Graph:
    """cyclepow:n:r | cliques:n:delta | multipartite:s:r | file:<path> |
    gadget:<json-path>"""
    kind, _, rest = spec.partition(":")
    try:
        if kind == "cyclepow":
            n, r = (int(x) for x in rest.split(":"))
            return cycle_power(n, r)
        if kind == "cliques":
            n, delta = (int(x) for x in rest.split(":"))
            return disjoint_cliques(n, delta)
        if kind == "multipartite":
            s, r = (int(x) for x in rest.split(":"))
            return complete_multipartite(s, r)
        if kind == "file":
            return load_edge_list(rest)
        if kind == "gadget":
            inst, _ = load_gadget_json(rest)
            return inst.graph
    except (ValueError, OSError) as exc:
        raise GraphParseError(f"bad graph spec {spec!r}: {exc}") from exc
    raise UsageError(f"unknown graph spec kind {kind!r}")


def build_parser() -> _Parser:
    top = _Parser(prog="randlists", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON file with default option values")
        p.add_argument("--seed", type=lambda s: int(s, 0),
                       help="master seed (64-bit int)")
        p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("sample", help="sample one list-assignment and dump it")
    p.add_argument("--n", type=int, help="vertex count")
    p.add_argument("--graph", help="graph spec (alternative source of n)")
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--stream", type=int, help="trial index (default 0)")
    common(p)

    p = sub.add_parser("solve", help="decide colourability of one instance")
    p.add_argument("--graph")
    p.add_argument("--assignment", help="assignment file (v: c1 ... ck)")
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--stream", type=int)
    p.add_argument("--cap", type=int)
    p.add_argument("--emit-witness", action="store_true")
    common(p)

    p = sub.add_parser("components", help="max dangerous-component experiment")
    p.add_argument("--graph")
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--workers", type=int)
    common(p)

    p = sub.add_parser("mc", help="Monte Carlo colourability estimate")
    p.add_argument("--graph")
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--cap", type=int)
    common(p)

    p = sub.add_parser("sweep", help="mc across several palette sizes")
    p.add_argument("--graph")
    p.add_argument("--k", type=int)
    p.add_argument("--m-values", help="comma-separated ascending palette sizes")
    p.add_argument("--trials", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--cap", type=int)
    p.add_argument("--g", type=int,
                   help="attach the forbidden-family threshold values for this g")
    common(p)

    p = sub.add_parser("gadget", help="gadget experiment vs the exact formula")
    p.add_argument("--spec", help="gadget JSON path")
    p.add_argument("--m", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--lenient", action="store_true",
                   help="report 3-sigma violations instead of failing")
    common(p)

    p = sub.add_parser("choosability", help="choice number / k-choosability")
    p.add_argument("--graph")
    p.add_argument("--k", type=int, help="test this k only (else find ch)")
    p.add_argument("--cap", type=int)
    common(p)

    p = sub.add_parser("gsearch", help="scan a graph6 stream for counterexamples")
    p.add_argument("--forbidden",
                   help="comma-separated, e.g. clique:3,cycle:5 (empty = none)")
    p.add_argument("--k", type=int)
    p.add_argument("--stream", help="graph6 file, or - for stdin")
    p.add_argument("--cap", type=int)
    common(p)

    p = sub.add_parser("bounds", help="evaluate a closed-form quantity")
    p.add_argument("--id")
    p.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")
    common(p)

    return top


def _apply_config(args: argparse.Namespace) -> None:
    if getattr(args, "config", None):
        with open(args.config, "r", encoding="utf-8") as fh:
            config = json.load(fh)
        if not isinstance(config, dict):
            raise UsageError("--config must hold a JSON object")
        for key, value in config.items():
            attr = key.replace("-", "_")
            if hasattr(args, attr) and getattr(args, attr) in (None, [], False):
                setattr(args, attr, value)
    for attr, default in _DEFAULTS.get(args.command, {}).items():
        if getattr(args, attr) is None:
            setattr(args, attr, default)


def _need(args, *names) -> None:
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise UsageError(f"{args.command} requires {flags}")


def _require_seed(args) -> int:
    if args.seed is None:
        raise UsageError("--seed is required (no silent entropy)")
    return int(args.seed)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_sample(args) -> int:
    master = _require_seed(args)
    _need(args, "k", "m")
    if args.n is not None:
        n = int(args.n)
    elif args.graph:
        n = parse_graph_spec(args.graph).n
    else:
        raise UsageError("sample needs --n or --graph")
    l = sample_assignment(n, int(args.k), int(args.m), Seed(master, int(args.stream)))
    _emit(l.dump(), args.out)
    return EXIT_OK


def _cmd_solve(args) -> int:
    _need(args, "graph")
    g = parse_graph_spec(args.graph)
    if args.assignment:
        _need(args, "k", "m")
        with open(args.assignment, "r", encoding="utf-8") as fh:
            l = ListAssignment.parse(fh.read(), int(args.k), int(args.m))
        if l.n != g.n:
            raise AssignmentParseError(
                f"assignment covers {l.n} vertices, graph has {g.n}"
            )
    else:
        _need(args, "k", "m")
        master = _require_seed(args)
        l = sample_assignment(g.n, int(args.k), int(args.m),
                              Seed(master, int(args.stream)))
    cap = int(args.cap) if args.cap is not None else SOLVER_CAP
    ok, colouring = is_colourable(g, l, cap=cap)
    result = {
        "n": g.n,
        "colourable": ok,
        "colouring": (
            {str(v): c for v, c in sorted(colouring.assignment.items())}
            if colouring
            else None
        ),
    }
    if args.emit_witness and not ok:
        witness = minimal_witness(g, l, cap=cap)
        result["witness"] = witness.to_json_dict()
    _emit(json.dumps(result, indent=2) + "\n", args.out)
    return EXIT_OK


def _cmd_components(args) -> int:
    _need(args, "graph", "k", "m", "trials")
    g = parse_graph_spec(args.graph)
    exp = component_experiment(
        g, int(args.k), int(args.m), int(args.trials), _require_seed(args),
        workers=int(args.workers), label=args.graph,
    )
    _emit(json.dumps(exp.to_json_dict(), indent=2) + "\n", args.out)
    return EXIT_OK


def _cmd_mc(args) -> int:
    _need(args, "graph", "k", "m", "trials")
    g = parse_graph_spec(args.graph)
    record = mc_colourable(
        g, int(args.k), int(args.m), int(args.trials), _require_seed(args),
        workers=int(args.workers),
        cap=int(args.cap) if args.cap is not None else SOLVER_CAP,
        label=args.graph,
    )
    _emit(CSV_HEADER + "\n" + record.csv_row() + "\n", args.out)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    _need(args, "graph", "k", "m_values", "trials")
    g = parse_graph_spec(args.graph)
    if isinstance(args.m_values, list):
        m_values = [int(x) for x in args.m_values]
    else:
        try:
            m_values = [int(x) for x in str(args.m_values).split(",") if x]
        except ValueError as exc:
            raise UsageError(f"bad --m-values: {exc}")
    result = sweep(
        g, int(args.k), m_values, int(args.trials), _require_seed(args),
        workers=int(args.workers),
        cap=int(args.cap) if args.cap is not None else SOLVER_CAP,
        label=args.graph,
        g_threshold=int(args.g) if args.g is not None else None,
    )
    comment = "c thresholds " + json.dumps(result.thresholds, sort_keys=True)
    _emit(result.to_csv() + comment + "\n", args.out)
    return EXIT_OK


def _cmd_gadget(args) -> int:
    _need(args, "spec", "m", "trials")
    inst, k = load_gadget_json(args.spec)
    exp = gadget_experiment(
        inst, k, int(args.m), int(args.trials), _require_seed(args),
        workers=int(args.workers), strict=not args.lenient,
    )
    _emit(json.dumps(exp.to_json_dict(), indent=2) + "\n", args.out)
    return EXIT_OK


def _cmd_choosability(args) -> int:
    _need(args, "graph")
    g = parse_graph_spec(args.graph)
    cap = int(args.cap) if args.cap is not None else CHOOSE_CAP
    if args.k is not None:
        report = is_k_choosable(g, int(args.k), cap=cap)
        out = {
            "n": g.n,
            "k": int(args.k),
            "choosable": report.choosable,
            "universe": report.universe,
            "bad_assignment": (
                [list(l) for l in report.bad_assignment.lists]
                if report.bad_assignment
                else None
            ),
        }
    else:
        out = {"n": g.n, "choice_number": choice_number(g, cap=cap)}
    _emit(json.dumps(out, indent=2) + "\n", args.out)
    return EXIT_OK


def _cmd_gsearch(args) -> int:
    _need(args, "k", "stream")
    specs = [
        ForbiddenSpec.parse(tok)
        for tok in str(args.forbidden).split(",")
        if tok.strip()
    ]
    cap = int(args.cap) if args.cap is not None else CHOOSE_CAP
    if args.stream == "-":
        report = g_search(specs, int(args.k), sys.stdin, cap=cap)
    else:
        with open(args.stream, "r", encoding="ascii") as fh:
            report = g_search(specs, int(args.k), fh, cap=cap)
    _emit(json.dumps(report.to_json_dict(), indent=2) + "\n", args.out)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    _need(args, "id")
    params: dict[str, float] = {}
    for tok in args.param:
        name, _, value = tok.partition("=")
        if not value:
            raise UsageError(f"bad --param {tok!r}, expected NAME=VALUE")
        params[name.strip()] = float(value)
    fid = args.id
    flags: list[str] = []
    if fid in bounds_mod.REGISTRY:
        order = bounds_mod.evaluate_order(fid, **params)
        _emit(json.dumps(order.to_json_dict()) + "\n", args.out)
        return EXIT_OK
    ints = {k: int(v) for k, v in params.items()}
    if fid == "threshold_general":
        value = bounds_mod.threshold_general(bounds_mod.ThresholdQuery(**ints))._asdict()
    elif fid == "threshold_hfree":
        value = bounds_mod.threshold_hfree(bounds_mod.ThresholdQuery(**ints))._asdict()
    elif fid == "component_tail_bound":
        value = bounds_mod.component_tail_bound(
            ints["n"], ints["delta"], ints["k"], ints["m"], params["a"]
        )
    elif fid == "gadget_probability":
        gp = bounds_mod.gadget_probability(
            ints["n"], ints["delta"], ints["k"], ints["m"], ints["d"],
            ints["order_g0"],
        )
        value = {
            "q_copy": float(gp.q_copy),
            "p_bad_exists": float(gp.p_bad_exists),
            "colourable_upper": float(gp.colourable_upper),
        }
        flags.append("exact-rational" if gp.exact else "high-precision-float")
    elif fid == "witness_term_ratio":
        value = bounds_mod.witness_term_ratio(
            ints["n"], ints["delta"], ints["k"], ints["m"], ints["i"]
        )._asdict()
    elif fid == "integral_bound_check":
        q = bounds_mod.IntegralQuery(
            s=params["s"], n=params["n"], alpha=params["alpha"], beta=params["beta"]
        )
        value = bounds_mod.integral_bound_check(q)._asdict()
    else:
        known = sorted(
            {"threshold_general", "threshold_hfree", "component_tail_bound",
             "gadget_probability", "witness_term_ratio", "integral_bound_check"}
            | set(bounds_mod.REGISTRY)
        )
        raise UsageError(f"unknown bound id {fid!r}; known: {', '.join(known)}")
    _emit(
        json.dumps({"id": fid, "params": params, "value": value, "flags": flags})
        + "\n",
        args.out,
    )
    return EXIT_OK


_HANDLERS = {
    "sample": _cmd_sample,
    "solve": _cmd_solve,
    "components": _cmd_components,
    "mc": _cmd_mc,
    "sweep": _cmd_sweep,
    "gadget": _cmd_gadget,
    "choosability": _cmd_choosability,
    "gsearch": _cmd_gsearch,
    "bounds": _cmd_bounds,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _apply_config(args)
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphParseError, AssignmentParseError, json.JSONDecodeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ComponentTooLargeError, CapExceededError) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (RandlistsError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
