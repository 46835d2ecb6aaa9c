"""Batch command line front end.

Every subcommand writes machine-readable output to stdout (JSON by default,
exact rationals as "num/den" strings) and is deterministic given its flags:
identical invocations produce byte-identical output.  Exit codes: 0 success,
1 computation error (caps, infeasible parameters), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import closedforms, montecarlo, search
from .distribution import ForestDistribution, format_fraction
from .engine import brute_force_distribution, forest_polynomial, single_component_probability, expected_components
from .errors import ForestBuilderError
from .families import (
    balanced_bipartite_plus_edge,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    gnm_random_graph,
    path_graph,
    random_regular_graph,
    star_graph,
)
from .graph6 import parse_graph6, serialize_graph6
from .graphs import Graph, cheeger_constant, parse_edge_list
from .search import enumerate_connected_graphs, enumerate_trees


class _UsageError(Exception):
    pass


class _Once(argparse.Action):
    """Store action that rejects repeated occurrences of the same flag."""

    def __call__(self, parser, namespace, values, option_string=None):
        seen = getattr(namespace, "_seen_flags", None)
        if seen is None:
            seen = set()
            setattr(namespace, "_seen_flags", seen)
        if self.dest in seen:
            parser.error(f"duplicate flag {option_string}")
        seen.add(self.dest)
        setattr(namespace, self.dest, values)


_FAMILIES = ["kn", "kst", "multipartite", "path", "cycle", "star", "plus-edge", "gnm", "regular"]


def _add_source_flags(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--g6", action=_Once, help="graph6 string")
    group.add_argument("--edges", action=_Once, metavar="FILE",
                       help="edge list file: first line 'n m', then m lines 'u v'")
    group.add_argument("--family", action=_Once, choices=_FAMILIES)
    sub.add_argument("--n", type=int, action=_Once,
                     help="kn/path/cycle: vertices; star: leaves; gnm/regular: vertices")
    sub.add_argument("--s", type=int, action=_Once, help="kst: first part size")
    sub.add_argument("--t", type=int, action=_Once, help="kst: second part size")
    sub.add_argument("--k", type=int, action=_Once, help="plus-edge: part parameter k")
    sub.add_argument("--m", type=int, action=_Once, help="gnm: edge count")
    sub.add_argument("--d", type=int, action=_Once, help="regular: degree")
    sub.add_argument("--parts", action=_Once, help="multipartite: sizes, e.g. 3,3,3")
    sub.add_argument("--graph-seed", type=int, action=_Once,
                     help="seed for gnm/regular families")


def _need(ns: argparse.Namespace, *names: str) -> list[int]:
    values = []
    for name in names:
        value = getattr(ns, name.replace("-", "_"))
        if value is None:
            raise _UsageError(f"--family {ns.family} requires --{name}")
        values.append(value)
    return values


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise _UsageError(f"{flag} expects comma-separated integers, got {text!r}")


def _family_graph(ns: argparse.Namespace) -> Graph:
    family = ns.family
    if family == "kn":
        return complete_graph(*_need(ns, "n"))
    if family == "kst":
        return complete_bipartite(*_need(ns, "s", "t"))
    if family == "multipartite":
        (raw,) = (ns.parts,)
        if raw is None:
            raise _UsageError("--family multipartite requires --parts")
        return complete_multipartite(tuple(_parse_int_list(raw, "--parts")))
    if family == "path":
        return path_graph(*_need(ns, "n"))
    if family == "cycle":
        return cycle_graph(*_need(ns, "n"))
    if family == "star":
        return star_graph(*_need(ns, "n"))
    if family == "plus-edge":
        return balanced_bipartite_plus_edge(*_need(ns, "k"))
    if family == "gnm":
        n, m, seed = _need(ns, "n", "m", "graph-seed")
        return gnm_random_graph(n, m, seed)
    if family == "regular":
        n, d, seed = _need(ns, "n", "d", "graph-seed")
        return random_regular_graph(n, d, seed)
    raise _UsageError(f"unknown family {family!r}")


def _graph_from_args(ns: argparse.Namespace) -> Graph:
    if ns.g6 is not None:
        return parse_graph6(ns.g6)
    if ns.edges is not None:
        return parse_edge_list(Path(ns.edges).read_text())
    return _family_graph(ns)


def _distribution_output(dist: ForestDistribution, fmt: str) -> str:
    if fmt == "text":
        return "\n".join(
            f"{k} {format_fraction(dist.probs[k])}" for k in sorted(dist.probs)
        )
    return json.dumps(dist.to_json_dict())


def _value_output(value, fmt: str) -> str:
    if fmt == "text":
        return format_fraction(value)
    return json.dumps({"value": format_fraction(value)})


# --- subcommand handlers ---


def _cmd_poly(ns: argparse.Namespace) -> str:
    if ns.method == "closed":
        if ns.family == "kn":
            dist = closedforms.complete_distribution(*_need(ns, "n"))
        elif ns.family == "kst":
            dist = closedforms.bipartite_distribution(*_need(ns, "s", "t"))
        elif ns.family == "path":
            (vertices,) = _need(ns, "n")
            if vertices < 2:
                raise _UsageError("closed path polynomial needs --n >= 2 vertices")
            dist = closedforms.path_distribution(vertices - 1)
        else:
            raise _UsageError("--method closed supports --family kn, kst, or path")
        return _distribution_output(dist, ns.format)
    g = _graph_from_args(ns)
    dist = brute_force_distribution(g) if ns.method == "brute" else forest_polynomial(g)
    return _distribution_output(dist, ns.format)


def _cmd_expect(ns: argparse.Namespace) -> str:
    return _value_output(expected_components(_graph_from_args(ns)), ns.format)


def _cmd_one_comp(ns: argparse.Namespace) -> str:
    return _value_output(single_component_probability(_graph_from_args(ns)), ns.format)


def _cmd_cheeger(ns: argparse.Namespace) -> str:
    return _value_output(cheeger_constant(_graph_from_args(ns)), ns.format)


def _cmd_closed(ns: argparse.Namespace) -> str:
    which = ns.formula
    if which == "kn":
        return _distribution_output(closedforms.complete_distribution(_one(ns, "n")), ns.format)
    if which == "kst":
        s, t = _one(ns, "s"), _one(ns, "t")
        return _distribution_output(closedforms.bipartite_distribution(s, t), ns.format)
    if which == "path":
        return _distribution_output(closedforms.path_distribution(_one(ns, "n")), ns.format)
    if which == "cycle1":
        return _value_output(closedforms.cycle_single_component(_one(ns, "n")), ns.format)
    if which == "gnm-expect":
        return _value_output(
            closedforms.gnm_expected_components(_one(ns, "n"), _one(ns, "m")), ns.format
        )
    if which == "gnm-bound":
        return _value_output(
            closedforms.gnm_expectation_lower_bound(_one(ns, "n"), _one(ns, "m")), ns.format
        )
    if which == "q":
        value = closedforms.bipartite_q(
            _one(ns, "s"), _one(ns, "t"), _one(ns, "a"), _one(ns, "b"), _one(ns, "l")
        )
        return _value_output(value, ns.format)
    raise _UsageError(f"unknown closed formula {which!r}")


def _one(ns: argparse.Namespace, name: str) -> int:
    value = getattr(ns, name)
    if value is None:
        raise _UsageError(f"closed {ns.formula} requires --{name}")
    return value


def _cmd_simulate(ns: argparse.Namespace) -> str:
    est = montecarlo.estimate_distribution(_graph_from_args(ns), ns.trials, ns.seed)
    if ns.format == "text":
        lines = [f"{k} {est.counts[k]}" for k in sorted(est.counts)]
        lines.append(f"mean {est.mean_kappa!r}")
        lines.append(f"stderr {est.stderr_kappa!r}")
        return "\n".join(lines)
    return json.dumps(est.to_json_dict())


def _cmd_gnm_sim(ns: argparse.Namespace) -> str:
    mean, stderr = montecarlo.estimate_gnm_expectation(
        ns.n, ns.m, ns.graph_samples, ns.orderings, ns.seed
    )
    if ns.format == "text":
        return f"mean {mean!r}\nstderr {stderr!r}"
    return json.dumps({"mean": mean, "stderr": stderr})


def _cmd_decay(ns: argparse.Namespace) -> str:
    n_values = _parse_int_list(ns.n_values, "--n-values")
    if not n_values:
        raise _UsageError("--n-values must name at least one n")
    rows = montecarlo.single_component_decay(ns.d, n_values, ns.trials, ns.seed)
    if ns.format == "csv":
        return montecarlo.decay_rows_to_csv(rows)
    return "\n".join(json.dumps(row.to_json_dict()) for row in rows)


def _cmd_search(ns: argparse.Namespace) -> str:
    kind = ns.what
    if kind == "pairs":
        reports = search.find_equal_polynomial_pairs(_required_n(ns))
        return "\n".join(json.dumps(r.to_json_dict()) for r in reports)
    if kind == "twins":
        reports = search.find_edge_degree_twins(_required_n(ns))
        return "\n".join(json.dumps(r.to_json_dict()) for r in reports)
    if kind == "trees":
        reports = search.find_tree_pairs(_required_n(ns))
        return "\n".join(json.dumps(r.to_json_dict()) for r in reports)
    if kind == "logconcave":
        if ns.max_n is None:
            raise _UsageError("search logconcave requires --max-n")
        violations = search.sweep_log_concavity(ns.max_n)
        return "\n".join(
            json.dumps({"graph6": serialize_graph6(g)}) for g in violations
        )
    raise _UsageError(f"unknown search {kind!r}")


def _required_n(ns: argparse.Namespace) -> int:
    if ns.n is None:
        raise _UsageError(f"search {ns.what} requires --n")
    return ns.n


def _cmd_conjecture(ns: argparse.Namespace) -> str:
    report = search.check_conjecture(ns.k)
    if ns.format == "text":
        return "holds" if report.holds else "differs"
    return json.dumps(report.to_json_dict())


def _cmd_table(ns: argparse.Namespace) -> str:
    lines = []
    if ns.which == "small-graphs":
        for n in range(2, ns.max_n + 1):
            graphs = enumerate_connected_graphs(n)
            if ns.verbose:
                print(f"n={n}: {len(graphs)} connected classes", file=sys.stderr)
            for g in graphs:
                dist = forest_polynomial(g)
                lines.append(json.dumps(
                    {"graph6": serialize_graph6(g), "polynomial": dist.to_json_dict()}
                ))
    else:
        for n in range(2, ns.max_n + 1):
            trees = enumerate_trees(n)
            if ns.verbose:
                print(f"n={n}: {len(trees)} trees", file=sys.stderr)
            for g in trees:
                dist = forest_polynomial(g)
                lines.append(json.dumps(
                    {"graph6": serialize_graph6(g), "polynomial": dist.to_json_dict()}
                ))
    return "\n".join(lines)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forestbuilder",
        description="Exact and Monte Carlo analysis of the forest-building process",
    )
    parser.add_argument("--verbose", action="store_true",
                        help="progress notes on standard error")
    subs = parser.add_subparsers(dest="command", required=True)

    def fmt(sub, choices=("json", "text"), default="json"):
        sub.add_argument("--format", action=_Once, choices=list(choices), default=default)

    sub = subs.add_parser("poly", help="exact component-count distribution")
    _add_source_flags(sub)
    sub.add_argument("--method", action=_Once, choices=["exact", "brute", "closed"],
                     default="exact")
    fmt(sub)
    sub.set_defaults(handler=_cmd_poly)

    sub = subs.add_parser("expect", help="exact expected component count")
    _add_source_flags(sub)
    fmt(sub)
    sub.set_defaults(handler=_cmd_expect)

    sub = subs.add_parser("one-comp", help="exact single-component probability")
    _add_source_flags(sub)
    fmt(sub)
    sub.set_defaults(handler=_cmd_one_comp)

    sub = subs.add_parser("cheeger", help="exact Cheeger constant")
    _add_source_flags(sub)
    fmt(sub)
    sub.set_defaults(handler=_cmd_cheeger)

    sub = subs.add_parser("closed", help="closed-form values")
    sub.add_argument("formula", choices=["kn", "kst", "path", "cycle1",
                                         "gnm-expect", "gnm-bound", "q"])
    for flag in ("n", "s", "t", "a", "b", "m"):
        sub.add_argument(f"--{flag}", type=int, action=_Once)
    sub.add_argument("--l", type=int, action=_Once, help="q: tree count argument")
    fmt(sub)
    sub.set_defaults(handler=_cmd_closed)

    sub = subs.add_parser("simulate", help="seeded Monte Carlo distribution estimate")
    _add_source_flags(sub)
    sub.add_argument("--trials", type=int, action=_Once, required=True)
    sub.add_argument("--seed", type=int, action=_Once, required=True)
    fmt(sub)
    sub.set_defaults(handler=_cmd_simulate)

    sub = subs.add_parser("gnm-sim", help="estimate E(kappa) over G(n,m)")
    sub.add_argument("--n", type=int, action=_Once, required=True)
    sub.add_argument("--m", type=int, action=_Once, required=True)
    sub.add_argument("--graph-samples", type=int, action=_Once, required=True)
    sub.add_argument("--orderings", type=int, action=_Once, required=True)
    sub.add_argument("--seed", type=int, action=_Once, required=True)
    fmt(sub)
    sub.set_defaults(handler=_cmd_gnm_sim)

    sub = subs.add_parser("decay", help="one-component decay on random regular graphs")
    sub.add_argument("--d", type=int, action=_Once, required=True)
    sub.add_argument("--n-values", action=_Once, required=True, metavar="N1,N2,...")
    sub.add_argument("--trials", type=int, action=_Once, required=True)
    sub.add_argument("--seed", type=int, action=_Once, required=True)
    fmt(sub, choices=("json", "csv"))
    sub.set_defaults(handler=_cmd_decay)

    sub = subs.add_parser("search", help="exhaustive small-graph searches")
    sub.add_argument("what", choices=["pairs", "twins", "trees", "logconcave"])
    sub.add_argument("--n", type=int, action=_Once)
    sub.add_argument("--max-n", type=int, action=_Once)
    fmt(sub)
    sub.set_defaults(handler=_cmd_search)

    sub = subs.add_parser("conjecture", help="compare G_{2k+1} with K_{k,k+1}")
    sub.add_argument("--k", type=int, action=_Once, required=True)
    fmt(sub)
    sub.set_defaults(handler=_cmd_conjecture)

    sub = subs.add_parser("table", help="regenerate polynomial tables")
    sub.add_argument("which", choices=["small-graphs", "trees"])
    sub.add_argument("--max-n", type=int, action=_Once, required=True)
    sub.set_defaults(handler=_cmd_table)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        output = ns.handler(ns)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ForestBuilderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if output:
        print(output if not output.endswith("\n") else output[:-1])
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
