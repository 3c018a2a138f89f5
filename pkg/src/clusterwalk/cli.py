"""Command-line front end.

Every command prints one report to stdout: ``key: value`` lines, keys dotted
by section (``input.``, ``result.``, ``diagnostic.``).  Files are written only
to explicit ``--out`` paths.  Exit codes: 0 ok, 1 usage/parse error,
2 precondition failure, 3 numeric-kernel failure, 4 runtime invariant violation.
"""
from __future__ import annotations

import argparse
import hashlib
import sys
from collections import Counter
from pathlib import Path

import numpy as np

from . import formulas, graph_core, invariants, spectra, symmetry
from .graph_core import DisconnectedGraphError, Graph, GraphError

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_NUMERIC, EXIT_INVARIANT = 0, 1, 2, 3, 4
DEFAULT_RTOL = 1e-8
SELECTORS = ("kemeny", "kirchhoff", "resistance", "hitting", "stationary", "spectrum")


class InvariantViolation(RuntimeError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".15g")
    if isinstance(x, (list, tuple, np.ndarray)):
        return " ".join(fmt(v) for v in x)
    if x is None:
        return "none"
    return str(x)


class Report:
    def __init__(self, argv: list[str]):
        self.lines: list[tuple[str, str]] = [("command", " ".join(argv))]

    def put(self, key: str, value) -> None:
        self.lines.append((key, fmt(value)))

    def fingerprint(self, prefix: str, g: Graph, text: str | None = None) -> None:
        self.put(f"{prefix}.n", g.n)
        self.put(f"{prefix}.m", g.m)
        degs = Counter(int(d) for d in g.degrees)
        self.put(f"{prefix}.degrees", " ".join(f"{d}x{c}" for d, c in sorted(degs.items())))
        body = text if text is not None else graph_core.format_edge_list(g)
        self.put(f"{prefix}.sha256", hashlib.sha256(body.encode()).hexdigest())

    def render(self) -> str:
        return "".join(f"{k}: {v}\n" for k, v in self.lines)


def _load(path: str) -> tuple[Graph, str]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc.strerror}") from None
    g = graph_core.parse_edge_list(text)
    return Graph(g.n, g.adjacency, name=Path(path).stem), text


def _connected(g: Graph, path: str) -> Graph:
    if not g.is_connected():
        raise DisconnectedGraphError(f"graph in {path} is disconnected")
    return g


def _check(ok: bool, what: str) -> None:
    if not ok:
        raise InvariantViolation(what)


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise GraphError(f"cannot write {path}: {exc.strerror}") from None


# ----------------------------------------------------------------------------
# commands

def cmd_gen(args, rep: Report) -> None:
    g = graph_core.generate(args.family, *args.params)
    text = graph_core.format_edge_list(g, comment=f"{args.family} {' '.join(map(str, args.params))}".strip())
    if args.out:
        _write(args.out, text)
        rep.put("result.path", args.out)
    else:
        rep.put("result.edge_list", "follows")
    rep.fingerprint("input", g, graph_core.format_edge_list(g))
    if not args.out:
        sys.stdout.write(rep.render())
        sys.stdout.write(text)
        rep.lines.clear()


def cmd_compute(args, rep: Report) -> None:
    g, text = _load(args.graph)
    _connected(g, args.graph)
    rep.fingerprint("input", g, text)
    tol = args.tolerance
    chosen = args.selectors or ["all"]
    want = set(SELECTORS) if "all" in chosen else set(chosen)

    if "stationary" in want:
        rep.put("result.stationary", invariants.stationary(g))
    if "spectrum" in want:
        sp = spectra.walk_spectrum(g)
        rep.put("result.spectrum", sp.eigenvalues)
        rep.put("result.lambda2", sp.lambda2)
    res = h = None
    if want & {"kirchhoff", "resistance", "hitting"}:
        res = invariants.resistance_matrix(g)
    if want & {"kemeny", "hitting"}:
        h = invariants.hitting_matrix_solve(g)
    if "kirchhoff" in want:
        rep.put("result.kirchhoff", res.kirchhoff)
        rep.put("diagnostic.kirchhoff.trace_route", res.kirchhoff_trace)
        gap = abs(res.kirchhoff - res.kirchhoff_trace) / (1 + res.kirchhoff)
        rep.put("diagnostic.kirchhoff.route_gap", gap)
        _check(gap <= tol, "Kirchhoff pair sum != n * trace(L+)")
    if "resistance" in want:
        for i in range(g.n):
            rep.put(f"result.resistance.{i}", res.r[i])
    if "hitting" in want:
        h2 = invariants.hitting_matrix_resistance(g, res.r)
        for i in range(g.n):
            rep.put(f"result.hitting.{i}", h[i])
        gap = float(np.max(np.abs(h - h2)) / (1 + np.max(np.abs(h))))
        rep.put("diagnostic.hitting.route_gap", gap)
        _check(gap <= max(tol, 1e-7), "hitting routes disagree")
        commute = h + h.T
        dev = float(np.max(np.abs(commute - 2 * g.m * res.r)) / (1 + np.max(commute)))
        rep.put("diagnostic.hitting.commute_identity_dev", dev)
        _check(dev <= tol, "E_aT_b + E_bT_a != 2m R_ab")
        if args.trials > 0:
            a, b = args.pair if args.pair else (0, g.n - 1)
            est = invariants.simulate_hitting(g, a, b, args.trials, seed=args.seed)
            rep.put("diagnostic.hitting.mc_pair", (a, b))
            rep.put("diagnostic.hitting.mc_seed", args.seed)
            rep.put("diagnostic.hitting.mc_trials", args.trials)
            rep.put("diagnostic.hitting.mc_mean", est.mean)
            rep.put("diagnostic.hitting.mc_stderr", est.stderr)
            rep.put("diagnostic.hitting.mc_exact", h[a, b])
            rep.put("diagnostic.hitting.mc_within_4se", est.within(h[a, b]))
    if "kemeny" in want:
        kr = invariants.kemeny(g, h=h, check=False)
        rep.put("result.kemeny", kr.k_eigen)
        rep.put("diagnostic.kemeny.hitting_route", kr.k_hitting)
        rep.put("diagnostic.kemeny.route_gap", kr.route_gap)
        rep.put("diagnostic.kemeny.max_start_spread", kr.max_start_spread)
        _check(kr.route_gap <= tol * (1 + kr.k_eigen), "Kemeny routes disagree")
        _check(kr.max_start_spread <= tol * (1 + kr.k_hitting), "Kemeny depends on start vertex")
        if "kirchhoff" in want:
            sw = formulas.Sandwich(g.n / g.degrees.max() * kr.value, res.kirchhoff,
                                   g.n / g.degrees.min() * kr.value)
            rep.put("diagnostic.sandwich", (sw.lower, sw.value, sw.upper))
            _check(sw.holds(tol), "(n/maxdeg) K <= R(G) <= (n/mindeg) K")


def cmd_check_hs(args, rep: Report) -> None:
    g, text = _load(args.graph)
    _connected(g, args.graph)
    rep.fingerprint("input", g, text)
    screen = symmetry.screen_necessary_conditions(g)
    rep.put("result.screen.verdict", screen.verdict.value)
    if screen.rejected:
        rep.put("result.screen.rule", screen.rule)
        rep.put("result.screen.offender", screen.offender)
        rep.put("diagnostic.screen.detail", screen.detail)
    if args.mode == "screen":
        rep.put("result.verdict", screen.verdict.value)
        return
    full = symmetry.is_highly_symmetric(g)
    rep.put("result.verdict", full.verdict.value)
    rep.put("diagnostic.max_asymmetry", full.asymmetry)
    if full.is_hs:
        for k, v in full.extras.items():
            rep.put(f"diagnostic.extras.{k}", v)
        _check(full.extras["extras_ok"], "E_aT_b = m R_ab or constant R(i) failed on an HS graph")
        _check(not screen.rejected, f"screener rule {screen.rule} rejected an HS graph")
    else:
        rep.put("result.witness", full.pair)
        rep.put("diagnostic.witness.detail", full.detail)


def cmd_cluster(args, rep: Report) -> None:
    g1, t1 = _load(args.g1)
    g2, t2 = _load(args.g2)
    rep.fingerprint("input.g1", g1, t1)
    rep.fingerprint("input.g2", g2, t2)
    cg = graph_core.cluster(graph_core.ClusterSpec(_connected(g1, args.g1), _connected(g2, args.g2), args.root))
    text = graph_core.format_edge_list(cg.graph, comment=f"cluster {args.g1} {args.g2} root {args.root}")
    _write(args.out, text)
    rep.put("result.path", args.out)
    rep.put("result.n", cg.graph.n)
    rep.put("result.m", cg.graph.m)
    rep.put("result.contact", cg.contact)


def cmd_verify_cluster(args, rep: Report) -> None:
    g1, t1 = _load(args.g1)
    g2, t2 = _load(args.g2)
    rep.fingerprint("input.g1", g1, t1)
    rep.fingerprint("input.g2", g2, t2)
    _connected(g1, args.g1)
    _connected(g2, args.g2)
    cr = formulas.cluster_report(g1, g2, root=args.root)
    for key in ("n1", "m1", "n2", "m2", "k1", "k2", "r1", "r2", "k_exact", "r_exact"):
        rep.put(f"result.{key}", getattr(cr, key))
    deltas = cr.deltas
    for name, value in cr.rows.items():
        rep.put(f"result.{name}", value)
        rep.put(f"diagnostic.delta.{name}", deltas[name])


def cmd_bounds(args, rep: Report) -> None:
    g, text = _load(args.graph)
    _connected(g, args.graph)
    rep.fingerprint("input", g, text)
    bs = formulas.bounds(g)
    rep.put("result.k_actual", bs.k_actual)
    slack = args.tolerance * (1 + bs.k_actual)
    for name, v in bs.lowers().items():
        rep.put(f"result.{name}", v)
        rep.put(f"diagnostic.{name}.tight", abs(v - bs.k_actual) <= slack)
    rep.put("diagnostic.sigma", bs.sigma)
    rep.put("diagnostic.diameter", bs.diameter)
    if bs.upper_eigen is None:
        rep.put("result.upper_eigen", "inapplicable")
        rep.put("diagnostic.upper_eigen.reason", bs.upper_eigen_reason)
    else:
        rep.put("result.upper_eigen", bs.upper_eigen)
        rep.put("diagnostic.upper_eigen.tight", abs(bs.upper_eigen - bs.k_actual) <= slack)
    rep.put("diagnostic.upper_eigen.k", bs.upper_eigen_k)
    rep.put("diagnostic.upper_eigen.theta", bs.upper_eigen_theta)
    bad = bs.violations(args.tolerance)
    _check(not bad, f"bound(s) violated: {', '.join(bad)}")


# ----------------------------------------------------------------------------

def _tolerance(s: str) -> float:
    v = float(s)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return max(v, 1e-12)


def _selector(s: str) -> str:
    # validated here: argparse rejects an empty nargs="*" list when choices is set
    if s not in SELECTORS + ("all",):
        raise argparse.ArgumentTypeError(f"unknown selector {s!r}")
    return s


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="clusterwalk", description=__doc__.splitlines()[0])
    p.add_argument("--tolerance", type=_tolerance, default=DEFAULT_RTOL,
                   help="relative tolerance for runtime checks (floor 1e-12)")
    p.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", help="write a named family as an edge list")
    s.add_argument("family", choices=sorted(graph_core.FAMILIES))
    s.add_argument("params", nargs="*", type=int)
    s.add_argument("--out", "-o")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("compute", help="random-walk and resistance invariants")
    s.add_argument("graph")
    s.add_argument("selectors", nargs="*", type=_selector,
                   help=f"any of {', '.join(SELECTORS)}, all (default: all)")
    s.add_argument("--trials", type=int, default=0, help="Monte Carlo trials for a hitting time")
    s.add_argument("--pair", type=int, nargs=2, metavar=("A", "B"))
    s.set_defaults(func=cmd_compute)

    s = sub.add_parser("check-hs", help="highly-symmetric classification")
    s.add_argument("graph")
    s.add_argument("--mode", choices=("screen", "full"), default="full")
    s.set_defaults(func=cmd_check_hs)

    s = sub.add_parser("cluster", help="build G1{G2}")
    s.add_argument("g1")
    s.add_argument("g2")
    s.add_argument("--root", type=int, default=0)
    s.add_argument("--out", "-o", required=True)
    s.set_defaults(func=cmd_cluster)

    s = sub.add_parser("verify-cluster", help="closed forms vs exact values on G1{G2}")
    s.add_argument("g1")
    s.add_argument("g2")
    s.add_argument("--root", type=int, default=0)
    s.set_defaults(func=cmd_verify_cluster)

    s = sub.add_parser("bounds", help="bounds on Kemeny's constant")
    s.add_argument("graph")
    s.set_defaults(func=cmd_bounds)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    rep = Report(["clusterwalk"] + argv)
    try:
        args.func(args, rep)
    except graph_core.EdgeListError as exc:
        print(f"error: parse: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DisconnectedGraphError, formulas.FormulaPreconditionError) as exc:
        print(f"error: precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except spectra.NumericKernelError as exc:
        print(f"error: numeric: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except InvariantViolation as exc:
        sys.stdout.write(rep.render())
        print(f"error: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    sys.stdout.write(rep.render())
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
