"""Random-walk and resistance invariants of a connected graph.

Hitting times come from two independent routes (first-step linear systems and
the resistance identity), Kemeny's constant from the spectrum and from its
definition at every start vertex, and :func:`simulate_hitting` gives a Monte
Carlo estimate as a third check.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .graph_core import Graph, require_connected
from .spectra import NumericKernelError, laplacian_pinv, solve_linear, walk_spectrum

log = logging.getLogger(__name__)

KEMENY_RTOL = 1e-8


def rel_close(a: float, b: float, tol: float) -> bool:
    """``|a - b| <= tol * (1 + |b|)``, the scaled tolerance used everywhere."""
    return abs(a - b) <= tol * (1.0 + abs(b))


def stationary(g: Graph) -> np.ndarray:
    """``pi_i = deg(i) / 2m``; checked against ``pi P = pi``."""
    require_connected(g)
    d = g.degrees.astype(np.float64)
    pi = d / d.sum()
    p = transition_matrix(g)
    if np.max(np.abs(pi @ p - pi)) > 1e-12:
        raise NumericKernelError(f"stationarity check failed on {g!r}")
    return pi


def transition_matrix(g: Graph) -> np.ndarray:
    a = g.adjacency_matrix()
    return a / g.degrees[:, None]


def hitting_matrix_solve(g: Graph) -> np.ndarray:
    """``h[a, b] = E_a T_b`` from the first-step equations, one target at a time.

    For target ``b``: ``h(b) = 0`` and ``h(a) = 1 + mean of h over neighbours of a``.
    """
    require_connected(g)
    n = g.n
    p = transition_matrix(g)
    h = np.zeros((n, n))
    for b in range(n):
        rest = np.array([v for v in range(n) if v != b], dtype=int)
        sys_ = np.eye(n - 1) - p[np.ix_(rest, rest)]
        rhs = np.ones(n - 1)
        col = solve_linear(sys_, rhs, name=f"hitting system for target {b} on {g!r}")
        resid = np.max(np.abs(sys_ @ col - rhs)) if n > 1 else 0.0
        if resid > 1e-8 * (1 + np.max(np.abs(col))):
            raise NumericKernelError(f"hitting system for target {b} has residual {resid:.3g}")
        h[rest, b] = col
    return h


def hitting_matrix_resistance(g: Graph, r: np.ndarray) -> np.ndarray:
    """Hitting times from effective resistances.

    ``E_a T_b = 1/2 * sum_v deg(v) (r[a,b] + r[v,b] - r[v,a])``.
    """
    d = g.degrees.astype(np.float64)
    dr = d @ r  # dr[x] = sum_v deg(v) r[v, x]
    h = 0.5 * (d.sum() * r + dr[None, :] - dr[:, None])
    np.fill_diagonal(h, 0.0)
    return h


@dataclass(frozen=True)
class ResistanceMatrix:
    r: np.ndarray
    kirchhoff: float
    kirchhoff_trace: float  # n * trace(L+), the second route

    @property
    def row_sums(self) -> np.ndarray:
        return self.r.sum(axis=1)


def resistance_matrix(g: Graph) -> ResistanceMatrix:
    """Effective resistances with unit resistors, via ``r_ij = L+_ii + L+_jj - 2 L+_ij``."""
    lp = laplacian_pinv(g)
    diag = np.diag(lp)
    r = diag[:, None] + diag[None, :] - 2.0 * lp
    r = 0.5 * (r + r.T)
    np.fill_diagonal(r, 0.0)
    kf = float(np.triu(r, 1).sum())
    kf_trace = float(g.n * np.trace(lp))
    if not rel_close(kf, kf_trace, 1e-8):
        raise NumericKernelError(f"Kirchhoff routes disagree on {g!r}: {kf} vs {kf_trace}")
    return ResistanceMatrix(r, kf, kf_trace)


def kirchhoff_index(g: Graph) -> float:
    return resistance_matrix(g).kirchhoff


@dataclass(frozen=True)
class KemenyResult:
    k_eigen: float
    k_hitting: float
    per_start: np.ndarray  # sum_j pi_j E_i T_j for each start i

    @property
    def value(self) -> float:
        return self.k_eigen

    @property
    def max_start_spread(self) -> float:
        return float(np.max(np.abs(self.per_start - self.k_hitting)))

    @property
    def route_gap(self) -> float:
        return abs(self.k_eigen - self.k_hitting)


def kemeny_from_spectrum(eigenvalues: np.ndarray) -> float:
    lam = np.asarray(eigenvalues)[1:]
    return float(np.sum(1.0 / (1.0 - lam)))


def kemeny(g: Graph, h: np.ndarray | None = None, check: bool = True) -> KemenyResult:
    """Kemeny's constant from the spectrum and from hitting times at every start."""
    require_connected(g)
    k_eig = kemeny_from_spectrum(walk_spectrum(g).eigenvalues)
    if h is None:
        h = hitting_matrix_solve(g)
    per_start = h @ stationary(g)
    res = KemenyResult(k_eig, float(per_start.mean()), per_start)
    if check:
        if res.route_gap > KEMENY_RTOL * (1 + k_eig):
            raise NumericKernelError(
                f"Kemeny routes disagree on {g!r}: {k_eig!r} vs {res.k_hitting!r}")
        if res.max_start_spread > KEMENY_RTOL * (1 + res.k_hitting):
            raise NumericKernelError(
                f"Kemeny value depends on the start vertex on {g!r} "
                f"(spread {res.max_start_spread:.3g})")
    return res


@dataclass(frozen=True)
class HittingEstimate:
    mean: float
    stderr: float
    trials: int
    truncated: int = 0  # walks stopped by the step cap

    def within(self, exact: float, sigmas: float = 4.0) -> bool:
        if self.stderr == 0.0:
            return self.mean == exact
        return abs(self.mean - exact) <= sigmas * self.stderr


def simulate_hitting(g: Graph, a: int, b: int, trials: int, seed: int = 0,
                     max_steps: int = 10**9) -> HittingEstimate:
    """Monte Carlo estimate of ``E_a T_b``.

    All trials advance in lockstep from one PCG64 stream (``numpy.random.default_rng(seed)``),
    so a fixed seed reproduces the same walk lengths.  The mean is accumulated
    with ``math.fsum`` over walk lengths in trial order.
    """
    require_connected(g)
    if a == b:
        raise ValueError("start and target must differ")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    deg = g.degrees
    table = np.full((g.n, int(deg.max())), -1, dtype=np.int64)
    for v, nbrs in enumerate(g.adjacency):
        table[v, :len(nbrs)] = nbrs

    pos = np.full(trials, a, dtype=np.int64)
    steps = np.zeros(trials, dtype=np.int64)
    live = np.arange(trials)
    t = 0
    while live.size and t < max_steps:
        cur = pos[live]
        nxt = table[cur, rng.integers(0, deg[cur])]
        pos[live] = nxt
        t += 1
        done = nxt == b
        steps[live[done]] = t
        live = live[~done]
    if live.size:
        log.warning("%d of %d walks hit the step cap %d", live.size, trials, max_steps)
        steps[live] = max_steps

    lengths = steps.astype(np.float64).tolist()
    mean = math.fsum(lengths) / trials
    if trials > 1:
        var = math.fsum((x - mean) ** 2 for x in lengths) / (trials - 1)
        stderr = math.sqrt(var / trials)
    else:
        stderr = 0.0
    return HittingEstimate(mean, stderr, trials, int(live.size))
