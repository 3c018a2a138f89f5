"""Highly symmetric (HS) graphs: ``E_a T_b == E_b T_a`` for every pair.

:func:`is_highly_symmetric` decides this directly from the hitting matrix.
:func:`screen_necessary_conditions` applies cheap structural rules that every
HS graph must pass; it can only reject, never certify.

Walk-regularity is tested on the diagonals of ``A^k`` for ``k = 2..n``.  Larger
powers add nothing: by Cayley-Hamilton ``A^k`` for ``k >= n`` is an integer
combination of ``I, A, ..., A^(n-1)``, so constant diagonals up to ``n - 1``
already force constant diagonals for every ``k``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .graph_core import Graph, require_connected, structure
from .invariants import hitting_matrix_solve, resistance_matrix

HS_RTOL = 1e-7
EXTRAS_RTOL = 1e-7
ROWSUM_RTOL = 1e-8
RESISTANCE_ATOL = 1e-9

# Residue fallback for walk counts; both primes exceed 2**30.
FALLBACK_PRIMES = (1073741827, 1073741831)
_INT64_SAFE = 1 << 62


class Verdict(enum.Enum):
    HIGHLY_SYMMETRIC = "HighlySymmetric"
    NOT_HS = "NotHS"
    NOT_EXCLUDED = "HighlySymmetric-not-excluded"


@dataclass
class HSReport:
    verdict: Verdict
    screener_only: bool
    pair: tuple[int, int] | None = None
    asymmetry: float = 0.0  # |E_a T_b - E_b T_a| at the witness pair (or max over pairs)
    rule: str | None = None  # "ii", "iii" or "iv"
    offender: object = None  # vertex or edge for a screener rule
    detail: str = ""
    extras: dict = field(default_factory=dict)

    @property
    def is_hs(self) -> bool:
        return self.verdict is Verdict.HIGHLY_SYMMETRIC

    @property
    def rejected(self) -> bool:
        return self.verdict is Verdict.NOT_HS


def is_highly_symmetric(g: Graph, h: np.ndarray | None = None) -> HSReport:
    """Direct HS test on the full hitting matrix.

    On success the report's ``extras`` hold the deviations of
    ``E_a T_b = m R_ab`` and of the constancy of resistance row sums, plus
    ``extras_ok``.
    """
    require_connected(g)
    if h is None:
        h = hitting_matrix_solve(g)
    asym = np.abs(h - h.T)
    a, b = np.unravel_index(int(np.argmax(asym)), asym.shape)
    worst = float(asym[a, b])
    tol = HS_RTOL * (1.0 + float(h.max()))
    if worst > tol:
        a, b = (a, b) if h[a, b] < h[b, a] else (b, a)
        return HSReport(
            Verdict.NOT_HS, screener_only=False, pair=(int(a), int(b)), asymmetry=worst,
            detail=f"E_{a}T_{b} = {h[a, b]:.12g} but E_{b}T_{a} = {h[b, a]:.12g}")

    res = resistance_matrix(g)
    off = ~np.eye(g.n, dtype=bool)
    mr = g.m * res.r
    hit_dev = float(np.max(np.abs(h - mr)[off] / (1.0 + np.abs(mr[off])))) if g.n > 1 else 0.0
    rows = res.row_sums
    row_dev = float(np.max(np.abs(rows - rows.mean())) / (1.0 + abs(rows.mean())))
    half_dev = float(np.max(np.abs(g.n / 2 * rows - res.kirchhoff)) / (1.0 + res.kirchhoff))
    extras = {
        "hitting_vs_m_resistance": hit_dev,
        "row_sum_spread": row_dev,
        "kirchhoff_vs_half_n_row_sum": half_dev,
    }
    extras["extras_ok"] = (hit_dev <= EXTRAS_RTOL and row_dev <= ROWSUM_RTOL
                           and half_dev <= EXTRAS_RTOL)
    return HSReport(Verdict.HIGHLY_SYMMETRIC, screener_only=False, asymmetry=worst,
                    extras=extras)


def resistance_regular_vertices(g: Graph, r: np.ndarray) -> list[int]:
    """Vertices whose resistances to all neighbours agree.  Leaves qualify vacuously."""
    tol = RESISTANCE_ATOL * (1.0 + float(np.max(r)))
    out = []
    for i, nbrs in enumerate(g.adjacency):
        vals = r[i, list(nbrs)]
        if vals.size <= 1 or vals.max() - vals.min() <= tol:
            out.append(i)
    return out


def screen_necessary_conditions(g: Graph, r: np.ndarray | None = None) -> HSReport:
    """Reject graphs that break a necessary condition for HS.

    Rules, in the order tried:
      iv   two or more bridges;
      iii  a bridge whose sides have different edge counts (m != 1 + 2 m_i);
      ii   a cut vertex that is resistance regular.
    K2 passes: its single bridge has two empty sides.
    """
    require_connected(g)
    st = structure(g)
    if len(st.bridges) >= 2:
        return HSReport(Verdict.NOT_HS, screener_only=True, rule="iv",
                        offender=st.bridges[:2],
                        detail=f"{len(st.bridges)} bridges, e.g. {st.bridges[0]} and {st.bridges[1]}")
    for edge, (mi, mj) in zip(st.bridges, st.bridge_sides):
        if mi != mj:
            return HSReport(Verdict.NOT_HS, screener_only=True, rule="iii", offender=edge,
                            detail=f"bridge {edge} splits edges {mi} vs {mj}")
    if st.articulation_points:
        if r is None:
            r = resistance_matrix(g).r
        rr = set(resistance_regular_vertices(g, r))
        for v in st.articulation_points:
            if v in rr:
                return HSReport(Verdict.NOT_HS, screener_only=True, rule="ii", offender=v,
                                detail=f"cut vertex {v} is resistance regular")
    return HSReport(Verdict.NOT_EXCLUDED, screener_only=True)


def classify(g: Graph) -> HSReport:
    """Screen first; run the direct test only when the screener cannot reject."""
    rep = screen_necessary_conditions(g)
    if rep.rejected:
        return rep
    return is_highly_symmetric(g)


def check_return_time_identity(g: Graph, h: np.ndarray | None = None) -> float:
    """Max relative deviation of ``1 + mean_{j~i} E_j T_i`` from ``2m / deg(i)``."""
    require_connected(g)
    if h is None:
        h = hitting_matrix_solve(g)
    deg = g.degrees
    ret = np.array([1.0 + h[list(nbrs), i].mean() for i, nbrs in enumerate(g.adjacency)])
    expected = 2.0 * g.m / deg
    return float(np.max(np.abs(ret - expected) / expected))


@dataclass
class WalkRegularity:
    walk_regular: bool
    failure_k: int | None
    fallback_k: int | None  # first power computed in residue arithmetic, if any


def is_walk_regular(g: Graph) -> WalkRegularity:
    """Exact closed-walk counts; switches to residues mod two primes before int64 overflows.

    In residue mode, unequal residues prove a failure.  Equal residues modulo
    both primes are accepted as equality (the counts agree modulo their product).
    """
    require_connected(g)
    n = g.n
    a = g.adjacency_matrix(dtype=np.int64)
    dmax = int(g.degrees.max())
    cur = a.copy()
    mods: list[np.ndarray] | None = None
    fallback_k = None
    for k in range(2, max(n, 2) + 1):
        if mods is None and int(cur.max()) * dmax >= _INT64_SAFE:
            mods = [cur % p for p in FALLBACK_PRIMES]
            fallback_k = k
        if mods is None:
            cur = cur @ a
            d = np.diag(cur)
            if np.any(d != d[0]):
                return WalkRegularity(False, k, fallback_k)
        else:
            # entries < p < 2**31 times a 0/1 matrix: row sums stay below 2**63
            mods = [(mm @ a) % p for mm, p in zip(mods, FALLBACK_PRIMES)]
            if any(np.any(np.diag(mm) != mm[0, 0]) for mm in mods):
                return WalkRegularity(False, k, fallback_k)
    return WalkRegularity(True, None, fallback_k)


@dataclass
class SymmetrySurvey:
    walk_regular: bool
    walk_regular_failure_k: int | None
    walk_regular_fallback_k: int | None
    resistance_regular_vertices: list[int]
    regular: bool


def survey(g: Graph) -> SymmetrySurvey:
    wr = is_walk_regular(g)
    r = resistance_matrix(g).r
    return SymmetrySurvey(wr.walk_regular, wr.failure_k, wr.fallback_k,
                          resistance_regular_vertices(g, r), g.is_regular())
