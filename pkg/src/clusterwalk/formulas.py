"""Closed forms for the cluster ``G1{G2}`` of two HS graphs, and bounds on Kemeny's constant.

Two versions of the cluster Kemeny formula are kept side by side:

* :func:`cluster_kemeny_printed` carries ``2m - m1`` in the second term, as the
  formula is usually quoted;
* :func:`cluster_kemeny_corrected` carries ``2m - m2``, which is what the
  contact-vertex hitting identity ``E_c T_d = (2m - m2) R_cd`` produces.

They coincide when ``m1 == m2``.  The self-cluster formulas come in a printed
form and in a form derived by specialising the two-graph formulas; every
report compares each one with the exact value, never with another formula.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .graph_core import ClusterSpec, Graph, cluster, require_connected, structure
from .invariants import kemeny, resistance_matrix
from .spectra import walk_spectrum
from .symmetry import is_highly_symmetric


class FormulaPreconditionError(ValueError):
    pass


def cluster_kemeny_printed(n1: int, m1: int, m2: int, k1: float, k2: float) -> float:
    """``(m/m1) K1 + n1 (2m - m1)/m K2`` with ``m = m1 + n1 m2``."""
    if m1 <= 0 or m2 <= 0:
        raise FormulaPreconditionError("edge counts must be positive")
    if n1 < 2:
        raise FormulaPreconditionError("backbone needs at least 2 vertices")
    m = m1 + n1 * m2
    return m / m1 * k1 + n1 * (2 * m - m1) / m * k2


def cluster_kemeny_corrected(n1: int, m1: int, m2: int, k1: float, k2: float) -> float:
    """``(m/m1) K1 + n1 (2m - m2)/m K2`` with ``m = m1 + n1 m2``."""
    if m1 <= 0 or m2 <= 0:
        raise FormulaPreconditionError("edge counts must be positive")
    if n1 < 2:
        raise FormulaPreconditionError("backbone needs at least 2 vertices")
    m = m1 + n1 * m2
    return m / m1 * k1 + n1 * (2 * m - m2) / m * k2


def cluster_kirchhoff(n1: int, n2: int, r1: float, r2: float) -> float:
    """``n2^2 R(G1) + (2 n1^2 - n1) R(G2)``."""
    if n1 < 2 or n2 < 2:
        raise FormulaPreconditionError("both graphs need at least 2 vertices")
    return n2 ** 2 * r1 + (2 * n1 ** 2 - n1) * r2


# Self-cluster G{G} of an n-vertex d-regular HS graph.

def self_cluster_kemeny_printed(n: int, k1: float) -> float:
    return (3 * n + 1) * k1


def self_cluster_kemeny_derived(n: int, k1: float) -> float:
    return (3 * n * n + 3 * n + 1) / (n + 1) * k1


def self_cluster_kirchhoff(n: int, r1: float) -> float:
    return n * (3 * n - 1) * r1


def self_cluster_kirchhoff_from_kemeny_printed(n: int, d: int, k: float) -> float:
    return n * n * (3 * n - 1) / ((3 * n + 1) * d) * k


def self_cluster_kirchhoff_from_kemeny_derived(n: int, d: int, k: float) -> float:
    return n * n * (3 * n - 1) * (n + 1) / ((3 * n * n + 3 * n + 1) * d) * k


def rel_dev(value: float, exact: float) -> float:
    return abs(value - exact) / abs(exact)


@dataclass
class ClusterFormulaReport:
    g1: str
    g2: str
    root: int
    n1: int
    m1: int
    n2: int
    m2: int
    k1: float
    k2: float
    r1: float
    r2: float
    k_exact: float
    r_exact: float
    rows: dict[str, float] = field(default_factory=dict)  # formula name -> value
    exact_for: dict[str, str] = field(default_factory=dict)  # formula name -> "k" or "r"

    def add(self, name: str, value: float, target: str) -> None:
        self.rows[name] = value
        self.exact_for[name] = target

    @property
    def deltas(self) -> dict[str, float]:
        exact = {"k": self.k_exact, "r": self.r_exact}
        return {name: rel_dev(v, exact[self.exact_for[name]]) for name, v in self.rows.items()}

    @property
    def is_self_cluster(self) -> bool:
        return "k_self_printed" in self.rows


def _certify(g: Graph, label: str) -> None:
    require_connected(g)
    if not g.is_regular():
        raise FormulaPreconditionError(f"{label} {g!r} is not regular")
    rep = is_highly_symmetric(g)
    if not rep.is_hs:
        raise FormulaPreconditionError(f"{label} {g!r} is not highly symmetric: {rep.detail}")


def cluster_report(g1: Graph, g2: Graph, root: int = 0, self_rows: bool | None = None
                   ) -> ClusterFormulaReport:
    """Build ``g1{g2}``, compute K and R(G) exactly, and evaluate every closed form.

    Self-cluster rows are added when ``g1 == g2`` (same adjacency), unless
    ``self_rows`` says otherwise.
    """
    _certify(g1, "g1")
    _certify(g2, "g2")
    cg = cluster(ClusterSpec(g1, g2, root))
    k1, k2 = kemeny(g1).value, kemeny(g2).value
    r1, r2 = resistance_matrix(g1).kirchhoff, resistance_matrix(g2).kirchhoff
    rep = ClusterFormulaReport(
        g1=g1.name, g2=g2.name, root=root, n1=g1.n, m1=g1.m, n2=g2.n, m2=g2.m,
        k1=k1, k2=k2, r1=r1, r2=r2,
        k_exact=kemeny(cg.graph).value, r_exact=resistance_matrix(cg.graph).kirchhoff)
    rep.add("k_cluster_printed", cluster_kemeny_printed(g1.n, g1.m, g2.m, k1, k2), "k")
    rep.add("k_cluster_corrected", cluster_kemeny_corrected(g1.n, g1.m, g2.m, k1, k2), "k")
    rep.add("r_cluster", cluster_kirchhoff(g1.n, g2.n, r1, r2), "r")
    if self_rows is None:
        self_rows = g1.adjacency == g2.adjacency
    if self_rows:
        n, d = g1.n, int(g1.degrees[0])
        k = rep.k_exact
        rep.add("k_self_printed", self_cluster_kemeny_printed(n, k1), "k")
        rep.add("k_self_derived", self_cluster_kemeny_derived(n, k1), "k")
        rep.add("r_self", self_cluster_kirchhoff(n, r1), "r")
        rep.add("r_from_k_printed", self_cluster_kirchhoff_from_kemeny_printed(n, d, k), "r")
        rep.add("r_from_k_derived", self_cluster_kirchhoff_from_kemeny_derived(n, d, k), "r")
    return rep


def self_cluster_report(g1: Graph) -> ClusterFormulaReport:
    return cluster_report(g1, g1, root=0, self_rows=True)


# ----------------------------------------------------------------------------
# bounds on Kemeny's constant

@dataclass
class BoundSet:
    n: int
    k_actual: float
    lower_general: float
    lower_majorization: float
    sigma: float
    lower_bipartite: float | None = None
    upper_eigen: float | None = None
    upper_eigen_k: int | None = None
    upper_eigen_theta: float | None = None
    upper_eigen_reason: str = ""  # why upper_eigen is inapplicable
    lower_diameter: float | None = None
    diameter: int | None = None

    def lowers(self) -> dict[str, float]:
        out = {"lower_general": self.lower_general,
               "lower_majorization": self.lower_majorization}
        if self.lower_bipartite is not None:
            out["lower_bipartite"] = self.lower_bipartite
        if self.lower_diameter is not None:
            out["lower_diameter"] = self.lower_diameter
        return out

    def violations(self, rtol: float = 1e-8) -> list[str]:
        slack = rtol * (1.0 + self.k_actual)
        bad = [name for name, v in self.lowers().items() if v > self.k_actual + slack]
        if self.upper_eigen is not None and self.upper_eigen < self.k_actual - slack:
            bad.append("upper_eigen")
        return bad


def majorization_lower(n: int, eigenvalues: np.ndarray) -> tuple[float, float]:
    lam = np.asarray(eigenvalues)[1:]
    sigma = math.sqrt((1.0 + float(np.sum(lam ** 2))) / n)
    s = sigma / math.sqrt(n - 1)
    return 1.0 / (1.0 + s) + (n - 2) ** 2 / (n - 1 - s), sigma


def eigen_upper(n: int, lambda2: float) -> tuple[float | None, int, float, str]:
    """Upper bound from the second eigenvalue; ``None`` with a reason when degenerate."""
    k = math.floor((lambda2 * (n - 1) + 1) / (lambda2 + 1))
    theta = lambda2 * (n - k - 2) - k + 2
    if n - k - 2 < 0:
        return None, k, theta, f"n - k - 2 = {n - k - 2} < 0"
    if theta <= 0:
        return None, k, theta, f"theta = {theta:.12g} <= 0"
    return (n - k - 2) / (1 - lambda2) + k / 2 + 1 / theta, k, theta, ""


def regular_diameter_lower(n: int, d: int, diameter: int) -> float:
    s = 2 * diameter / (d * (diameter + 1))
    return 1.0 / (1.0 + s) + (n - 2) ** 2 / (n - 1 - s)


def bounds(g: Graph) -> BoundSet:
    require_connected(g)
    n = g.n
    if n < 3:
        raise FormulaPreconditionError("bounds need n >= 3")
    spec = walk_spectrum(g)
    st = structure(g)
    k_actual = kemeny(g).value
    low_maj, sigma = majorization_lower(n, spec.eigenvalues)
    bs = BoundSet(n=n, k_actual=k_actual, lower_general=(n - 1) ** 2 / n,
                  lower_majorization=low_maj, sigma=sigma, diameter=st.diameter)
    if st.is_bipartite:
        bs.lower_bipartite = (2 * n - 3) / 2
    up, k, theta, why = eigen_upper(n, spec.lambda2)
    bs.upper_eigen, bs.upper_eigen_k, bs.upper_eigen_theta, bs.upper_eigen_reason = up, k, theta, why
    if st.is_regular:
        bs.lower_diameter = regular_diameter_lower(n, st.degree, st.diameter)
    return bs


@dataclass(frozen=True)
class Sandwich:
    lower: float  # (n / max degree) K
    value: float  # R(G)
    upper: float  # (n / min degree) K

    def holds(self, rtol: float = 1e-8) -> bool:
        slack = rtol * (1.0 + self.value)
        return self.lower <= self.value + slack and self.value <= self.upper + slack


def sandwich_check(g: Graph) -> Sandwich:
    require_connected(g)
    k = kemeny(g).value
    d = g.degrees
    return Sandwich(g.n / d.max() * k, resistance_matrix(g).kirchhoff, g.n / d.min() * k)
