"""Dense numeric kernels: walk spectrum, Laplacian pseudoinverse, linear solves.

The walk operator ``P = D^-1 A`` is never handed to a nonsymmetric solver; its
eigenvalues come from the similar symmetric matrix ``D^-1/2 A D^-1/2``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .graph_core import Graph, require_connected

PINV_CUTOFF = 1e-10


class NumericKernelError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray  # descending

    @property
    def lambda2(self) -> float:
        return float(self.eigenvalues[1])

    def __len__(self):
        return len(self.eigenvalues)


def _finite(x: np.ndarray, what: str) -> np.ndarray:
    if not np.all(np.isfinite(x)):
        raise NumericKernelError(f"non-finite values in {what}")
    return x


def walk_spectrum(g: Graph) -> Spectrum:
    """Eigenvalues of the simple random walk transition matrix, descending."""
    require_connected(g)
    a = g.adjacency_matrix()
    s = 1.0 / np.sqrt(g.degrees.astype(np.float64))
    sym = a * s[:, None] * s[None, :]
    try:
        vals = scipy.linalg.eigvalsh(sym)
    except np.linalg.LinAlgError as exc:
        raise NumericKernelError(f"eigensolver failed on {g!r}: {exc}") from exc
    return Spectrum(_finite(vals[::-1].copy(), f"spectrum of {g!r}"))


def laplacian_pinv(g: Graph) -> np.ndarray:
    """Moore-Penrose pseudoinverse of ``L = D - A``.

    Eigenvalues below ``PINV_CUTOFF * lambda_max`` are treated as zero; a
    connected graph has exactly one of those.
    """
    require_connected(g)
    lap = g.laplacian()
    try:
        vals, vecs = scipy.linalg.eigh(lap)
    except np.linalg.LinAlgError as exc:
        raise NumericKernelError(f"eigensolver failed on Laplacian of {g!r}: {exc}") from exc
    keep = vals > PINV_CUTOFF * max(vals[-1], 1.0)
    inv = np.zeros_like(vals)
    inv[keep] = 1.0 / vals[keep]
    lp = (vecs * inv) @ vecs.T
    lp = 0.5 * (lp + lp.T)
    return _finite(lp, f"Laplacian pseudoinverse of {g!r}")


def solve_linear(a: np.ndarray, b: np.ndarray, name: str = "linear system") -> np.ndarray:
    """Solve ``a x = b``; refuses systems that are singular to working precision."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    _finite(a, name)
    _finite(b, name)
    if a.shape[0] == 0:
        return np.zeros(0)
    try:
        with np.errstate(all="raise"):
            x = scipy.linalg.solve(a, b, check_finite=False)
    except (np.linalg.LinAlgError, FloatingPointError) as exc:
        raise NumericKernelError(f"{name} is singular to working precision") from exc
    if np.linalg.cond(a) > 1.0 / np.finfo(float).eps:
        raise NumericKernelError(f"{name} is singular to working precision")
    return _finite(x, name)
