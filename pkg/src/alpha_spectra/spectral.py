"""Spectral radius of ``A_alpha(G) = alpha*D(G) + (1 - alpha)*A(G)``.

Two independent routes:

* :func:`spectral_radius` -- power iteration on ``A_alpha + I`` from the
  all-ones vector, with a Rayleigh-quotient readout and the eigen-equation
  residual as the stopping rule.  When plain iteration stalls (tiny spectral
  gap, e.g. two equal hubs at alpha near 1) the iteration operator is
  squared, so each later step advances the power sequence by ``2**j``.
* :func:`spectral_radius_oracle` -- Householder reduction to tridiagonal
  form and Sturm-count bisection for the largest eigenvalue.  No power
  iteration and no LAPACK eigensolver involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError, is_connected

ALPHA_GRID = (0.0, 0.25, 0.5, 0.75, 0.99)
DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 10**6
ORACLE_MAX_N = 12

# plain power steps before the operator starts being squared
_WARMUP = 64


class DisconnectedGraphError(GraphError):
    pass


class ConvergenceError(RuntimeError):
    def __init__(self, rho: float, residual: float, iterations: int):
        super().__init__(
            f"power iteration did not converge after {iterations} steps "
            f"(rho~{rho!r}, residual {residual:.3e})"
        )
        self.rho = rho
        self.residual = residual
        self.iterations = iterations


def check_alpha(alpha: float) -> float:
    """Validate ``0 <= alpha < 1`` and return it as a float."""
    a = float(alpha)
    if not (0.0 <= a < 1.0) or math.isnan(a):
        raise ValueError(f"alpha must satisfy 0 <= alpha < 1, got {alpha!r}")
    return a


@dataclass(frozen=True)
class SpectralResult:
    alpha: float
    rho: float
    x: np.ndarray
    residual: float
    iterations: int


def build_alpha_matrix(g: Graph, alpha: float) -> np.ndarray:
    a = check_alpha(alpha)
    M = np.zeros((g.n, g.n))
    for u, v in g.edges():
        M[u, v] = M[v, u] = 1.0 - a
    M[np.diag_indices(g.n)] = [a * d for d in g.degrees()]
    return M


def spectral_radius(
    g: Graph,
    alpha: float,
    tol: float | None = None,
    max_iter: int = DEFAULT_MAX_ITER,
) -> SpectralResult:
    """Largest eigenvalue of ``A_alpha(g)`` and its positive unit eigenvector.

    Raises :class:`DisconnectedGraphError` for disconnected input and
    :class:`ConvergenceError` if the residual never reaches ``tol`` (default
    ``DEFAULT_TOL``, read at call time so the CLI can override it).
    """
    a = check_alpha(alpha)
    tol = DEFAULT_TOL if tol is None else tol
    if g.n == 0 or not is_connected(g):
        raise DisconnectedGraphError("spectral_radius needs a connected graph")
    M = build_alpha_matrix(g, a)
    op = M + np.eye(g.n)
    x = np.full(g.n, 1.0 / math.sqrt(g.n))
    rho = res = math.nan
    for it in range(1, max_iter + 1):
        y = op @ x
        x = y / np.linalg.norm(y)
        Mx = M @ x
        rho = float(x @ Mx)
        res = float(np.max(np.abs(Mx - rho * x)))
        if res <= tol:
            return SpectralResult(a, rho, x, res, it)
        if it > _WARMUP:
            op = op @ op
            op /= np.max(np.abs(op))
    raise ConvergenceError(rho, res, max_iter)


def rayleigh_quotient(g: Graph, alpha: float, x) -> float:
    a = check_alpha(alpha)
    x = np.asarray(x, dtype=float)
    norm2 = float(x @ x)
    if norm2 == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector")
    diag = sum(d * x[v] ** 2 for v, d in enumerate(g.degrees()))
    off = sum(x[u] * x[v] for u, v in g.edges())
    return (a * diag + 2.0 * (1.0 - a) * off) / norm2


def eigen_residual(g: Graph, alpha: float, x, rho: float) -> float:
    """Max over vertices of ``|alpha d(v) x_v + (1-alpha) sum_{w~v} x_w - rho x_v|``."""
    a = check_alpha(alpha)
    x = np.asarray(x, dtype=float)
    worst = 0.0
    for v in range(g.n):
        lhs = a * g.degree(v) * x[v] + (1.0 - a) * sum(x[w] for w in g.adj[v])
        worst = max(worst, abs(lhs - rho * x[v]))
    return worst


# -- independent oracle ------------------------------------------------------

def tridiagonalize(A: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Householder reduction of a symmetric matrix; returns (diagonal, off-diagonal)."""
    T = np.array(A, dtype=float)
    n = T.shape[0]
    for k in range(n - 2):
        col = T[k + 1:, k]
        alpha = -math.copysign(np.linalg.norm(col), col[0] if col[0] != 0 else 1.0)
        if alpha == 0.0:
            continue
        v = col.copy()
        v[0] -= alpha
        vnorm = np.linalg.norm(v)
        if vnorm == 0.0:
            continue
        v /= vnorm
        # T <- H T H with H = I - 2 v v^T acting on rows/cols k+1..n-1
        sub = T[k + 1:, k:]
        sub -= 2.0 * np.outer(v, v @ sub)
        sub = T[k:, k + 1:]
        sub -= 2.0 * np.outer(sub @ v, v)
    d = np.diag(T).copy()
    e = np.diag(T, 1).copy()
    return d, e


def sturm_count(d: np.ndarray, e: np.ndarray, x: float) -> int:
    """Number of eigenvalues of the tridiagonal matrix (d, e) strictly below ``x``."""
    count = 0
    q = 1.0
    tiny = 1e-300
    for i in range(len(d)):
        q = d[i] - x - (e[i - 1] ** 2 / q if i > 0 else 0.0)
        if q == 0.0:
            q = -tiny
        if q < 0:
            count += 1
    return count


def spectral_radius_oracle(g: Graph, alpha: float, max_n: int = ORACLE_MAX_N) -> float:
    """Largest eigenvalue of ``A_alpha(g)`` by tridiagonalization and bisection."""
    if g.n > max_n:
        raise GraphError(f"oracle limited to n <= {max_n}, got {g.n}")
    if g.n == 0:
        raise GraphError("empty graph")
    d, e = tridiagonalize(build_alpha_matrix(g, alpha))
    if len(d) == 1:
        return float(d[0])
    radius = np.abs(e)
    lo = float(np.min(d - np.concatenate(([0.0], radius)) - np.concatenate((radius, [0.0]))))
    hi = float(np.max(d + np.concatenate(([0.0], radius)) + np.concatenate((radius, [0.0]))))
    lo, hi = lo - 1.0, hi + 1.0
    n = len(d)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if sturm_count(d, e, mid) == n:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
