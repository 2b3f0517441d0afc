"""Concentration operator of a set on a torus, restricted to a finite band.

For lattice modes m_1..m_N and a set E inside one period, the Gram matrix

    G[j, k] = (1/L) integral_E exp(i 2 pi (m_j - m_k) x / L) dx

is Hermitian positive semidefinite with eigenvalues in [0, 1].  Its smallest
eigenvalue is the exact squared p = 2 constant: the worst value of
||f||_{L2(E)}^2 / ||f||_{L2(torus)}^2 over functions with that spectrum.
Entries come from the antiderivative of the character, so the matrix is
exact up to rounding and the module serves as the independent oracle for the
closed-form bounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bandlimited import BandSpec, lattice_indices
from .bounds import (
    DEFAULT_CONSTANTS,
    BoundConstants,
    theorem1_bound,
    theorem1_bound_log10,
    theorem2_bound,
    theorem2_bound_log10,
)
from .errors import DuplicateFrequencyError, SizeLimitError
from .sets import IntervalSet, thickness

TWO_PI = 2.0 * math.pi

# Dense eigensolves above this size are refused.
MAX_DENSE_SIZE = 2000

# Residual contract: ||G v - lambda v|| <= RESIDUAL_TOL * ||G||_2.
RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class GramMatrix:
    """Frequencies, period and the Hermitian matrix itself (read-only)."""

    freqs: tuple[int, ...]
    period: float
    matrix: np.ndarray

    @property
    def size(self) -> int:
        return len(self.freqs)

    @property
    def measure_fraction(self) -> float:
        """|E| / L; equals every diagonal entry."""
        return float(self.matrix[0, 0].real)


def _pieces_in_period(E: IntervalSet, period: float) -> tuple[tuple[float, float], ...]:
    if E.period is not None:
        ratio = period / E.period
        if abs(ratio - round(ratio)) > 1e-9 or round(ratio) < 1:
            raise ValueError("set period must divide the torus period")
        return E.materialize(0.0, period)
    if E.intervals[0][0] < -1e-9 or E.intervals[-1][1] > period + 1e-9:
        raise ValueError("aperiodic set must lie inside one period [0, L]")
    return E.intervals


def gram_matrix(freqs, E: IntervalSet, period: float) -> GramMatrix:
    """Exact Gram matrix of the band-limited concentration operator.

    Parameters
    ----------
    freqs : iterable of int
        Distinct lattice modes m_j (frequency 2 pi m_j / period).
    E : IntervalSet
        Observation set; periodic sets are unrolled over one torus period.
    period : float
        Torus length L.

    Returns
    -------
    GramMatrix
        Hermitian by construction: entries are computed for nonnegative
        mode differences and mirrored by conjugation.
    """
    ms = np.asarray(list(freqs), dtype=np.int64)
    if ms.size == 0:
        raise ValueError("need at least one frequency")
    if np.unique(ms).size != ms.size:
        raise DuplicateFrequencyError("repeated lattice mode")
    period = float(period)
    pieces = _pieces_in_period(E, period)
    if not pieces:
        raise ValueError("set has no mass inside one period")
    starts = np.array([a for a, _ in pieces])
    stops = np.array([b for _, b in pieces])

    diff = ms[:, None] - ms[None, :]
    unique = np.unique(np.abs(diff))
    values = np.empty(unique.size, dtype=np.complex128)
    for idx, delta in enumerate(unique.tolist()):
        if delta == 0:
            values[idx] = np.sum(stops - starts) / period
        else:
            kappa = TWO_PI * delta / period
            seg = (np.exp(1j * kappa * stops) - np.exp(1j * kappa * starts)).sum()
            values[idx] = seg / (1j * kappa * period)
    table = values[np.searchsorted(unique, np.abs(diff))]
    matrix = np.where(diff >= 0, table, np.conj(table))
    matrix.setflags(write=False)
    return GramMatrix(freqs=tuple(ms.tolist()), period=period, matrix=matrix)


def jacobi_eigh(
    a: np.ndarray, rel_tol: float = 1e-13, max_sweeps: int = 30
) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi eigendecomposition of a real symmetric matrix.

    Sweeps rotate away off-diagonal entries until their Frobenius mass is
    below ``rel_tol`` times the matrix norm.  Quadratically convergent and
    dependency-free; used as the cross-check route for the LAPACK solve.
    """
    A = np.array(a, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("matrix must be square")
    V = np.eye(n)
    scale = float(np.linalg.norm(A))
    if scale == 0.0 or n == 1:
        w = np.diag(A).copy()
        order = np.argsort(w, kind="stable")
        return w[order], V[:, order]
    skip_tol = 0.01 * rel_tol * scale / n
    for _ in range(max_sweeps):
        off = math.sqrt(max(0.0, float((A * A).sum() - (np.diag(A) ** 2).sum())))
        if off <= rel_tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= skip_tol:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                col_p = A[:, p].copy()
                col_q = A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                vec_p = V[:, p].copy()
                vec_q = V[:, q].copy()
                V[:, p] = c * vec_p - s * vec_q
                V[:, q] = s * vec_p + c * vec_q
    w = np.diag(A).copy()
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]


def _real_embedding(G: np.ndarray) -> np.ndarray:
    """[[X, -Y], [Y, X]] for G = X + iY; same spectrum, each value twice."""
    X = G.real
    Y = G.imag
    top = np.hstack([X, -Y])
    bottom = np.hstack([Y, X])
    return np.vstack([top, bottom])


@dataclass(frozen=True)
class ConcentrationResult:
    """Smallest eigenvalue with its witness and the full spectrum."""

    lambda_min: float
    witness: np.ndarray
    eigenvalues: np.ndarray
    residual: float
    gram: GramMatrix


def min_concentration(
    freqs, E: IntervalSet, period: float, method: str = "lapack"
) -> ConcentrationResult:
    """Smallest concentration eigenvalue and a unit witness vector.

    Parameters
    ----------
    method : {"lapack", "jacobi"}
        "lapack" solves the complex Hermitian problem directly; "jacobi"
        runs the cyclic Jacobi solver on the doubled real-symmetric
        embedding.  Both must satisfy the residual contract
        ``||G v - lambda v|| <= 1e-10 ||G||``.
    """
    g = gram_matrix(freqs, E, period)
    n = g.size
    if n > MAX_DENSE_SIZE:
        raise SizeLimitError(f"{n} frequencies exceed the dense cap {MAX_DENSE_SIZE}")
    G = g.matrix
    if method == "lapack":
        w, V = np.linalg.eigh(G)
        lam = float(w[0])
        witness = V[:, 0]
        eigenvalues = w
    elif method == "jacobi":
        w2, V2 = jacobi_eigh(_real_embedding(G))
        lam = float(w2[0])
        witness = V2[:n, 0] + 1j * V2[n:, 0]
        eigenvalues = w2[0::2].copy()
    else:
        raise ValueError(f"unknown method {method!r}")
    witness = witness / np.linalg.norm(witness)
    norm = float(np.max(np.abs(eigenvalues))) if eigenvalues.size else 0.0
    residual = float(np.linalg.norm(G @ witness - lam * witness))
    if residual > RESIDUAL_TOL * max(norm, 1e-300):
        raise RuntimeError(
            f"eigensolver residual {residual:.3e} violates the contract"
        )
    eigenvalues = np.asarray(eigenvalues, dtype=float)
    eigenvalues.setflags(write=False)
    witness.setflags(write=False)
    return ConcentrationResult(
        lambda_min=lam,
        witness=witness,
        eigenvalues=eigenvalues,
        residual=residual,
        gram=g,
    )


@dataclass(frozen=True)
class SharpnessReport:
    """Exact p = 2 constant next to the closed-form lower bound."""

    gamma: float
    ab: float
    n_bands: int
    n_freqs: int
    lambda_min: float
    exact: float
    bound: float
    log10_bound: float
    margin: float
    log10_margin: float
    holds: bool


def sharpness_gap(
    spec: BandSpec,
    E: IntervalSet,
    period: float,
    constants: BoundConstants = DEFAULT_CONSTANTS,
    window: float = 1.0,
) -> SharpnessReport:
    """Compare sqrt(lambda_min) with the matching closed-form bound at p = 2.

    The thickness of E is certified at the given window length; the bound is
    the single-band form for one band and the n-band tower otherwise.
    `margin` is exact/bound (inf when the bound underflows to zero);
    `log10_margin` stays finite as long as the exact value is positive.
    """
    ms = lattice_indices(spec, period)
    result = min_concentration(ms, E, period)
    cert = thickness(E, window)
    ab = window * spec.width
    exact = math.sqrt(max(result.lambda_min, 0.0))
    if spec.count == 1:
        bound = theorem1_bound(cert.gamma, ab, 2, constants)
        log10_bound = theorem1_bound_log10(cert.gamma, ab, 2, constants)
    else:
        bound = theorem2_bound(cert.gamma, spec.count, ab, 2, constants)
        log10_bound = theorem2_bound_log10(cert.gamma, spec.count, ab, 2, constants)
    margin = math.inf if bound == 0.0 else exact / bound
    log10_margin = math.log10(exact) - log10_bound if exact > 0 else -math.inf
    return SharpnessReport(
        gamma=cert.gamma,
        ab=ab,
        n_bands=spec.count,
        n_freqs=int(ms.size),
        lambda_min=result.lambda_min,
        exact=exact,
        bound=bound,
        log10_bound=log10_bound,
        margin=margin,
        log10_margin=log10_margin,
        holds=exact >= bound,
    )
