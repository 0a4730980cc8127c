"""Adjacency spectra: eigensolver, clustering, and regularity structure.

The eigensolver is a cyclic Jacobi iteration — slow and steady, but it is
self-contained, deterministic, and accurate to a programmable threshold,
which is what the downstream linear programs care about.  Raw eigenvalues
are then *clustered* into a :class:`Spectrum` (distinct value + multiplicity
pairs); all bound formulas operate on clustered spectra.

Also here: partial walk-regularity checks (the hypothesis behind the trace
bounds), strongly-regular parameter handling, and the spectrum of the
(d-1)-st power of an antipodal distance-regular graph, which is strongly
regular with known parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ArgumentError,
    FormatError,
    InapplicableError,
    InfeasibleParametersError,
    NumericalError,
)
from .graphs import Graph, is_connected

__all__ = [
    "Spectrum",
    "SrgParams",
    "AntipodalPower",
    "eigensolve",
    "cluster",
    "spectrum_of",
    "is_k_partially_walk_regular",
    "first_walk_defect",
    "triangles_per_vertex",
    "srg_parameters",
    "srg_spectrum",
    "antipodal_power_spectrum",
    "spectrum_to_csv",
    "spectrum_from_csv",
]

DEFAULT_EIG_TOL = 1e-12
DEFAULT_CLUSTER_TOL = 1e-8
_MAX_SWEEPS = 60


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues in strictly decreasing order with multiplicities."""

    values: tuple[float, ...]
    mults: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(self.mults) or not self.values:
            raise ArgumentError("spectrum needs matching, nonempty values/mults")
        if any(m < 1 or m != int(m) for m in self.mults):
            raise ArgumentError("multiplicities must be positive integers")
        if any(a <= b for a, b in zip(self.values, self.values[1:])):
            raise ArgumentError("eigenvalues must be strictly decreasing")

    @property
    def n(self) -> int:
        """Number of vertices (total multiplicity)."""
        return sum(self.mults)

    @property
    def d(self) -> int:
        """Number of distinct eigenvalues minus one."""
        return len(self.values) - 1

    @property
    def valency(self) -> float:
        """Largest eigenvalue; the degree, for connected regular graphs."""
        return self.values[0]


# ---------------------------------------------------------------------------
# eigensolver
# ---------------------------------------------------------------------------

def _jacobi(a: np.ndarray, tol: float, want_vectors: bool = False):
    """Cyclic Jacobi diagonalization of a symmetric matrix.

    Sweeps rotate every off-diagonal pair; convergence is declared when the
    largest off-diagonal magnitude drops below ``tol * max(1, ||A||_F)``.
    The Frobenius norm is rotation-invariant, so it is computed once; it
    bounds the spectral radius from above.  Raises
    :class:`~capbound.errors.NumericalError` after 60 sweeps.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ArgumentError("matrix must be square")
    if not np.allclose(a, a.T, atol=1e-12):
        raise ArgumentError("matrix must be symmetric")
    vecs = np.eye(n) if want_vectors else None
    if n < 2:
        return np.diag(a).copy(), vecs
    thresh = tol * max(1.0, float(np.linalg.norm(a)))
    for _sweep in range(_MAX_SWEEPS):
        off = np.abs(a - np.diag(np.diag(a))).max()
        if off <= thresh:
            return np.diag(a).copy(), vecs
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= thresh / (4 * n):
                    continue
                app, aqq = a[p, p], a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = c * c * app - 2.0 * s * c * apq + s * s * aqq
                a[q, q] = s * s * app + 2.0 * s * c * apq + c * c * aqq
                a[p, q] = a[q, p] = 0.0
                if want_vectors:
                    vp, vq = vecs[:, p].copy(), vecs[:, q].copy()
                    vecs[:, p] = c * vp - s * vq
                    vecs[:, q] = s * vp + c * vq
    raise NumericalError(
        f"Jacobi iteration did not converge in {_MAX_SWEEPS} sweeps "
        f"(residual {np.abs(a - np.diag(np.diag(a))).max():.3e}, threshold {thresh:.3e})"
    )


def eigensolve(g: Graph | np.ndarray, tol: float = DEFAULT_EIG_TOL) -> np.ndarray:
    """All adjacency eigenvalues, sorted in decreasing order (raw, unclustered)."""
    a = g.adjacency_matrix() if isinstance(g, Graph) else np.asarray(g, dtype=float)
    if a.size == 0:
        raise ArgumentError("eigensolve needs a nonempty matrix")
    diag, _ = _jacobi(a, tol)
    return np.sort(diag)[::-1]


def cluster(raw, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> Spectrum:
    """Group raw eigenvalues into distinct values with multiplicities.

    Consecutive sorted values closer than ``cluster_tol * max(1, rho)`` are
    merged (rho = largest magnitude); each cluster is represented by its mean.
    """
    vals = np.asarray(raw, dtype=float)
    if vals.ndim != 1 or vals.size == 0:
        raise ArgumentError("cluster needs a nonempty vector")
    if np.any(np.diff(vals) > 1e-9):
        raise ArgumentError("cluster expects eigenvalues sorted in decreasing order")
    rho = max(1.0, float(np.abs(vals).max()))
    gap = cluster_tol * rho
    reps, counts = [], []
    start = 0
    for i in range(1, vals.size + 1):
        if i == vals.size or vals[i - 1] - vals[i] > gap:
            reps.append(float(vals[start:i].mean()) + 0.0)  # avoid -0.0
            counts.append(i - start)
            start = i
    return Spectrum(tuple(reps), tuple(counts))


def spectrum_of(
    g: Graph,
    tol: float = DEFAULT_EIG_TOL,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
) -> Spectrum:
    """Clustered adjacency spectrum of a graph."""
    return cluster(eigensolve(g, tol), cluster_tol)


# ---------------------------------------------------------------------------
# walk regularity
# ---------------------------------------------------------------------------

def first_walk_defect(g: Graph, k: int, tol: float = 1e-8):
    """Smallest walk length l <= k whose closed-walk count is not constant.

    Returns ``None`` when diag(A^l) is constant for every l <= k, i.e. the
    graph is k-partially walk-regular.  Lengths 0 and 1 never fail.
    """
    if k < 0:
        raise ArgumentError(f"walk length bound must be nonnegative, got {k}")
    if g.n == 0:
        raise ArgumentError("empty graph")
    a = g.adjacency_matrix()
    p = a.copy()
    for length in range(2, k + 1):
        p = p @ a
        d = np.diag(p)
        if d.max() - d.min() > tol * max(1.0, float(np.abs(d).max())):
            return length
    return None


def is_k_partially_walk_regular(g: Graph, k: int, tol: float = 1e-8) -> bool:
    """True iff the number of closed l-walks is vertex-independent for all l <= k."""
    return first_walk_defect(g, k, tol) is None


def triangles_per_vertex(g: Graph, tol: float = 1e-8) -> int:
    """Triangles through each vertex, for graphs where that count is constant.

    This is diag(A^3)/2; raises if the diagonal is not constant (the count is
    then not a graph invariant and the caller's formula does not apply).
    """
    a = g.adjacency_matrix()
    d = np.diag(a @ a @ a)
    if d.max() - d.min() > tol * max(1.0, float(np.abs(d).max())):
        raise InapplicableError(
            "per-vertex triangle count is not constant", detail=3
        )
    return int(round(float(d[0]) / 2.0))


# ---------------------------------------------------------------------------
# strongly regular graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SrgParams:
    """Parameters (n, k; a, c) of a strongly regular graph.

    ``a`` is the common-neighbour count of adjacent pairs, ``c`` of distinct
    non-adjacent pairs.
    """

    n: int
    k: int
    a: int
    c: int

    def __str__(self):
        return f"srg({self.n},{self.k},{self.a},{self.c})"


def srg_parameters(g: Graph) -> SrgParams | None:
    """Detect strongly-regular structure; None when g is not SRG.

    Complete and edgeless graphs are excluded, as are disconnected ones
    (primitive parameters only: 1 <= c).
    """
    n = g.n
    if n < 4 or not g.is_regular() or not is_connected(g):
        return None
    k = g.degree(0)
    if k == 0 or k == n - 1:
        return None
    a = c = None
    for u in range(n):
        ru = g.rows[u]
        for v in range(u + 1, n):
            common = (ru & g.rows[v]).bit_count()
            if ru >> v & 1:
                if a is None:
                    a = common
                elif common != a:
                    return None
            else:
                if c is None:
                    c = common
                elif common != c:
                    return None
    if a is None or c is None or c == 0:
        return None
    return SrgParams(n, k, a, c)


def srg_spectrum(p: SrgParams) -> Spectrum:
    """Spectrum {k, theta^f, tau^g} of a strongly regular graph.

    Validates the counting identity k(k-a-1) = (n-k-1)c and integrality of
    the multiplicities; infeasible parameter sets raise
    :class:`~capbound.errors.InfeasibleParametersError`.
    """
    n, k, a, c = p.n, p.k, p.a, p.c
    if not (0 < k < n - 1 and 0 <= a < k and 1 <= c <= k):
        raise InfeasibleParametersError(f"{p}: parameter ranges violated")
    if k * (k - a - 1) != (n - k - 1) * c:
        raise InfeasibleParametersError(f"{p}: k(k-a-1) != (n-k-1)c")
    disc = (a - c) ** 2 + 4 * (k - c)
    if disc <= 0:
        raise InfeasibleParametersError(f"{p}: discriminant not positive")
    sq = math.sqrt(disc)
    theta = (a - c + sq) / 2.0
    tau = (a - c - sq) / 2.0
    m_theta = ((n - 1) * tau + k) / (tau - theta)
    m_tau = ((n - 1) * theta + k) / (theta - tau)
    for name, m in (("theta", m_theta), ("tau", m_tau)):
        if m < 1 - 1e-6 or abs(m - round(m)) > 1e-6:
            raise InfeasibleParametersError(
                f"{p}: multiplicity of {name} is {m:.6f}, not a positive integer"
            )
    return Spectrum(
        (float(k), theta, tau), (1, int(round(m_theta)), int(round(m_tau)))
    )


@dataclass(frozen=True)
class AntipodalPower:
    """The (d-1)-st power of an r-antipodal distance-regular graph.

    That power is a disjoint-union-free strongly regular graph (a complete
    multipartite complement pattern): parameters (n, n-r; n-2r, n-r), spectrum
    {n-r, 0^{n-n/r}, (-r)^{n/r-1}}, and its capacity is exactly r — the
    antipodal classes are the optimum independent sets at every power.
    """

    params: SrgParams
    spectrum: Spectrum
    capacity: int


def antipodal_power_spectrum(n: int, r: int) -> AntipodalPower:
    """Parameters/spectrum/capacity for the (d-1)-power of an r-antipodal graph.

    ``n`` is the vertex count and ``r`` the antipodal class size; r must
    divide n, with 2 <= r and at least two classes.
    """
    if r < 2 or n % r != 0 or n // r < 2:
        raise ArgumentError(f"need r >= 2 dividing n with n/r >= 2, got n={n}, r={r}")
    params = SrgParams(n, n - r, n - 2 * r, n - r)
    spec = Spectrum(
        (float(n - r), 0.0, float(-r)),
        (1, n - n // r, n // r - 1),
    )
    return AntipodalPower(params, spec, r)


# ---------------------------------------------------------------------------
# CSV interchange
# ---------------------------------------------------------------------------

def spectrum_to_csv(spec: Spectrum) -> str:
    """Serialize as ``theta,mult`` lines under a header row."""
    lines = ["theta,mult"]
    lines += [f"{v:.17g},{m}" for v, m in zip(spec.values, spec.mults)]
    return "\n".join(lines) + "\n"


def spectrum_from_csv(text: str) -> Spectrum:
    """Parse the ``theta,mult`` CSV produced by :func:`spectrum_to_csv`."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].replace(" ", "").lower() != "theta,mult":
        raise FormatError("spectrum CSV must start with a 'theta,mult' header")
    values, mults = [], []
    for idx, ln in enumerate(lines[1:], start=2):
        parts = ln.split(",")
        if len(parts) != 2:
            raise FormatError(f"spectrum CSV line {idx}: expected 2 fields")
        try:
            values.append(float(parts[0]))
            mults.append(int(parts[1]))
        except ValueError as exc:
            raise FormatError(f"spectrum CSV line {idx}: {exc}") from exc
    try:
        return Spectrum(tuple(values), tuple(mults))
    except ArgumentError as exc:
        raise FormatError(f"spectrum CSV invalid: {exc}") from exc
