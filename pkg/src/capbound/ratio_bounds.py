"""Ratio-type (trace) upper bounds from degree-capped polynomial programs.

For a graph whose closed k-walk counts are vertex-independent, any degree-k
polynomial f with f(valency) = 1 and f >= 0 on the other eigenvalues gives

    alpha_k(G)  <=  theta(G^k)  <=  sum_i m_i f(theta_i)  =  tr f(A),

so the best such bound is a small linear program over the values
x_i = f(theta_i): minimize the weighted trace subject to x_0 = 1, x_i >= 0,
and vanishing divided differences of every order above k (which caps the
interpolant's degree).  This module assembles and solves that LP, exposes
the closed forms available at degree 1, 2, 3, and evaluates the general
ratio bound n.(W(p) - lambda(p)) / (p(valency) - lambda(p)) for a
caller-supplied polynomial on a regular graph.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, InapplicableError, NumericalError
from .graphs import Graph, is_connected
from .polynomials import (
    Poly,
    dd_constraint_rows,
    eval_on_matrix,
    explicit_minor,
    interpolate,
    minor_zero_indices,
)
from .reports import BoundReport
from .simplex import LinearProgram, solve
from .spectra import (
    DEFAULT_CLUSTER_TOL,
    DEFAULT_EIG_TOL,
    Spectrum,
    eigensolve,
    first_walk_defect,
    spectrum_of,
)

__all__ = [
    "MinorSolution",
    "minor_lp",
    "ratio_type_bound",
    "closed_form_H",
    "ratio_type_general",
    "theta_eigen_bound",
    "cycle_theta",
]


@dataclass(frozen=True)
class MinorSolution:
    """Optimal degree-k trace polynomial over a spectrum."""

    k: int
    values: tuple[float, ...]  # f(theta_i), i = 0..d; values[0] == 1
    trace: float  # sum_i m_i f(theta_i)
    poly: Poly
    iterations: int


def minor_lp(spec: Spectrum, k: int) -> MinorSolution:
    """Solve the degree-k trace LP over the given spectrum.

    Admissible degrees run from 0 (constant 1, trace n) to d (all
    non-principal values zero, trace 1).  The LP is always feasible (f = 1)
    and bounded (weights are positive), so failure is a numerical bug, not a
    data condition.
    """
    d = spec.d
    if not 0 <= k <= d:
        raise ArgumentError(f"degree k must be in 0..{d}, got {k}")
    mesh = np.array(spec.values)
    mults = np.array(spec.mults, dtype=float)
    rows = dd_constraint_rows(mesh)
    a_eq = rows[k + 1 :, 1:]
    b_eq = -rows[k + 1 :, 0]
    if a_eq.shape[0] == 0:
        a_eq = np.zeros((0, d))
        b_eq = np.zeros(0)
    res = solve(LinearProgram(mults[1:], a_eq, b_eq))
    if res.status != "optimal":
        raise NumericalError(f"trace LP unexpectedly {res.status}")
    values = (1.0,) + tuple(float(v) for v in res.x)
    trace = float(res.value + mults[0])
    return MinorSolution(k, values, trace, interpolate(mesh, values), res.iterations)


def _spectrum_and_applicability(
    g_or_spec: Graph | Spectrum, k: int, eig_tol: float, cluster_tol: float
) -> tuple[Spectrum, str]:
    """Resolve input to a spectrum, verifying trace-bound hypotheses on graphs."""
    if isinstance(g_or_spec, Spectrum):
        return g_or_spec, "asserted: spectrum input"
    g = g_or_spec
    if not is_connected(g):
        raise ArgumentError("bound methods need a connected graph")
    if not g.is_regular():
        raise InapplicableError("trace bounds need a regular graph", detail=2)
    defect = first_walk_defect(g, k)
    if defect is not None:
        raise InapplicableError(
            f"closed {defect}-walk counts are not vertex-independent", detail=defect
        )
    return spectrum_of(g, eig_tol, cluster_tol), f"verified: walk counts constant to length {k}"


def ratio_type_bound(
    g_or_spec: Graph | Spectrum,
    k: int,
    eig_tol: float = DEFAULT_EIG_TOL,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
) -> BoundReport:
    """Best degree-k trace bound on alpha_k (and on theta of the k-th power).

    Graph input has its hypotheses checked (connected, regular, constant
    closed-walk counts up to length k); spectrum input is taken on faith and
    tagged so in the report.
    """
    spec, applicability = _spectrum_and_applicability(g_or_spec, k, eig_tol, cluster_tol)
    sol = minor_lp(spec, k)
    return BoundReport(
        method="ratio-lp",
        k=k,
        bound=sol.trace,
        applicability=applicability,
        witness=sol.poly,
        meta={"values": sol.values, "lp_iterations": sol.iterations},
    )


def closed_form_H(spec: Spectrum, k: int, n_t: int | None = None) -> BoundReport:
    """Closed-form trace bound H1/H2/H3 for degree k in {1, 2, 3}.

    These are the algebraic evaluations of the explicit minor polynomials —
    an independent route from the LP, kept separate on purpose so the two can
    cross-check each other.  Degree 3 needs the per-vertex triangle count.
    """
    if k not in (1, 2, 3):
        raise ArgumentError(f"closed forms exist for k in {{1,2,3}}, got {k}")
    n = spec.n
    delta = spec.valency
    vals = spec.values
    idx = minor_zero_indices(spec, k, n_t)
    if k == 1:
        theta_d = vals[idx[0]]
        bound = n * (-theta_d) / (delta - theta_d)
    elif k == 2:
        th_prev, th_i = vals[idx[0]], vals[idx[1]]
        bound = n * (delta + th_i * th_prev) / ((delta - th_i) * (delta - th_prev))
    else:
        th_s, th_s1, th_d = (vals[i] for i in idx)
        num = 2.0 * n_t - delta * (th_s + th_s1 + th_d) - th_s * th_s1 * th_d
        den = (delta - th_s) * (delta - th_s1) * (delta - th_d)
        bound = n * num / den
    return BoundReport(
        method=f"H{k}",
        k=k,
        bound=float(bound),
        applicability="asserted: spectrum input",
        witness=explicit_minor(spec, k, n_t),
        meta={"zero_indices": idx},
    )


def ratio_type_general(
    g: Graph, p: Poly, eig_tol: float = DEFAULT_EIG_TOL
) -> BoundReport:
    """General ratio bound for an arbitrary polynomial on a regular graph.

    alpha_k <= n (W(p) - lambda(p)) / (p(valency) - lambda(p)) where W(p) is
    the largest diagonal entry of p(A), lambda(p) the smallest value of p
    over the non-principal eigenvalues, and deg p <= k.  No walk-regularity
    is needed; W(p) absorbs the diagonal variation.
    """
    if not is_connected(g):
        raise ArgumentError("bound methods need a connected graph")
    if not g.is_regular():
        raise InapplicableError("the ratio bound needs a regular graph", detail=2)
    raw = eigensolve(g, eig_tol)
    top = float(raw[0])
    lam = min(p(float(v)) for v in raw[1:])
    p_top = p(top)
    if p_top - lam <= 1e-12 * max(1.0, abs(p_top), abs(lam)):
        raise InapplicableError(
            "p(valency) must exceed the minimum of p over the other eigenvalues"
        )
    w = float(np.diag(eval_on_matrix(p, g.adjacency_matrix())).max())
    bound = g.n * (w - lam) / (p_top - lam)
    return BoundReport(
        method="ratio-general",
        k=max(p.degree, 0),
        bound=float(bound),
        applicability="verified: connected regular graph",
        witness=p,
        meta={"W": w, "lambda": lam},
    )


def theta_eigen_bound(
    g_or_spec: Graph | Spectrum,
    k: int,
    eig_tol: float = DEFAULT_EIG_TOL,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
) -> BoundReport:
    """The trace LP value, reported as an upper bound for theta of the k-th power.

    Numerically identical to :func:`ratio_type_bound`; the separate method
    tag records that the value caps the theta function itself, which is what
    external solver outputs are compared against.
    """
    base = ratio_type_bound(g_or_spec, k, eig_tol, cluster_tol)
    return BoundReport(
        method="theta-eigen",
        k=k,
        bound=base.bound,
        applicability=base.applicability,
        witness=base.witness,
        meta=base.meta,
    )


def cycle_theta(n: int) -> float:
    """Exact theta of the n-cycle: n/2 for even n, the Lovasz value for odd."""
    if n < 3:
        raise ArgumentError(f"cycle needs n >= 3, got {n}")
    if n % 2 == 0:
        return n / 2.0
    c = np.cos(np.pi / n)
    return float(n * c / (1.0 + c))
