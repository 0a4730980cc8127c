"""Two-phase dense-tableau simplex for small equality-form LPs.

Solves  min c.x  subject to  A x = b, x >= 0.  Phase one minimizes the sum
of artificial variables to find a basic feasible solution (or prove
infeasibility); phase two optimizes the real objective.  Pivoting follows
Bland's rule throughout — smallest eligible entering index, smallest basic
index on ratio ties — which rules out cycling on the degenerate problems the
eigenvalue LPs routinely produce.

The problems this package builds have a handful of variables, so no effort
is spent on sparsity or revised-simplex updates; the tableau is a dense
numpy array and every pivot is a rank-1 update.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ArgumentError, NumericalError

__all__ = ["LinearProgram", "SimplexResult", "solve"]

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class LinearProgram:
    """min c.x  s.t.  a_eq x = b_eq,  x >= 0."""

    c: np.ndarray
    a_eq: np.ndarray
    b_eq: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.c, dtype=float))
        a = np.atleast_2d(np.asarray(self.a_eq, dtype=float))
        b = np.atleast_1d(np.asarray(self.b_eq, dtype=float))
        if a.shape != (b.size, c.size):
            raise ArgumentError(
                f"shape mismatch: A is {a.shape}, c has {c.size}, b has {b.size}"
            )
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "a_eq", a)
        object.__setattr__(self, "b_eq", b)


@dataclass(frozen=True)
class SimplexResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: float | None
    x: np.ndarray | None
    dual: np.ndarray | None
    iterations: int = 0
    meta: dict = field(default_factory=dict)


def _pivot(t: np.ndarray, basis: list[int], row: int, col: int) -> None:
    t[row] /= t[row, col]
    for r in range(t.shape[0]):
        if r != row and t[r, col] != 0.0:
            t[r] -= t[r, col] * t[row]
    basis[row] = col


def _bland_iterate(
    t: np.ndarray, basis: list[int], ncols: int, tol: float, cap: int, start_iters: int
) -> tuple[str, int]:
    """Run Bland pivots on a priced-out tableau until optimal or unbounded.

    The last tableau row holds reduced costs; the last column the RHS.
    """
    iters = start_iters
    m = t.shape[0] - 1
    while True:
        enter = -1
        for j in range(ncols):
            if t[m, j] < -tol:
                enter = j
                break
        if enter < 0:
            return "optimal", iters
        leave, best, best_var = -1, None, None
        for r in range(m):
            a = t[r, enter]
            if a > tol:
                ratio = t[r, -1] / a
                if best is None or ratio < best - tol or (
                    abs(ratio - best) <= tol and basis[r] < best_var
                ):
                    leave, best, best_var = r, ratio, basis[r]
        if leave < 0:
            return "unbounded", iters
        _pivot(t, basis, leave, enter)
        iters += 1
        if iters > cap:
            raise NumericalError(f"simplex exceeded {cap} pivots")


def solve(lp: LinearProgram, tol: float = DEFAULT_TOL) -> SimplexResult:
    """Solve the LP; returns status, optimum, a vertex, and dual multipliers.

    Dual multipliers y satisfy b.y = optimum (checked by the test suite) and
    are recovered from the final basis by solving B^T y = c_B.
    """
    a = lp.a_eq.copy()
    b = lp.b_eq.copy()
    c = lp.c
    m, n = a.shape
    # Sign-normalize so b >= 0; remember the flips to un-flip the duals.
    flip = b < 0
    a[flip] *= -1.0
    b[flip] *= -1.0
    cap = 10 * (n + m + m) ** 2 + 100

    # Phase 1: artificial basis.
    t = np.zeros((m + 1, n + m + 1))
    t[:m, :n] = a
    t[:m, n : n + m] = np.eye(m)
    t[:m, -1] = b
    basis = list(range(n, n + m))
    t[m, :n] = -a.sum(axis=0)  # price out the artificial objective
    t[m, -1] = -b.sum()
    status, iters = _bland_iterate(t, basis, n + m, tol, cap, 0)
    if status != "optimal":  # cannot happen: phase 1 is bounded below by 0
        raise NumericalError("phase 1 reported unbounded")
    scale = max(1.0, float(np.abs(b).max()) if b.size else 0.0)
    if -t[m, -1] > tol * scale:
        return SimplexResult("infeasible", None, None, None, iters)

    # Drive remaining artificials out of the basis; drop redundant rows.
    drop_rows = []
    for r in range(m):
        if basis[r] >= n:
            piv = next((j for j in range(n) if abs(t[r, j]) > tol), None)
            if piv is None:
                drop_rows.append(r)
            else:
                _pivot(t, basis, r, piv)
                iters += 1
    keep = [r for r in range(m) if r not in drop_rows]
    rows = keep + [m + 0]
    t = t[np.ix_(rows, list(range(n)) + [n + m])]
    basis = [basis[r] for r in keep]

    # Phase 2: restore the true objective, priced out over the basis.
    t[-1, :n] = c
    t[-1, -1] = 0.0
    for r, bv in enumerate(basis):
        if t[-1, bv] != 0.0:
            t[-1] -= t[-1, bv] * t[r]
    status, iters = _bland_iterate(t, basis, n, tol, cap, iters)
    if status == "unbounded":
        return SimplexResult("unbounded", None, None, None, iters)

    x = np.zeros(n)
    for r, bv in enumerate(basis):
        x[bv] = t[r, -1]
    value = float(c @ x)
    # Duals from the final basis of the (sign-normalized) system.
    bmat = lp.a_eq.copy()
    bmat[flip] *= -1.0
    bcols = bmat[np.ix_(keep, basis)]
    try:
        y_kept = np.linalg.solve(bcols.T, c[basis])
    except np.linalg.LinAlgError:  # degenerate basis matrix; report no duals
        y_kept = None
    dual = None
    if y_kept is not None:
        dual = np.zeros(m)
        for i, r in enumerate(keep):
            dual[r] = y_kept[i] * (-1.0 if flip[r] else 1.0)
    return SimplexResult("optimal", value, x, dual, iters)
