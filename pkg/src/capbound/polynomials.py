"""Real polynomials on eigenvalue meshes.

Coefficients are stored lowest-degree first, trimmed so that the leading
coefficient is nonzero (the zero polynomial is ``(0.0,)``).  Alongside basic
evaluation there are divided differences over a mesh (including the linear
coefficient rows used to assemble degree-cap constraints for the minor LP),
Newton interpolation back to monomial form, and the closed-form minor
polynomials of low degree:

* degree 1: single zero at the smallest eigenvalue,
* degree 2: zeros at the largest eigenvalue <= -1 and its predecessor,
* degree 3: zeros at a threshold-selected consecutive pair and the smallest
  eigenvalue (the threshold depends on the per-vertex triangle count),
* degree d: zeros at every non-principal eigenvalue (the Hoffman case,
  normalized to 1 at the valency).

All minor polynomials are normalized to take value 1 at the largest
eigenvalue.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, FormatError, InapplicableError
from .spectra import Spectrum

__all__ = [
    "Poly",
    "divided_difference",
    "newton_coefficients",
    "interpolate",
    "dd_constraint_rows",
    "minor_zero_indices",
    "explicit_minor",
    "eval_on_spectrum",
    "trace_on_spectrum",
    "eval_on_matrix",
    "poly_to_csv",
    "poly_from_csv",
]


def _trim(coeffs) -> tuple[float, ...]:
    c = list(float(x) for x in coeffs)
    while len(c) > 1 and c[-1] == 0.0:
        c.pop()
    return tuple(c) if c else (0.0,)


@dataclass(frozen=True)
class Poly:
    """A real polynomial; ``coeffs[i]`` multiplies x**i."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial reports -1."""
        if len(self.coeffs) == 1 and self.coeffs[0] == 0.0:
            return -1
        return len(self.coeffs) - 1

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale(self, s: float) -> "Poly":
        return Poly(tuple(c * s for c in self.coeffs))

    def mul_linear(self, root: float) -> "Poly":
        """Multiply by the factor (x - root)."""
        shifted = (0.0,) + self.coeffs
        lowered = tuple(-root * c for c in self.coeffs) + (0.0,)
        return Poly(tuple(a + b for a, b in zip(shifted, lowered)))

    @staticmethod
    def from_roots(roots, leading: float = 1.0) -> "Poly":
        p = Poly((leading,))
        for r in roots:
            p = p.mul_linear(float(r))
        return p


# ---------------------------------------------------------------------------
# divided differences and interpolation
# ---------------------------------------------------------------------------

def _check_mesh(mesh) -> np.ndarray:
    m = np.asarray(mesh, dtype=float)
    if m.ndim != 1 or m.size == 0:
        raise ArgumentError("mesh must be a nonempty vector")
    if len(set(m.tolist())) != m.size:
        raise ArgumentError("mesh points must be distinct")
    return m


def newton_coefficients(mesh, values) -> np.ndarray:
    """Newton-form coefficients f[x0], f[x0,x1], ..., f[x0..xm]."""
    x = _check_mesh(mesh)
    col = np.asarray(values, dtype=float).copy()
    if col.shape != x.shape:
        raise ArgumentError("mesh and values must have matching length")
    out = np.empty_like(col)
    out[0] = col[0]
    for order in range(1, x.size):
        col = (col[1:] - col[:-1]) / (x[order:] - x[:-order])
        out[order] = col[0]
    return out


def divided_difference(mesh, values) -> float:
    """The full-order divided difference f[x0, ..., xm] over the whole mesh."""
    return float(newton_coefficients(mesh, values)[-1])


def interpolate(mesh, values) -> Poly:
    """The unique interpolating polynomial through (mesh[i], values[i])."""
    x = _check_mesh(mesh)
    coeffs = newton_coefficients(x, values)
    # Horner expansion of the Newton form into monomial coefficients.
    p = Poly((float(coeffs[-1]),))
    for i in range(x.size - 2, -1, -1):
        p = p.mul_linear(float(x[i]))
        p = Poly((p.coeffs[0] + float(coeffs[i]),) + p.coeffs[1:])
    return p


def dd_constraint_rows(mesh) -> np.ndarray:
    """Rows expressing each divided difference as a linear map of the values.

    Row m (0-based) gives weights w with f[x0..xm] = sum_j w[j] * f(x_j) —
    obtained by running the divided-difference recursion on coefficient
    vectors instead of numbers.  Used to cap the degree of an interpolant by
    zeroing the trailing rows.
    """
    x = _check_mesh(mesh)
    npts = x.size
    table = [np.eye(npts)[i] for i in range(npts)]
    rows = [table[0].copy()]
    for order in range(1, npts):
        table = [
            (table[i + 1] - table[i]) / (x[i + order] - x[i])
            for i in range(npts - order)
        ]
        rows.append(table[0].copy())
    return np.vstack(rows)


# ---------------------------------------------------------------------------
# explicit minor polynomials
# ---------------------------------------------------------------------------

def _normalized_from_zeros(spec: Spectrum, zeros) -> Poly:
    p = Poly.from_roots(zeros)
    top = p(spec.values[0])
    if abs(top) < 1e-300:
        raise InapplicableError("normalization impossible: zero at the valency")
    return p.scale(1.0 / top)


def minor_zero_indices(spec: Spectrum, k: int, n_t: int | None = None) -> tuple[int, ...]:
    """Zero positions (indices into spec.values) of the closed-form minor poly.

    Degree 1 takes the smallest eigenvalue.  Degree 2 takes the largest
    eigenvalue <= -1 (a tie at -1 counts) together with its predecessor.
    Degree 3 takes the smallest eigenvalue >= a triangle-count-dependent
    threshold, its successor, and the smallest eigenvalue.  Degree d takes
    every non-principal eigenvalue.  Selection failures raise
    :class:`~capbound.errors.InapplicableError`.
    """
    vals = spec.values
    d = spec.d
    delta = vals[0]
    if d < 1:
        raise InapplicableError("need at least two distinct eigenvalues")
    if k == d:
        return tuple(range(1, d + 1))
    if k == 1:
        return (d,)
    if k == 2:
        if d < 2:
            raise InapplicableError("degree-2 form needs d >= 2")
        idx = None
        for i in range(1, d + 1):
            if vals[i] <= -1.0 + 1e-9:
                idx = i
                break
        if idx is None:
            raise InapplicableError("no eigenvalue <= -1", detail=k)
        if idx < 2:
            raise InapplicableError(
                "largest eigenvalue <= -1 has no non-principal predecessor", detail=k
            )
        return (idx - 1, idx)
    if k == 3:
        if d < 3:
            raise InapplicableError("degree-3 form needs d >= 3")
        if n_t is None:
            raise ArgumentError("degree-3 form needs the per-vertex triangle count")
        theta_d = vals[-1]
        if theta_d >= -1.0 - 1e-12:
            raise InapplicableError("degree-3 form needs smallest eigenvalue < -1")
        big_delta = 2.0 * n_t
        threshold = -(delta * delta + delta * theta_d - big_delta) / (
            delta * (theta_d + 1.0)
        )
        s = None
        for i in range(d, 0, -1):
            if vals[i] >= threshold - 1e-12:
                s = i
                break
        if s is None:
            raise InapplicableError(
                f"no non-principal eigenvalue >= threshold {threshold:.6g}", detail=k
            )
        if s >= d:
            raise InapplicableError(
                "threshold selects the smallest eigenvalue; no consecutive pair",
                detail=k,
            )
        return (s, s + 1, d)
    raise ArgumentError(f"no closed form for degree {k} (d={d}); use the LP")


def explicit_minor(spec: Spectrum, k: int, n_t: int | None = None) -> Poly:
    """Closed-form minor polynomial of degree k in {0, 1, 2, 3, d}.

    Normalized to 1 at the valency, nonnegative on the rest of the mesh.
    Degree 3 requires the per-vertex triangle count ``n_t``.  Degrees other
    than 0, 1, 2, 3, d have no closed form here; use the LP instead.
    """
    if k == 0:
        return Poly((1.0,))
    idx = minor_zero_indices(spec, k, n_t)
    return _normalized_from_zeros(spec, [spec.values[i] for i in idx])


# ---------------------------------------------------------------------------
# evaluation helpers
# ---------------------------------------------------------------------------

def eval_on_spectrum(p: Poly, spec: Spectrum) -> np.ndarray:
    """Values of p at each distinct eigenvalue."""
    return np.array([p(v) for v in spec.values])


def trace_on_spectrum(p: Poly, spec: Spectrum) -> float:
    """Trace of p(A) computed spectrally: sum of m_i * p(theta_i)."""
    return float(sum(m * p(v) for v, m in zip(spec.values, spec.mults)))


def eval_on_matrix(p: Poly, a: np.ndarray) -> np.ndarray:
    """Horner evaluation of p at a square matrix."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    out = np.zeros_like(a)
    for c in reversed(p.coeffs):
        out = out @ a
        out[np.diag_indices(n)] += c
    return out


# ---------------------------------------------------------------------------
# CSV interchange
# ---------------------------------------------------------------------------

def poly_to_csv(p: Poly) -> str:
    """One line: coefficients lowest-degree first."""
    return ",".join(f"{c:.17g}" for c in p.coeffs)


def poly_from_csv(text: str) -> Poly:
    parts = [t.strip() for t in text.strip().split(",") if t.strip()]
    if not parts:
        raise FormatError("polynomial CSV is empty")
    try:
        return Poly(tuple(float(t) for t in parts))
    except ValueError as exc:
        raise FormatError(f"polynomial CSV invalid: {exc}") from exc
