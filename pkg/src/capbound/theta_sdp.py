"""Export of the theta SDP and import of external solver results.

The theta function of a graph is the optimum of

    max tr(J B)   s.t.   B_uv = 0 on edges,  tr B = 1,  B >= 0 (psd),

which is exactly the dual side of the sparse SDPA input format: F0 = J,
one constraint matrix E_uv per edge with right-hand side 0, and the
identity with right-hand side 1.  This module writes that ``.dat-s`` file
byte-deterministically and parses the objective lines of a solver's output.
**Solving is always external**; nothing here computes theta itself, and the
import path cross-checks values against the eigenvalue cage
[alpha_k - tol, trace bound + tol].
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import ArgumentError, FormatError
from .graphs import Graph, is_connected

__all__ = ["ThetaSolution", "export_sdpa", "import_solution", "cage_check"]

log = logging.getLogger(__name__)

GAP_WARN = 1e-5


def export_sdpa(g: Graph, path: str | Path | None = None) -> str:
    """Render the theta SDP for g in sparse SDPA format (.dat-s).

    One constraint per edge plus the trace constraint; F0 is the all-ones
    matrix.  Output is deterministic byte-for-byte for a given graph.  When
    ``path`` is given the text is also written there.
    """
    if g.n < 1:
        raise ArgumentError("export needs a nonempty graph")
    if not is_connected(g):
        raise ArgumentError("bound methods need a connected graph")
    edges = list(g.edges())
    m = len(edges) + 1
    lines = [
        f"* theta SDP: {g.n} vertices, {len(edges)} edges",
        f"{m} = mDIM",
        "1 = nBLOCK",
        f"{g.n} = blockStruct",
        " ".join(["0.0"] * len(edges) + ["1.0"]),
    ]
    for i in range(1, g.n + 1):
        for j in range(i, g.n + 1):
            lines.append(f"0 1 {i} {j} 1.0")
    for t, (u, v) in enumerate(edges, start=1):
        lines.append(f"{t} 1 {u + 1} {v + 1} 1.0")
    for i in range(1, g.n + 1):
        lines.append(f"{m} 1 {i} {i} 1.0")
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


@dataclass(frozen=True)
class ThetaSolution:
    """Objective values parsed from an external SDP solver's output."""

    value: float  # primal objective: the theta value
    gap: float  # |primal - dual|
    primal: float
    dual: float
    low_precision: bool  # gap exceeded the warning threshold


_FIELD = {
    "objValPrimal": re.compile(r"objValPrimal\s*=\s*([-+0-9.eEdD]+)"),
    "objValDual": re.compile(r"objValDual\s*=\s*([-+0-9.eEdD]+)"),
}


def import_solution(source: str | Path) -> ThetaSolution:
    """Parse a solver output file (or its text) for the objective values.

    Accepts a path or raw text.  Raises
    :class:`~capbound.errors.FormatError` naming whichever objective field
    is missing.  A primal-dual gap above 1e-5 is flagged and logged, not
    fatal — the caller decides how much precision the use needs.
    """
    text = str(source)
    if "\n" not in text and Path(text).is_file():
        text = Path(text).read_text()
    found = {}
    for name, rx in _FIELD.items():
        m = rx.search(text)
        if not m:
            raise FormatError(f"solver output is missing the field {name}")
        try:
            found[name] = float(m.group(1).replace("D", "e").replace("d", "e"))
        except ValueError as exc:
            raise FormatError(f"unparsable value for {name}: {m.group(1)!r}") from exc
    primal = found["objValPrimal"]
    dual = found["objValDual"]
    gap = abs(primal - dual)
    low = gap > GAP_WARN
    if low:
        log.warning("theta solution has a large primal-dual gap: %.3e", gap)
    return ThetaSolution(primal, gap, primal, dual, low)


def cage_check(value: float, alpha: float, trace_bound: float, tol: float = 1e-5) -> bool:
    """Is an imported theta value inside [alpha - tol, trace bound + tol]?"""
    return alpha - tol <= value <= trace_bound + tol
