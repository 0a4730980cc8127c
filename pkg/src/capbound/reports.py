"""The record type every bound computation returns."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .polynomials import Poly

__all__ = ["BoundReport"]


@dataclass(frozen=True)
class BoundReport:
    """One upper bound with its provenance.

    ``method`` is one of ``ratio-lp``, ``H1``, ``H2``, ``H3``,
    ``ratio-general``, ``theta-eigen``, ``rank``.  The first six bound the
    theta function of the k-th power (hence also its capacity); ``rank``
    bounds the capacity only.  ``applicability`` records whether the method's
    hypotheses were verified on a graph or asserted by the caller (spectrum
    input).  ``witness`` is the certifying polynomial when there is one.
    """

    method: str
    k: int
    bound: float
    applicability: str
    witness: Poly | None = None
    meta: dict = field(default_factory=dict)

    @property
    def floor(self) -> int:
        """Integer form of the bound, forgiving 1e-9 of numerical fuzz."""
        return math.floor(self.bound + 1e-9)

    @property
    def bounds_theta(self) -> bool:
        """Whether this method bounds the theta function, not just capacity."""
        return self.method != "rank"
