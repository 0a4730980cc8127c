"""Exact small-scale ground truth: independent sets and capacity pincers.

The upper-bound machinery elsewhere is only trustworthy next to an exact
lower bound, so this module computes maximum independent sets by branch and
bound on the bitset adjacency rows.  The bound is a greedy clique cover of
the candidate pool (an independent set meets each clique at most once); the
branch vertex is the one of largest degree inside the pool.  Everything is
deterministic: fixed vertex order, ties to the smallest index.

A node budget caps the search; a blown budget still returns the incumbent
(a valid lower bound) with ``complete=False``.

``sandwich_verdict`` runs the pincer: alpha of the k-th power (optionally
sharpened by a strong-product level) against the supplied upper bounds, and
declares the capacity exactly determined when the two sides meet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ArgumentError
from .graphs import Graph, power, strong_product
from .reports import BoundReport

__all__ = [
    "MisResult",
    "CapacityLower",
    "Verdict",
    "max_independent_set",
    "alpha_k",
    "capacity_lower_bound",
    "sandwich_verdict",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 50_000_000


@dataclass(frozen=True)
class MisResult:
    size: int
    witness: tuple[int, ...]
    nodes: int
    complete: bool


def _clique_cover_bound(pool: int, rows) -> int:
    cliques: list[int] = []
    m = pool
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        for i, members in enumerate(cliques):
            if members & ~rows[v] == 0:
                cliques[i] = members | low
                break
        else:
            cliques.append(low)
    return len(cliques)


def max_independent_set(g: Graph, budget: int = DEFAULT_BUDGET) -> MisResult:
    """Maximum independent set by branch and bound; exact when ``complete``."""
    if budget < 1:
        raise ArgumentError(f"budget must be positive, got {budget}")
    n = g.n
    if n == 0:
        return MisResult(0, (), 0, True)
    rows = g.rows
    state = {"best": 0, "mask": 0, "nodes": 0, "aborted": False}

    def expand(pool: int, cur_mask: int, cur_size: int) -> None:
        if state["aborted"]:
            return
        state["nodes"] += 1
        if state["nodes"] > budget:
            state["aborted"] = True
            return
        if pool == 0:
            if cur_size > state["best"]:
                state["best"], state["mask"] = cur_size, cur_mask
            return
        if cur_size + _clique_cover_bound(pool, rows) <= state["best"]:
            return
        best_v, best_d = -1, -1
        m = pool
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            dv = (rows[v] & pool).bit_count()
            if dv > best_d:
                best_d, best_v = dv, v
        vbit = 1 << best_v
        expand(pool & ~(rows[best_v] | vbit), cur_mask | vbit, cur_size + 1)
        expand(pool & ~vbit, cur_mask, cur_size)

    expand((1 << n) - 1, 0, 0)
    witness = tuple(i for i in range(n) if state["mask"] >> i & 1)
    return MisResult(state["best"], witness, state["nodes"], not state["aborted"])


def alpha_k(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> MisResult:
    """alpha of the k-th power: largest set pairwise further apart than k."""
    if k < 1:
        raise ArgumentError(f"k must be >= 1, got {k}")
    return max_independent_set(power(g, k), budget)


@dataclass(frozen=True)
class CapacityLower:
    """Best capacity lower bound from strong-product levels up to ``level``."""

    value: float
    level: int  # the level achieving the value
    alphas: tuple[int, ...]
    complete: bool


def capacity_lower_bound(
    g: Graph, levels: int = 1, budget: int = DEFAULT_BUDGET
) -> CapacityLower:
    """max over t <= levels of alpha(strong t-th power)^(1/t).

    Level 2 squares the vertex count, so only levels 1 and 2 are offered.
    """
    if levels not in (1, 2):
        raise ArgumentError(f"levels must be 1 or 2, got {levels}")
    r1 = max_independent_set(g, budget)
    alphas = [r1.size]
    value, best_level = float(r1.size), 1
    complete = r1.complete
    if levels == 2:
        r2 = max_independent_set(strong_product(g, g), budget)
        alphas.append(r2.size)
        complete = complete and r2.complete
        root = math.sqrt(r2.size)
        if root > value + 1e-12:
            value, best_level = root, 2
    return CapacityLower(value, best_level, tuple(alphas), complete)


@dataclass(frozen=True)
class Verdict:
    """Outcome of pinching the capacity of the k-th power."""

    k: int
    alpha: int
    lower: float
    upper: float  # best capacity upper bound supplied (inf when none)
    theta_upper: float | None  # best upper bound that also caps theta
    capacity: float | None  # exact capacity when determined
    theta: float | None  # exact theta when determined
    determined: bool
    complete: bool  # exact searches finished within budget

    @property
    def interval(self) -> tuple[float, float]:
        return (self.lower, self.upper)


def sandwich_verdict(
    g: Graph,
    k: int,
    ratio: BoundReport | None = None,
    rank: BoundReport | None = None,
    levels: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> Verdict:
    """Pinch the capacity of the k-th power between exact alpha and the bounds.

    The capacity is declared determined when the best lower bound reaches the
    best upper bound within 1e-9; the value reported is the certified lower
    side.  Theta is additionally determined when the pinching upper bound is
    one that caps theta (any trace bound; not the rank bound).
    """
    if k < 1:
        raise ArgumentError(f"k must be >= 1, got {k}")
    gk = power(g, k)
    lo = capacity_lower_bound(gk, levels, budget)
    alpha = lo.alphas[0]
    uppers = [r.bound for r in (ratio, rank) if r is not None]
    upper = min(uppers) if uppers else math.inf
    theta_uppers = [
        r.bound for r in (ratio, rank) if r is not None and r.bounds_theta
    ]
    theta_upper = min(theta_uppers) if theta_uppers else None
    determined = lo.complete and upper - lo.value <= 1e-9
    capacity = lo.value if determined else None
    theta = (
        lo.value
        if determined and theta_upper is not None and theta_upper - lo.value <= 1e-9
        else None
    )
    return Verdict(
        k=k,
        alpha=alpha,
        lower=lo.value,
        upper=upper,
        theta_upper=theta_upper,
        capacity=capacity,
        theta=theta,
        determined=determined,
        complete=lo.complete,
    )
