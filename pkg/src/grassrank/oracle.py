"""Exhaustive ground truth, deliberately independent of the codecs.

Everything here recomputes pivots, sort keys, and counts from raw matrix
rows, so agreement with the codec modules is evidence rather than
tautology. Scale is capped: the point is desk-size verification, not
production ranking.
"""

from __future__ import annotations

import os
from itertools import combinations, product

from .errors import InvalidParameterError, TooLargeError
from .subspace import Params, RrefMatrix

__all__ = [
    "DEFAULT_CAP",
    "enumerate_all",
    "sorted_enumeration",
    "brute_rank",
    "ext_sort_key",
    "ferrers_sort_key",
    "combined_sort_key",
]

DEFAULT_CAP = 10**6
ORDERS = ("ext", "ferrers", "combined")


def _cap_value(cap) -> int:
    if cap is not None:
        return cap
    raw = os.environ.get("GRASS_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise InvalidParameterError(
            f"GRASS_CAP must be an integer, got {raw!r}"
        ) from None


def _total(params: Params) -> int:
    # Product formula, local to keep the oracle self-contained.
    q, n, k = params.q, params.n, params.k
    total = 1
    for i in range(k):
        total = total * (q ** (n - i) - 1) // (q ** (i + 1) - 1)
    return total


def enumerate_all(params: Params, cap=None):
    """Yield every subspace exactly once.

    Outer loop: pivot position sets in combination order. Inner loop: a
    base-q odometer over the free cells. The visit order is arbitrary;
    only the sorted orders below carry meaning.
    """
    limit = _cap_value(cap)
    total = _total(params)
    if total > limit:
        raise TooLargeError(f"{total} subspaces exceed the cap of {limit}")
    q, n, k = params.q, params.n, params.k
    for pivots in combinations(range(n), k):
        free = [
            (r, c)
            for r in range(k)
            for c in range(pivots[r] + 1, n)
            if c not in pivots
        ]
        for fill in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), e in zip(free, fill):
                rows[r][c] = e
            yield RrefMatrix(q, n, tuple(tuple(row) for row in rows))


def _pivot_positions(rows):
    # 0-based position of the first nonzero entry per row.
    return [next(c for c, e in enumerate(row) if e) for row in rows]


def ext_sort_key(X: RrefMatrix):
    """Stacked column values, rightmost column first."""
    pivots = set(_pivot_positions(X.rows))
    key = []
    for c in range(X.n - 1, -1, -1):
        value = 1 if c in pivots else 0
        for row in X.rows:
            value = value * X.q + row[c]
        key.append(value)
    return tuple(key)


def ferrers_sort_key(X: RrefMatrix):
    """(negated size, per-column deficit, entry value), rightmost first."""
    pivots = _pivot_positions(X.rows)
    pivot_set = set(pivots)
    col_counts = []
    entries = []
    for c in range(X.n - 1, -1, -1):
        if c in pivot_set:
            continue
        depth = sum(1 for p in pivots if p < c)
        col_counts.append(depth)
        entries.extend(X.rows[r][c] for r in range(depth))
    value = 0
    for e in entries:
        value = value * X.q + e
    size = sum(col_counts)
    return (-size, tuple(-c for c in col_counts), value)


def combined_sort_key(X: RrefMatrix):
    """Full-box subspaces first by entry value, the rest in ext order."""
    pivots = _pivot_positions(X.rows)
    if pivots == list(range(X.k)):
        value = 0
        for c in range(X.n - 1, X.k - 1, -1):
            for r in range(X.k):
                value = value * X.q + X.rows[r][c]
        return (0, value)
    return (1, ext_sort_key(X))


def sorted_enumeration(params: Params, order: str, cap=None):
    """All subspaces as a list, sorted under the chosen order."""
    key = _key_for(order)
    return sorted(enumerate_all(params, cap=cap), key=key)


def brute_rank(X: RrefMatrix, order: str, cap=None) -> int:
    """Position of X in the fully sorted enumeration."""
    return sorted_enumeration(X.params, order, cap=cap).index(X)


def _key_for(order: str):
    if order == "ext":
        return ext_sort_key
    if order == "ferrers":
        return ferrers_sort_key
    if order == "combined":
        return combined_sort_key
    raise InvalidParameterError(f"unknown order {order!r}; pick one of {ORDERS}")
