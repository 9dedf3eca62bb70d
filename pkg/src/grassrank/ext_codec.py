"""Rank and unrank under the extended-representation order.

Subspaces are compared column by column, rightmost column first, on the
stacked value of (identifying bit, column digits), the bit being the most
significant digit. The key counting fact: the number of subspaces whose
first j columns (from the right) are fixed depends only on j and on the
number w of pivots among them, and equals [n-j choose k-w]_q. Ranking
therefore sums, for every column, the count of subspaces that agree to
its right but carry a smaller column value there; unranking inverts the
process greedily, column by column.

The running coefficients [n-j choose k-w]_q are produced either from a
precomputed Pascal-style table or by incremental exact multiply/divide
steps; `method="auto"` picks the table when min(k, n-k) is small relative
to log2(n) * log2(log2(n) + 1) and the incremental path otherwise.
"""

from __future__ import annotations

import math

from .counting import (
    digit_shift_down,
    digit_shift_up,
    digit_split,
    digits_to_int,
    gaussian,
    gaussian_step,
    gaussian_table_for,
    int_to_digits,
)
from .errors import (
    IndexOutOfRangeError,
    InvalidParameterError,
    InvalidPrefixError,
    ParamMismatchError,
)
from .subspace import Params, RrefMatrix

__all__ = [
    "compare_ext",
    "count_extensions",
    "rank_ext",
    "unrank_ext",
    "next_ext",
    "coefficient_tracker",
]


class _TableCoeffs:
    """Running [n-j choose k-w]_q read from the shared Pascal table."""

    __slots__ = ("table", "n", "k", "j", "w")

    def __init__(self, params: Params):
        self.table = gaussian_table_for(params.q, params.n, params.k)
        self.n = params.n
        self.k = params.k
        self.j = 1
        self.w = 0  # pivots among columns 1..j-1

    def current(self) -> int:
        return self.table.coefficient(self.n - self.j, self.k - self.w)

    def advance(self, pivot_taken: bool) -> None:
        self.j += 1
        self.w += 1 if pivot_taken else 0


class _StepCoeffs:
    """Running [n-j choose k-w]_q maintained by exact multiplicative steps."""

    __slots__ = ("q", "n", "k", "j", "w", "value")

    def __init__(self, params: Params):
        self.q = params.q
        self.n = params.n
        self.k = params.k
        self.j = 1
        self.w = 0
        self.value = gaussian(params.n - 1, params.k, params.q)

    def current(self) -> int:
        return self.value

    def advance(self, pivot_taken: bool) -> None:
        if self.j < self.n and self.value:
            self.value = gaussian_step(
                self.value, self.n - self.j, self.k - self.w, pivot_taken, self.q
            )
        self.j += 1
        self.w += 1 if pivot_taken else 0


def _prefer_table(params: Params) -> bool:
    if params.n < 2:
        return True
    crossover = math.log2(params.n) * math.log2(math.log2(params.n) + 1)
    return min(params.k, params.n - params.k) < crossover


def coefficient_tracker(params: Params, method: str = "auto"):
    """Tracker for the per-column subspace counts during a traversal.

    method is "table", "step", or "auto" (table for thin parameter sets,
    incremental steps otherwise). Both produce identical values.
    """
    if method == "auto":
        method = "table" if _prefer_table(params) else "step"
    if method == "table":
        return _TableCoeffs(params)
    if method == "step":
        return _StepCoeffs(params)
    raise InvalidParameterError(f"unknown coefficient method {method!r}")


def _require_same_params(X: RrefMatrix, Y: RrefMatrix) -> None:
    if X.params != Y.params:
        raise ParamMismatchError(f"cannot compare {X.params} against {Y.params}")


def compare_ext(X: RrefMatrix, Y: RrefMatrix) -> int:
    """-1, 0, or 1 as X sorts before, equal to, or after Y.

    Decided at the lowest traversal position whose stacked column values
    (identifying bit over column digits) differ.
    """
    _require_same_params(X, Y)
    q, k = X.q, X.k
    qk = q**k
    for j in range(1, X.n + 1):
        sx = (qk if X.has_pivot(j) else 0) + X.col_value(j)
        sy = (qk if Y.has_pivot(j) else 0) + Y.col_value(j)
        if sx != sy:
            return -1 if sx < sy else 1
    return 0


def count_extensions(prefix, params: Params) -> int:
    """Number of subspaces whose first columns match the given prefix.

    prefix is a sequence of (bit, column_digits) pairs, rightmost column
    first, column digits top to bottom. Raises InvalidPrefixError when the
    pair sequence could not have come from any extended representation; a
    structurally consistent prefix that no subspace completes (too few
    columns left for the missing pivots) simply counts zero.
    """
    q, n, k = params.q, params.n, params.k
    if len(prefix) > n:
        raise InvalidPrefixError(f"prefix of length {len(prefix)} exceeds n={n}")
    w = 0
    for pos, (bit, col) in enumerate(prefix, start=1):
        if bit not in (0, 1):
            raise InvalidPrefixError(f"identifying bit at position {pos} is {bit!r}")
        col = tuple(col)
        if len(col) != k:
            raise InvalidPrefixError(
                f"column at position {pos} has {len(col)} digits, expected {k}"
            )
        value = digits_to_int(col, q)
        if bit:
            if w >= k or value != q**w:
                raise InvalidPrefixError(
                    f"pivot column at position {pos} must be the {w}-th unit column"
                )
            w += 1
        else:
            if digit_split(value, q, w)[1]:
                raise InvalidPrefixError(
                    f"non-pivot column at position {pos} must vanish on the "
                    f"bottom {w} digits"
                )
    return gaussian(n - len(prefix), k - w, q)


def rank_ext(X: RrefMatrix, method: str = "auto") -> int:
    """Position of X in the extended-representation order.

    For each column, counts the subspaces agreeing on everything to its
    right but smaller at it: a pivot column is preceded by all q^(k-w)
    choices of a free column, a free column by the smaller free values,
    of which there are its value shifted down by the w structural zero
    digits. Each count multiplies the suffix coefficient [n-j choose k-w]_q.
    """
    q, n, k = X.q, X.n, X.k
    tracker = coefficient_tracker(X.params, method)
    acc = 0
    w = 0
    for j in range(1, n + 1):
        coeff = tracker.current()
        if X.has_pivot(j):
            if coeff:
                acc += digit_shift_up(coeff, q, k - w)
            tracker.advance(True)
            w += 1
        else:
            if coeff:
                value = X.col_value(j)
                if value:
                    acc += digit_shift_down(value, q, w) * coeff
            tracker.advance(False)
    return acc


def unrank_ext(index: int, params: Params, method: str = "auto") -> RrefMatrix:
    """The subspace at the given position of the extended-representation order.

    Greedy inverse of rank_ext: at each column, a pivot is taken exactly
    when the remaining index reaches the count of subspaces continuing
    with any free column; otherwise the free column value is the quotient
    by the suffix coefficient. The leftover index is always zero: enough
    pivots are forced before the columns run out.
    """
    q, n, k = params.q, params.n, params.k
    total = gaussian(n, k, q)
    if not isinstance(index, int) or not 0 <= index < total:
        raise IndexOutOfRangeError(f"index {index!r} outside [0, {total})")
    tracker = coefficient_tracker(params, method)
    remaining = index
    w = 0
    bits = [0] * n  # bits[j-1] = identifying bit at traversal position j
    values = [0] * n
    for j in range(1, n + 1):
        if w == k:
            tracker.advance(False)
            continue
        coeff = tracker.current()
        pivot_block = digit_shift_up(coeff, q, k - w) if coeff else 0
        if remaining >= pivot_block:
            bits[j - 1] = 1
            values[j - 1] = q**w
            remaining -= pivot_block
            w += 1
            tracker.advance(True)
        else:
            quot = remaining // coeff
            values[j - 1] = digit_shift_up(quot, q, w)
            remaining -= quot * coeff
            tracker.advance(False)
    if w != k or remaining:
        raise AssertionError("traversal ended without absorbing the whole index")
    return _matrix_from_columns(params, bits, values)


def _matrix_from_columns(params: Params, bits, values) -> RrefMatrix:
    """Assemble display-order rows from per-position column values."""
    q, n, k = params.q, params.n, params.k
    rows = [[0] * n for _ in range(k)]
    for j in range(1, n + 1):
        for r, d in enumerate(int_to_digits(values[j - 1], q, k)):
            rows[r][n - j] = d
    return RrefMatrix(q, n, tuple(tuple(r) for r in rows))


def next_ext(X: RrefMatrix):
    """Immediate successor of X in the extended-representation order.

    Returns None for the maximum. Pure column surgery, no index
    arithmetic: scan positions from the least significant (leftmost
    column) toward the most significant, find the first that can grow,
    grow it minimally, and rebuild everything to its left as the smallest
    valid completion (zero columns as long as the missing pivots still
    fit, then forced pivots).
    """
    q, n, k = X.q, X.n, X.k
    bits = [0] * n
    values = [0] * n
    weights = [0] * (n + 1)  # weights[j] = pivots among positions 1..j
    for j in range(1, n + 1):
        bit = 1 if X.has_pivot(j) else 0
        bits[j - 1] = bit
        values[j - 1] = X.col_value(j)
        weights[j] = weights[j - 1] + bit
    for j in range(n, 0, -1):
        w = weights[j - 1]
        if bits[j - 1] or w == k:
            continue
        free_rank = digit_shift_down(values[j - 1], q, w)
        if free_rank < q ** (k - w) - 1:
            bits[j - 1] = 0
            values[j - 1] = digit_shift_up(free_rank + 1, q, w)
            tail_w = w
        else:
            bits[j - 1] = 1
            values[j - 1] = q**w
            tail_w = w + 1
        for t in range(j + 1, n + 1):
            if k - tail_w <= n - t:
                bits[t - 1] = 0
                values[t - 1] = 0
            else:
                bits[t - 1] = 1
                values[t - 1] = q**tail_w
                tail_w += 1
        return _matrix_from_columns(X.params, bits, values)
    return None
