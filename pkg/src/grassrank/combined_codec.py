"""The hybrid order: full-box subspaces first, everything else by the
extended-representation order.

A subspace whose diagram fills the whole k x (n-k) box has its pivots in
the leftmost k columns and every remaining entry free. These subspaces,
more than a quarter of the whole space, are placed first and ordered by
their entry value alone (which is also their Ferrers-order rank). Every
other subspace keeps its extended-representation rank, corrected by the
number of full-box subspaces that used to come after it: moving those to
the front pushes it back by exactly that amount.

That correction has a closed form. Reading the identifying vector from
the right, let ell be the zero run before the first one. A full-box
subspace succeeds X exactly when it beats X at one of those first ell
columns, where its column is entirely free; beating X at column i with
everything to the right equal leaves (q^k - 1 - value of X's column i)
choices there and q^k free choices in each of the n-k-i remaining free
columns.
"""

from __future__ import annotations

from .counting import digit_shift_up, gaussian, int_to_digits
from .errors import IndexOutOfRangeError, TypeSError
from .ext_codec import _matrix_from_columns, coefficient_tracker, rank_ext
from .ferrers_codec import rank_ferrers
from .subspace import Params, RrefMatrix, assemble

__all__ = ["type_s_split", "delta", "rank_comb", "unrank_comb"]


def type_s_split(X: RrefMatrix):
    """(is_full_box, ell): the full-box test and the leading zero run.

    ell counts consecutive zero identifying bits from the right before
    the first one; the diagram fills the box exactly when the run covers
    all n-k free positions, which for k = n (no free positions) and k = 0
    (nothing but the run) holds vacuously.
    """
    n, k = X.n, X.k
    if k == 0:
        return True, n
    rightmost_pivot = X.pivot_cols[-1]
    ell = n - rightmost_pivot
    return X.pivot_cols == tuple(range(1, k + 1)), ell


def delta(X: RrefMatrix) -> int:
    """Number of full-box subspaces after X in the extended-representation
    order; see the module docstring for the counting argument."""
    q, n, k = X.q, X.n, X.k
    is_full, ell = type_s_split(X)
    if is_full:
        raise TypeSError("the correction is undefined for full-box subspaces")
    qk = q**k
    acc = 0
    for i in range(1, ell + 1):
        acc += digit_shift_up(qk - 1 - X.col_value(i), q, k * (n - k - i))
    return acc


def rank_comb(X: RrefMatrix) -> int:
    """Position of X in the combined order."""
    is_full, _ = type_s_split(X)
    if is_full:
        return rank_ferrers(X)
    return rank_ext(X) + delta(X)


def unrank_comb(index: int, params: Params, method: str = "auto") -> RrefMatrix:
    """The subspace at the given position of the combined order.

    Indices below q^(k(n-k)) spell a full-box subspace directly: pivots
    left, entries the base-q digits of the index. Above that, the target
    is the (index - q^(k(n-k)))-th non-full-box subspace in the
    extended-representation order, found by the usual greedy column scan
    with one adjustment: while no pivot has been placed yet (so the prefix
    still matches a full-box subspace), every fully specified free column
    hides exactly q^(k(n-k-j)) full-box completions, which are skipped
    rather than counted. A pivot inside the first n-k positions must
    arrive before the run ends, because an all-zero run through position
    n-k would force the full box itself.
    """
    q, n, k = params.q, params.n, params.k
    total = gaussian(n, k, q)
    if not isinstance(index, int) or not 0 <= index < total:
        raise IndexOutOfRangeError(f"index {index!r} outside [0, {total})")
    full_block = q ** (k * (n - k))
    if index < full_block:
        bits = (1,) * k + (0,) * (n - k)
        return assemble(bits, int_to_digits(index, q, k * (n - k)), q)

    remaining = index - full_block
    tracker = coefficient_tracker(params, method)
    w = 0
    still_full_compatible = True
    bits = [0] * n
    values = [0] * n
    for j in range(1, n + 1):
        if w == k:
            tracker.advance(False)
            continue
        coeff = tracker.current()
        skipped = q ** (k * (n - k - j)) if still_full_compatible and j <= n - k else 0
        per_value = coeff - skipped
        free_block = digit_shift_up(per_value, q, k - w) if per_value else 0
        if remaining >= free_block:
            bits[j - 1] = 1
            values[j - 1] = q**w
            remaining -= free_block
            w += 1
            still_full_compatible = False
            tracker.advance(True)
        else:
            quot = remaining // per_value
            values[j - 1] = digit_shift_up(quot, q, w)
            remaining -= quot * per_value
            tracker.advance(False)
    if w != k or remaining or still_full_compatible:
        raise AssertionError("adjusted traversal ended inconsistently")
    return _matrix_from_columns(params, bits, values)
