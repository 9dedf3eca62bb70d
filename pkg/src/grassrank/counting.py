"""Exact counting arithmetic: Gaussian binomial coefficients, boxed
partition counts, and the base-q digit view used for shifting.

Everything is computed with plain Python integers, which are arbitrary
precision, so all results are exact. Index values are ordinary ints
throughout the package; the helpers at the bottom of this module expose
them as base-q digit strings and implement multiplication and division by
powers of q as digit shifts (true bit shifts when q is a power of two).

Tables are built eagerly for a parameter set and never mutated, so they
can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ExactDivisionError, InvalidParameterError

__all__ = [
    "gaussian",
    "gaussian_step",
    "GaussianTable",
    "build_gaussian_table",
    "gaussian_table_for",
    "PartitionTable",
    "build_partition_table",
    "partition_table_for",
    "verify_alpha_identity",
    "digit_shift_up",
    "digit_shift_down",
    "digit_split",
    "int_to_digits",
    "digits_to_int",
]


def check_alphabet(q) -> None:
    """Reject alphabet sizes that are not integers >= 2."""
    if not isinstance(q, int) or isinstance(q, bool) or q < 2:
        raise InvalidParameterError(f"alphabet size must be an integer >= 2, got {q!r}")


def _pow2_exponent(q: int):
    # Powers of two get true bit shifts; everything else multiplies/divides.
    if q & (q - 1) == 0:
        return q.bit_length() - 1
    return None


def gaussian(n: int, k: int, q: int) -> int:
    """Gaussian binomial coefficient [n choose k]_q.

    Counts the k-dimensional subspaces of an n-dimensional space over an
    alphabet of size q, as the product over i < k of
    (q^(n-i) - 1) / (q^(k-i) - 1). Returns 1 for k = 0 and 0 whenever
    k < 0 or k > n; every intermediate quotient is itself a Gaussian
    coefficient, so the arithmetic stays in the integers.
    """
    check_alphabet(q)
    if not isinstance(n, int) or n < 0:
        raise InvalidParameterError(f"n must be a nonnegative integer, got {n!r}")
    if k < 0 or k > n:
        return 0
    result = 1
    for i in range(k):
        result = result * (q ** (n - i) - 1) // (q ** (i + 1) - 1)
    return result


def gaussian_step(current: int, top: int, bottom: int, pivot_taken: bool, q: int) -> int:
    """Slide a running coefficient one column along a traversal.

    Given current = [top choose bottom]_q, returns the next coefficient
    after one column is consumed: [top-1 choose bottom-1]_q when that
    column carried a pivot, [top-1 choose bottom]_q otherwise. Both follow
    from one exact multiply/divide pair:

        pivot:     current * (q^bottom - 1)         / (q^top - 1)
        no pivot:  current * (q^(top - bottom) - 1) / (q^top - 1)

    A zero `current` stays zero (once the remaining columns cannot host
    the remaining pivots, no later suffix can either). For a nonzero
    `current` the division is exact; a remainder means the caller's
    running state is corrupt and raises ExactDivisionError.
    """
    check_alphabet(q)
    if top < 1:
        raise InvalidParameterError(f"cannot step a coefficient with top {top}")
    if current < 0 or bottom < 0 or bottom > top:
        raise InvalidParameterError(
            f"no Gaussian coefficient has value {current} at ({top}, {bottom})"
        )
    if current == 0:
        return 0
    factor = q**bottom - 1 if pivot_taken else q ** (top - bottom) - 1
    quot, rem = divmod(current * factor, q**top - 1)
    if rem:
        raise ExactDivisionError(
            f"stepping {current} at ({top}, {bottom}) left remainder {rem}"
        )
    return quot


@dataclass(frozen=True)
class GaussianTable:
    """All coefficients [eta + kappa choose kappa]_q with kappa <= max_kappa
    and eta <= max_eta, built by the Pascal-style recurrence

        [n choose k]_q = q^k [n-1 choose k]_q + [n-1 choose k-1]_q

    using additions and base-q shifts only. Immutable once built.
    """

    q: int
    max_kappa: int
    max_eta: int
    cells: tuple

    def coefficient(self, top: int, bottom: int) -> int:
        """[top choose bottom]_q from the table; 0 when bottom < 0 or > top."""
        if bottom < 0 or bottom > top:
            return 0
        eta = top - bottom
        if bottom > self.max_kappa or eta > self.max_eta:
            raise InvalidParameterError(
                f"({top}, {bottom}) exceeds table bounds "
                f"kappa<={self.max_kappa}, eta<={self.max_eta}"
            )
        return self.cells[bottom][eta]


def build_gaussian_table(k: int, n: int, q: int) -> GaussianTable:
    """Tabulate every coefficient needed by a (q, n, k) traversal."""
    check_alphabet(q)
    if not 0 <= k <= n:
        raise InvalidParameterError(f"need 0 <= k <= n, got k={k}, n={n}")
    max_eta = n - k
    rows = []
    for kappa in range(k + 1):
        row = []
        for eta in range(max_eta + 1):
            if kappa == 0 or eta == 0:
                row.append(1)
            else:
                row.append(digit_shift_up(row[eta - 1], q, kappa) + rows[kappa - 1][eta])
        rows.append(tuple(row))
    return GaussianTable(q, k, max_eta, tuple(rows))


@lru_cache(maxsize=64)
def gaussian_table_for(q: int, n: int, k: int) -> GaussianTable:
    """Shared immutable table for a parameter set."""
    return build_gaussian_table(k, n, q)


@dataclass(frozen=True)
class PartitionTable:
    """Counts of partitions constrained to a box.

    count(rows, cols, total) is the number of partitions of `total` with
    at most `rows` parts, each part at most `cols`; equivalently the
    number of Ferrers diagrams with `total` dots inside a rows x cols box.
    The counts are q-independent.
    """

    max_rows: int
    max_cols: int
    cells: tuple

    def count(self, rows: int, cols: int, total: int) -> int:
        if rows < 0 or cols < 0 or rows > self.max_rows or cols > self.max_cols:
            raise InvalidParameterError(
                f"box {rows}x{cols} outside table bounds "
                f"{self.max_rows}x{self.max_cols}"
            )
        if total < 0 or total > rows * cols:
            return 0
        return self.cells[rows][cols][total]


def build_partition_table(max_rows: int, max_cols: int) -> PartitionTable:
    """Fill the whole table by the two-way recurrence

        p(r, c, m) = p(r, c-1, m-r) + p(r-1, c, m)

    which splits on whether the partition uses all r available parts:
    stripping one dot from each of r parts lands in an r x (c-1) box,
    while fewer than r parts lands in an (r-1) x c box. p(r, c, 0) = 1
    and anything outside [0, r*c] counts zero.
    """
    if max_rows < 0 or max_cols < 0:
        raise InvalidParameterError("box bounds must be nonnegative")
    cells = []
    for r in range(max_rows + 1):
        row = []
        for c in range(max_cols + 1):
            counts = []
            for m in range(r * c + 1):
                if m == 0:
                    counts.append(1)
                    continue
                full = cells[r - 1][c][m] if r >= 1 and m <= (r - 1) * c else 0
                if r >= 1 and 0 <= m - r <= r * (c - 1):
                    full += row[c - 1][m - r]
                counts.append(full)
            row.append(tuple(counts))
        cells.append(tuple(row))
    return PartitionTable(max_rows, max_cols, tuple(tuple(r) for r in cells))


@lru_cache(maxsize=64)
def partition_table_for(max_rows: int, max_cols: int) -> PartitionTable:
    """Shared immutable table for a box size."""
    return build_partition_table(max_rows, max_cols)


def verify_alpha_identity(k: int, n: int, q: int) -> bool:
    """Check that the by-diagram-size decomposition reproduces the count:

        sum over m of p(k, n-k, m) * q^m  ==  [n choose k]_q

    (each diagram of size m is shared by exactly q^m subspaces).
    """
    check_alphabet(q)
    if not 0 <= k <= n:
        raise InvalidParameterError(f"need 0 <= k <= n, got k={k}, n={n}")
    table = partition_table_for(k, n - k)
    total = sum(
        digit_shift_up(table.count(k, n - k, m), q, m)
        for m in range(k * (n - k) + 1)
    )
    return total == gaussian(n, k, q)


def digit_shift_up(value: int, q: int, places: int) -> int:
    """value * q**places, as a base-q digit shift."""
    check_alphabet(q)
    if places < 0 or value < 0:
        raise InvalidParameterError("shift amounts and values must be nonnegative")
    b = _pow2_exponent(q)
    if b is not None:
        return value << (places * b)
    return value * q**places


def digit_shift_down(value: int, q: int, places: int) -> int:
    """Exact value / q**places; the low digits must all be zero."""
    if places < 0 or value < 0:
        raise InvalidParameterError("shift amounts and values must be nonnegative")
    high, low = digit_split(value, q, places)
    if low:
        raise ExactDivisionError(
            f"shifting {value} down by {places} base-{q} digits leaves {low}"
        )
    return high


def digit_split(value: int, q: int, places: int) -> tuple:
    """Split value into (value // q**places, value % q**places)."""
    check_alphabet(q)
    if places < 0 or value < 0:
        raise InvalidParameterError("shift amounts and values must be nonnegative")
    b = _pow2_exponent(q)
    if b is not None:
        shift = places * b
        return value >> shift, value & ((1 << shift) - 1)
    return divmod(value, q**places)


def int_to_digits(value: int, q: int, width: int) -> tuple:
    """Base-q digits of value, most significant first, padded to width."""
    check_alphabet(q)
    if value < 0 or width < 0:
        raise InvalidParameterError("value and width must be nonnegative")
    digits = []
    for _ in range(width):
        value, d = divmod(value, q)
        digits.append(d)
    if value:
        raise InvalidParameterError(f"value does not fit in {width} base-{q} digits")
    return tuple(reversed(digits))


def digits_to_int(digits, q: int) -> int:
    """Value of a base-q digit sequence, most significant digit first."""
    check_alphabet(q)
    value = 0
    for d in digits:
        if not 0 <= d < q:
            raise InvalidParameterError(f"digit {d!r} out of range for base {q}")
        value = value * q + d
    return value
