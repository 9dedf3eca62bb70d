"""Canonical subspace representations and loss-free conversions.

A subspace of an n-dimensional space is represented by the unique k x n
matrix in reduced row echelon form whose rows span it. Two column
numbering schemes coexist: display order (left to right, the way a matrix
prints and serializes) and traversal order (1-based, rightmost column
first), because the codecs consume columns rightmost first. All types
store rows in display order; the `col`/`col_value` accessors take
traversal positions, so conversion between the two lives here and nowhere
else.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .counting import check_alphabet, digits_to_int
from .errors import (
    InconsistentExtensionError,
    InvalidParameterError,
    MalformedInputError,
    NonPrimeFieldError,
    NotRrefError,
    RankDeficientError,
    WrongEntryCountError,
)

__all__ = [
    "Params",
    "RrefMatrix",
    "ExtendedRepresentation",
    "FerrersDiagram",
    "FerrersTableaux",
    "validate_rref",
    "identifying_vector",
    "extend",
    "unextend",
    "ferrers_of",
    "diagram_from_vector",
    "vector_from_diagram",
    "assemble",
    "reduce_to_rref",
    "column_value",
    "format_matrix",
    "parse_matrix",
    "format_digit_string",
]


@dataclass(frozen=True)
class Params:
    """Ambient dimensions: alphabet size q, vector length n, dimension k."""

    q: int
    n: int
    k: int

    def __post_init__(self):
        check_alphabet(self.q)
        if not isinstance(self.n, int) or self.n < 0:
            raise InvalidParameterError(f"n must be a nonnegative integer, got {self.n!r}")
        if not isinstance(self.k, int) or not 0 <= self.k <= self.n:
            raise InvalidParameterError(f"need 0 <= k <= n, got k={self.k!r}, n={self.n!r}")


def _check_digit_rows(rows, q, n, exc):
    for r, row in enumerate(rows):
        if len(row) != n:
            raise exc(f"row {r} has length {len(row)}, expected {n}")
        for c, e in enumerate(row):
            if not isinstance(e, int) or isinstance(e, bool) or not 0 <= e < q:
                raise exc(f"entry at row {r}, column {c + 1} is {e!r}, not a base-{q} digit")


@dataclass(frozen=True)
class RrefMatrix:
    """A k x n matrix over {0..q-1} in reduced row echelon form.

    Rows are stored in display order. pivot_cols holds the 1-based display
    positions of the leading ones, strictly increasing row by row; it is
    derived during validation, so holding an instance is proof of
    canonical form.
    """

    q: int
    n: int
    rows: tuple
    pivot_cols: tuple = field(init=False, compare=False)

    def __post_init__(self):
        check_alphabet(self.q)
        if not isinstance(self.n, int) or self.n < 0:
            raise InvalidParameterError(f"n must be a nonnegative integer, got {self.n!r}")
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) > self.n:
            raise NotRrefError(f"{len(rows)} rows cannot be independent in length {self.n}")
        _check_digit_rows(rows, self.q, self.n, NotRrefError)
        pivots = []
        for r, row in enumerate(rows):
            lead = next((c for c, e in enumerate(row) if e), None)
            if lead is None:
                raise NotRrefError(f"row {r} is zero")
            if row[lead] != 1:
                raise NotRrefError(
                    f"leading coefficient of row {r} (column {lead + 1}) is {row[lead]}, not 1"
                )
            if pivots and lead + 1 <= pivots[-1]:
                raise NotRrefError(
                    f"pivot of row {r} (column {lead + 1}) is not strictly right "
                    f"of the previous pivot (column {pivots[-1]})"
                )
            pivots.append(lead + 1)
        for r, p in enumerate(pivots):
            for r2 in range(len(rows)):
                if r2 != r and rows[r2][p - 1]:
                    raise NotRrefError(
                        f"pivot column {p} has a nonzero entry in row {r2}"
                    )
        object.__setattr__(self, "pivot_cols", tuple(pivots))

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def params(self) -> Params:
        return Params(self.q, self.n, self.k)

    def col(self, j: int) -> tuple:
        """Column at traversal position j (1-based, rightmost first), top to bottom."""
        if not 1 <= j <= self.n:
            raise InvalidParameterError(f"column position {j} outside 1..{self.n}")
        d = self.n - j
        return tuple(row[d] for row in self.rows)

    def col_value(self, j: int) -> int:
        """Base-q value of column j, top entry most significant."""
        return digits_to_int(self.col(j), self.q)

    def has_pivot(self, j: int) -> bool:
        """Whether traversal position j is a pivot column."""
        return (self.n - j + 1) in self.pivot_cols


@dataclass(frozen=True)
class ExtendedRepresentation:
    """Identifying vector stacked on top of the echelon rows: (k+1) x n.

    The top row is binary; stacking column j top to bottom gives the value
    compared by the extended-representation order, with the identifying
    bit as the most significant digit.
    """

    q: int
    n: int
    rows: tuple

    def __post_init__(self):
        check_alphabet(self.q)
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise InvalidParameterError("an extended representation has at least one row")
        if len(rows) - 1 > self.n:
            raise InvalidParameterError(
                f"{len(rows) - 1} matrix rows cannot fit in length {self.n}"
            )
        _check_digit_rows(rows, self.q, self.n, InvalidParameterError)
        if any(b not in (0, 1) for b in rows[0]):
            raise InvalidParameterError("the top row must be binary")

    @property
    def k(self) -> int:
        return len(self.rows) - 1

    def col(self, j: int) -> tuple:
        if not 1 <= j <= self.n:
            raise InvalidParameterError(f"column position {j} outside 1..{self.n}")
        d = self.n - j
        return tuple(row[d] for row in self.rows)

    def col_value(self, j: int) -> int:
        """Stacked base-q value of column j: bit first, then matrix digits."""
        return digits_to_int(self.col(j), self.q)


@dataclass(frozen=True)
class FerrersDiagram:
    """Column dot counts of a partition inside a box_rows x box_cols box.

    cols[i] is the number of dots in column i+1, columns numbered
    rightmost first, so the sequence is nonincreasing and bounded by
    box_rows; dots are right-aligned and top-aligned.
    """

    box_rows: int
    box_cols: int
    cols: tuple

    def __post_init__(self):
        if self.box_rows < 0 or self.box_cols < 0:
            raise InvalidParameterError("box bounds must be nonnegative")
        cols = tuple(self.cols)
        object.__setattr__(self, "cols", cols)
        if len(cols) != self.box_cols:
            raise InvalidParameterError(
                f"expected {self.box_cols} column counts, got {len(cols)}"
            )
        prev = self.box_rows
        for i, c in enumerate(cols):
            if not isinstance(c, int) or not 0 <= c <= prev:
                raise InvalidParameterError(
                    f"column count {c!r} at position {i + 1} breaks 0 <= F_{i + 1} "
                    f"<= {prev}"
                )
            prev = c

    @property
    def size(self) -> int:
        return sum(self.cols)

    def row_counts(self) -> tuple:
        """Dots per row (the conjugate view), longest row first."""
        return tuple(
            sum(1 for c in self.cols if c >= r) for r in range(1, self.box_rows + 1)
        )


@dataclass(frozen=True)
class FerrersTableaux:
    """A diagram together with the free entries filling it.

    entries lists the digits column-major, rightmost column first and top
    to bottom within a column; read as a base-q number (first entry most
    significant) it is the value that orders subspaces sharing a diagram.
    """

    q: int
    diagram: FerrersDiagram
    entries: tuple

    def __post_init__(self):
        check_alphabet(self.q)
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.diagram.size:
            raise WrongEntryCountError(
                f"diagram has {self.diagram.size} cells, got {len(entries)} entries"
            )
        for i, e in enumerate(entries):
            if not isinstance(e, int) or not 0 <= e < self.q:
                raise InvalidParameterError(f"entry {e!r} at position {i + 1} is not a digit")

    @property
    def value(self) -> int:
        return digits_to_int(self.entries, self.q)


def validate_rref(entries, q: int, n=None) -> RrefMatrix:
    """Type a raw digit array as an RrefMatrix, identifying the pivots.

    n is only needed for the k = 0 case, where the width cannot be read
    off an empty row list. Raises NotRrefError naming the first violated
    echelon condition and where it fails.
    """
    rows = tuple(tuple(row) for row in entries)
    if rows:
        width = len(rows[0])
        if n is not None and n != width:
            raise InvalidParameterError(f"n={n} disagrees with row length {width}")
    elif n is None:
        raise InvalidParameterError("cannot infer n from an empty matrix; pass n")
    else:
        width = n
    return RrefMatrix(q, width, rows)


def identifying_vector(X: RrefMatrix) -> tuple:
    """Binary display-order vector with ones exactly at the pivot columns."""
    bits = [0] * X.n
    for p in X.pivot_cols:
        bits[p - 1] = 1
    return tuple(bits)


def extend(X: RrefMatrix) -> ExtendedRepresentation:
    """Stack the identifying vector on top of the matrix."""
    return ExtendedRepresentation(X.q, X.n, (identifying_vector(X),) + X.rows)


def unextend(E: ExtendedRepresentation) -> RrefMatrix:
    """Drop the redundant top row, checking it against the recomputed pivots."""
    X = RrefMatrix(E.q, E.n, E.rows[1:])
    if E.rows[0] != identifying_vector(X):
        raise InconsistentExtensionError(
            "top row does not mark the pivot columns of the matrix below it"
        )
    return X


def _free_depths(bits):
    """For each non-pivot display column, rightmost first, the number of
    rows whose pivot lies strictly left of it (its free cells are exactly
    the top that-many rows)."""
    n = len(bits)
    depths = []
    seen_left = list(_prefix_weights(bits))
    for d in range(n, 0, -1):
        if bits[d - 1]:
            continue
        depths.append(seen_left[d - 1])
    return depths


def _prefix_weights(bits):
    """prefix_weights[i] = number of ones strictly before display index i."""
    total = 0
    for b in bits:
        yield total
        total += b


def ferrers_of(X: RrefMatrix) -> FerrersTableaux:
    """Free entries of the matrix arranged in its diagram shape.

    Walks the non-pivot columns rightmost first; in each, the free cells
    are the rows whose pivot lies strictly left, which are always the top
    rows of that column. Entries of pivot columns belonging to other rows
    are structural zeros and never appear.
    """
    bits = identifying_vector(X)
    counts = []
    entries = []
    weights = list(_prefix_weights(bits))
    for d in range(X.n, 0, -1):
        if bits[d - 1]:
            continue
        depth = weights[d - 1]
        counts.append(depth)
        entries.extend(X.rows[r][d - 1] for r in range(depth))
    diagram = FerrersDiagram(X.k, X.n - X.k, tuple(counts))
    return FerrersTableaux(X.q, diagram, tuple(entries))


def diagram_from_vector(bits) -> FerrersDiagram:
    """Diagram column counts determined by the pivot positions alone."""
    bits = tuple(bits)
    if any(b not in (0, 1) for b in bits):
        raise InvalidParameterError("identifying vector must be binary")
    k = sum(bits)
    return FerrersDiagram(k, len(bits) - k, tuple(_free_depths(bits)))


def vector_from_diagram(diagram: FerrersDiagram) -> tuple:
    """The unique identifying vector whose diagram this is.

    Row r of the matrix has row_counts[r-1] free cells, which pins its
    pivot at display position box_cols + r - row_counts[r-1].
    """
    k, eta = diagram.box_rows, diagram.box_cols
    bits = [0] * (k + eta)
    lam = diagram.row_counts()
    for r in range(1, k + 1):
        bits[eta + r - lam[r - 1] - 1] = 1
    return tuple(bits)


def assemble(bits, entries, q: int) -> RrefMatrix:
    """Rebuild the matrix from an identifying vector and its free entries.

    entries must be column-major, rightmost column first, top to bottom,
    exactly as ferrers_of produces them.
    """
    bits = tuple(bits)
    if any(b not in (0, 1) for b in bits):
        raise InvalidParameterError("identifying vector must be binary")
    check_alphabet(q)
    n = len(bits)
    pivots = [i for i, b in enumerate(bits) if b]
    k = len(pivots)
    depths = _free_depths(bits)
    if len(entries) != sum(depths):
        raise WrongEntryCountError(
            f"vector needs {sum(depths)} free entries, got {len(entries)}"
        )
    rows = [[0] * n for _ in range(k)]
    for r, p in enumerate(pivots):
        rows[r][p] = 1
    it = iter(entries)
    free_cols = [d for d in range(n, 0, -1) if not bits[d - 1]]
    for d, depth in zip(free_cols, depths):
        for r in range(depth):
            rows[r][d - 1] = next(it)
    return RrefMatrix(q, n, tuple(tuple(r) for r in rows))


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def reduce_to_rref(gen, q: int, n=None) -> RrefMatrix:
    """Canonical echelon basis of the row space, over a prime field.

    The inputs need not be canonical; they must be independent. Raises
    RankDeficientError otherwise and NonPrimeFieldError when q is not
    prime (inverses are taken mod q).
    """
    check_alphabet(q)
    if not _is_prime(q):
        raise NonPrimeFieldError(f"row reduction needs a prime alphabet, got {q}")
    rows = [list(row) for row in gen]
    if rows:
        width = len(rows[0])
    elif n is None:
        raise InvalidParameterError("cannot infer n from an empty matrix; pass n")
    else:
        width = n
    _check_digit_rows(rows, q, width, InvalidParameterError)
    pivot_row = 0
    for c in range(width):
        pr = next((r for r in range(pivot_row, len(rows)) if rows[r][c]), None)
        if pr is None:
            continue
        rows[pivot_row], rows[pr] = rows[pr], rows[pivot_row]
        inv = pow(rows[pivot_row][c], -1, q)
        rows[pivot_row] = [(e * inv) % q for e in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][c]:
                f = rows[r][c]
                rows[r] = [(e - f * p) % q for e, p in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    if pivot_row < len(rows):
        raise RankDeficientError(
            f"rows span only {pivot_row} dimensions, expected {len(rows)}"
        )
    return RrefMatrix(q, width, tuple(tuple(r) for r in rows))


def column_value(col, q: int) -> int:
    """Base-q value of a digit column, top entry most significant."""
    return digits_to_int(col, q)


def format_matrix(X: RrefMatrix) -> str:
    """Wire format: a "q n k" header, then k rows of space-separated digits."""
    lines = [f"{X.q} {X.n} {X.k}"]
    lines.extend(" ".join(str(e) for e in row) for row in X.rows)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> RrefMatrix:
    """Parse the wire format back into a validated matrix."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedInputError("empty input")
    head = lines[0].split()
    if len(head) != 3:
        raise MalformedInputError(f"header must be 'q n k', got {lines[0]!r}")
    try:
        q, n, k = (int(t) for t in head)
    except ValueError:
        raise MalformedInputError(f"non-integer header field in {lines[0]!r}") from None
    if len(lines) - 1 != k:
        raise MalformedInputError(f"expected {k} matrix rows, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        try:
            row = tuple(int(t) for t in ln.split())
        except ValueError:
            raise MalformedInputError(f"non-integer entry in row {ln!r}") from None
        if len(row) != n:
            raise MalformedInputError(f"row {ln!r} has {len(row)} entries, expected {n}")
        rows.append(row)
    return validate_rref(rows, q, n=n)


def format_digit_string(digits, q: int) -> str:
    """Digits as text: contiguous when single characters, else space-separated."""
    if q <= 10:
        return "".join(str(d) for d in digits)
    return " ".join(str(d) for d in digits)
