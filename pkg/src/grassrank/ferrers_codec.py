"""Rank and unrank under the Ferrers-tableaux order.

Subspaces sort by diagram size (larger diagrams first), then by diagram
within a size class (in the least column where two diagrams differ, the
one with more dots sorts first), then by the base-q value of the free
entries. Because every diagram of size m is shared by exactly q^m
subspaces, a size class occupies a contiguous index block of length
p(k, n-k, m) * q^m, each diagram a contiguous sub-block of length q^m.

Diagram ranking within a size class rests on one counting fact: the
diagrams of size m whose first (rightmost) j columns are fixed correspond
to diagrams of the remaining dots in an F_j x (n-k-j) box.
"""

from __future__ import annotations

from .counting import (
    digit_shift_up,
    digit_split,
    gaussian,
    int_to_digits,
    partition_table_for,
)
from .errors import (
    IndexOutOfRangeError,
    InvalidPrefixError,
    ParamMismatchError,
    SizeMismatchError,
)
from .subspace import (
    FerrersDiagram,
    Params,
    RrefMatrix,
    assemble,
    ferrers_of,
    vector_from_diagram,
)

__all__ = [
    "compare_diagrams",
    "count_diagram_extensions",
    "rank_diagram",
    "unrank_diagram",
    "compare_ferrers",
    "rank_ferrers",
    "unrank_ferrers",
]


def compare_diagrams(F: FerrersDiagram, G: FerrersDiagram) -> int:
    """-1, 0, or 1 within a size class; more dots in the first differing
    column sorts earlier."""
    if (F.box_rows, F.box_cols) != (G.box_rows, G.box_cols):
        raise SizeMismatchError(
            f"boxes differ: {F.box_rows}x{F.box_cols} vs {G.box_rows}x{G.box_cols}"
        )
    if F.size != G.size:
        raise SizeMismatchError(f"sizes differ: {F.size} vs {G.size}")
    for fc, gc in zip(F.cols, G.cols):
        if fc != gc:
            return -1 if fc > gc else 1
    return 0


def count_diagram_extensions(prefix, size: int, box_rows: int, box_cols: int) -> int:
    """Diagrams of the given size in the box whose first columns match prefix.

    prefix lists column counts rightmost first. The extensions fill an
    F_j x (box_cols - j) box with the leftover dots, so the answer is a
    single table lookup.
    """
    prefix = tuple(prefix)
    if len(prefix) > box_cols:
        raise InvalidPrefixError(f"prefix of {len(prefix)} columns exceeds {box_cols}")
    prev = box_rows
    for i, c in enumerate(prefix, start=1):
        if not isinstance(c, int) or not 0 <= c <= prev:
            raise InvalidPrefixError(
                f"column count {c!r} at position {i} breaks 0 <= F_{i} <= {prev}"
            )
        prev = c
    if size < 0 or size > box_rows * box_cols:
        return 0
    table = partition_table_for(box_rows, box_cols)
    return table.count(prev, box_cols - len(prefix), size - sum(prefix))


def rank_diagram(F: FerrersDiagram) -> int:
    """Position of F among the size-|F| diagrams of its box.

    Sums, for every column j and every heavier candidate count a (between
    F_j + 1 and the previous column's count, the first column being capped
    by the box height), the number of diagrams continuing the prefix with
    a dots in column j.
    """
    table = partition_table_for(F.box_rows, F.box_cols)
    size = F.size
    idx = 0
    prev = F.box_rows
    partial = 0
    for j, fj in enumerate(F.cols, start=1):
        cols_left = F.box_cols - j
        for a in range(fj + 1, prev + 1):
            idx += table.count(a, cols_left, size - partial - a)
        partial += fj
        prev = fj
    return idx


def unrank_diagram(index: int, size: int, box_rows: int, box_cols: int) -> FerrersDiagram:
    """The size-`size` diagram at the given position of its class.

    Chooses each column count greedily from the heaviest candidate down,
    skipping candidates by the number of diagrams they head; once the dots
    are exhausted the remaining columns are zero.
    """
    table = partition_table_for(box_rows, box_cols)
    total = table.count(box_rows, box_cols, size)
    if not isinstance(index, int) or not 0 <= index < total:
        raise IndexOutOfRangeError(
            f"index {index!r} outside [0, {total}) for size {size} in "
            f"{box_rows}x{box_cols}"
        )
    cols = []
    h = index
    prev = box_rows
    partial = 0
    for j in range(1, box_cols + 1):
        if partial == size:
            cols.append(0)
            prev = 0
            continue
        a = prev
        while True:
            c = table.count(a, box_cols - j, size - partial - a)
            if h < c:
                break
            h -= c
            a -= 1
            if a < 0:
                raise AssertionError("ran out of column candidates")
        cols.append(a)
        partial += a
        prev = a
    if h or partial != size:
        raise AssertionError("diagram unranking did not absorb the whole index")
    return FerrersDiagram(box_rows, box_cols, tuple(cols))


def _require_same_params(X: RrefMatrix, Y: RrefMatrix) -> None:
    if X.params != Y.params:
        raise ParamMismatchError(f"cannot compare {X.params} against {Y.params}")


def compare_ferrers(X: RrefMatrix, Y: RrefMatrix) -> int:
    """-1, 0, or 1 under (size descending, diagram order, entry value)."""
    _require_same_params(X, Y)
    fx, fy = ferrers_of(X), ferrers_of(Y)
    if fx.diagram.size != fy.diagram.size:
        return -1 if fx.diagram.size > fy.diagram.size else 1
    by_diagram = compare_diagrams(fx.diagram, fy.diagram)
    if by_diagram:
        return by_diagram
    if fx.value != fy.value:
        return -1 if fx.value < fy.value else 1
    return 0


def rank_ferrers(X: RrefMatrix) -> int:
    """Position of X in the Ferrers-tableaux order.

    Counts the subspaces of strictly larger diagram size (p(k, n-k, i)*q^i
    for each larger size i), plus whole q^m blocks for earlier diagrams of
    the same size, plus the entry value within the block. A full-box
    diagram short-circuits: nothing precedes its class, its class has one
    diagram, so the rank is the entry value itself.
    """
    q, n, k = X.q, X.n, X.k
    ft = ferrers_of(X)
    m = ft.diagram.size
    box = k * (n - k)
    if m == box:
        return ft.value
    table = partition_table_for(k, n - k)
    acc = ft.value + digit_shift_up(rank_diagram(ft.diagram), q, m)
    for i in range(m + 1, box + 1):
        acc += digit_shift_up(table.count(k, n - k, i), q, i)
    return acc


def unrank_ferrers(index: int, params: Params) -> RrefMatrix:
    """The subspace at the given position of the Ferrers-tableaux order.

    Scans size classes largest first, subtracting each class block
    p(k, n-k, m) * q^m until the index falls inside one; the quotient by
    q^m picks the diagram, the remainder spells the entries.
    """
    q, n, k = params.q, params.n, params.k
    total = gaussian(n, k, q)
    if not isinstance(index, int) or not 0 <= index < total:
        raise IndexOutOfRangeError(f"index {index!r} outside [0, {total})")
    table = partition_table_for(k, n - k)
    remaining = index
    for m in range(k * (n - k), -1, -1):
        block = digit_shift_up(table.count(k, n - k, m), q, m)
        if remaining < block:
            dia_index, entry_value = digit_split(remaining, q, m)
            diagram = unrank_diagram(dia_index, m, k, n - k)
            bits = vector_from_diagram(diagram)
            return assemble(bits, int_to_digits(entry_value, q, m), q)
        remaining -= block
    raise AssertionError("size-class scan exhausted below a validated index")
