"""Shared fixtures-by-hand for the test suite: well-known matrices and
small independent brute-force counters."""

import grassrank as gr


def running_example():
    """The 3-dimensional subspace of F_2^7 used across the representation
    tests; pivots in display columns 1, 3, 4."""
    return gr.validate_rref(
        [
            (1, 0, 0, 0, 1, 1, 0),
            (0, 0, 1, 0, 1, 0, 1),
            (0, 0, 0, 1, 0, 1, 1),
        ],
        2,
    )


def x0_matrix():
    """The G_2(6,3) subspace whose golden ranks are 928 / 1323 / 1056."""
    return gr.validate_rref(
        [
            (0, 1, 1, 0, 0, 1),
            (0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, 1, 1),
        ],
        2,
    )


def identity_block(q, n, k):
    """[I_k | 0]: pivots in the leftmost k display columns, zero free part."""
    rows = tuple(
        tuple(1 if c == r else 0 for c in range(n)) for r in range(k)
    )
    return gr.validate_rref(rows, q, n=n)


def brute_box_partitions(rows, cols):
    """All partitions fitting in a rows x cols box, as nonincreasing
    tuples padded with zeros; the independent oracle for the table."""

    def gen(slots, cap):
        if slots == 0:
            yield ()
            return
        for first in range(cap, -1, -1):
            for rest in gen(slots - 1, first):
                yield (first,) + rest

    return list(gen(rows, cols))


def count_box_partitions(rows, cols, total):
    return sum(1 for t in brute_box_partitions(rows, cols) if sum(t) == total)


def tableaux_rows(ft):
    """Rebuild the row view (display order, left to right) of a tableaux
    from its column-major entries."""
    rows = [[] for _ in range(ft.diagram.box_rows)]
    it = iter(ft.entries)
    for count in ft.diagram.cols:
        for r in range(count):
            rows[r].append(next(it))
    return [tuple(reversed(row)) for row in rows if row]
