import functools
import itertools

import pytest

import grassrank as gr
from grassrank.errors import (
    IndexOutOfRangeError,
    InvalidPrefixError,
    SizeMismatchError,
)
from helpers import count_box_partitions, identity_block, tableaux_rows, x0_matrix


def diagram(box_rows, box_cols, cols):
    return gr.FerrersDiagram(box_rows, box_cols, tuple(cols))


def all_diagrams(box_rows, box_cols, size):
    out = []
    for cols in itertools.product(range(box_rows + 1), repeat=box_cols):
        if all(a >= b for a, b in zip(cols, cols[1:])) and sum(cols) == size:
            out.append(diagram(box_rows, box_cols, cols))
    return out


def test_compare_diagrams_example():
    F = diagram(3, 3, (3, 1, 0))
    G = diagram(3, 3, (2, 1, 1))
    assert gr.compare_diagrams(F, G) == -1
    assert gr.compare_diagrams(G, F) == 1
    assert gr.compare_diagrams(F, F) == 0


def test_compare_diagrams_rejects_mismatch():
    with pytest.raises(SizeMismatchError):
        gr.compare_diagrams(diagram(3, 3, (3, 1, 0)), diagram(3, 3, (3, 2, 0)))
    with pytest.raises(SizeMismatchError):
        gr.compare_diagrams(diagram(3, 3, (3, 1, 0)), diagram(4, 3, (3, 1, 0)))


def test_compare_diagrams_total_order():
    family = all_diagrams(3, 3, 4)
    assert len(family) == count_box_partitions(3, 3, 4) == 3
    chain = sorted(family, key=functools.cmp_to_key(gr.compare_diagrams))
    for a, b in zip(chain, chain[1:]):
        assert gr.compare_diagrams(a, b) == -1


def test_count_diagram_extensions_examples():
    for m in range(10):
        assert gr.count_diagram_extensions([], m, 3, 3) == count_box_partitions(3, 3, m)
    assert gr.count_diagram_extensions((3,), 4, 3, 3) == 1
    assert gr.count_diagram_extensions((2, 2), 4, 3, 3) == 1  # dots exhausted
    assert gr.count_diagram_extensions((1, 1), 5, 3, 3) == 0  # cannot place 3 more


def test_count_diagram_extensions_rejects_bad_prefix():
    with pytest.raises(InvalidPrefixError):
        gr.count_diagram_extensions((4,), 4, 3, 3)
    with pytest.raises(InvalidPrefixError):
        gr.count_diagram_extensions((1, 2), 4, 3, 3)  # counts must not grow
    with pytest.raises(InvalidPrefixError):
        gr.count_diagram_extensions((1,) * 4, 4, 3, 3)


def test_rank_diagram_examples():
    assert gr.rank_diagram(diagram(3, 3, (3, 1, 0))) == 0
    assert gr.rank_diagram(diagram(3, 3, (3, 3, 3))) == 0
    assert gr.rank_diagram(diagram(4, 2, (4, 4))) == 0


def test_rank_diagram_bijective_per_size_class():
    for size in range(10):
        family = all_diagrams(3, 3, size)
        family.sort(key=functools.cmp_to_key(gr.compare_diagrams))
        assert [gr.rank_diagram(F) for F in family] == list(range(len(family)))


def test_unrank_diagram_examples():
    assert gr.unrank_diagram(0, 4, 3, 3).cols == (3, 1, 0)
    assert gr.unrank_diagram(0, 9, 3, 3).cols == (3, 3, 3)
    with pytest.raises(IndexOutOfRangeError):
        gr.unrank_diagram(3, 4, 3, 3)
    with pytest.raises(IndexOutOfRangeError):
        gr.unrank_diagram(-1, 4, 3, 3)


def test_diagram_roundtrip_all_small_boxes():
    for rows in range(5):
        for cols in range(5):
            for size in range(rows * cols + 1):
                family = all_diagrams(rows, cols, size)
                count = count_box_partitions(rows, cols, size)
                assert len(family) == count
                for index in range(count):
                    F = gr.unrank_diagram(index, size, rows, cols)
                    assert gr.rank_diagram(F) == index
                for F in family:
                    assert gr.unrank_diagram(gr.rank_diagram(F), size, rows, cols) == F


def four_subspace_example():
    """The known G_2(6,3) chain: Y < X < Z < W under the tableaux order."""
    X = gr.assemble((1, 1, 0, 0, 1, 0), (1, 1, 1, 1, 1, 1, 1), 2)
    Y = gr.assemble((1, 0, 1, 1, 0, 0), (1, 0, 1, 0, 0, 1, 1), 2)
    Z = gr.assemble((1, 0, 1, 0, 1, 0), (1, 1, 0, 1, 1, 1), 2)
    W = gr.assemble((1, 0, 1, 0, 1, 0), (1, 1, 1, 1, 1, 1), 2)
    return X, Y, Z, W


def test_four_subspace_tableaux_shapes():
    X, Y, Z, W = four_subspace_example()
    assert tableaux_rows(gr.ferrers_of(X)) == [(1, 1, 1), (1, 1, 1), (1,)]
    assert tableaux_rows(gr.ferrers_of(Y)) == [(1, 0, 1), (0, 0), (1, 1)]
    assert tableaux_rows(gr.ferrers_of(Z)) == [(1, 1, 1), (1, 1), (0,)]
    assert tableaux_rows(gr.ferrers_of(W)) == [(1, 1, 1), (1, 1), (1,)]


def test_compare_ferrers_known_chain():
    X, Y, Z, W = four_subspace_example()
    assert gr.compare_ferrers(Y, X) == -1
    assert gr.compare_ferrers(X, Z) == -1
    assert gr.compare_ferrers(Z, W) == -1
    assert gr.compare_ferrers(W, W) == 0


def test_compare_ferrers_total_order_exhaustive():
    params = gr.Params(2, 5, 2)
    chain = sorted(
        gr.enumerate_all(params), key=functools.cmp_to_key(gr.compare_ferrers)
    )
    for a, b in zip(chain, chain[1:]):
        assert gr.compare_ferrers(a, b) == -1
    assert chain == gr.sorted_enumeration(params, "ferrers")


def test_rank_ferrers_worked_value():
    assert gr.rank_ferrers(x0_matrix()) == 1323


def test_rank_ferrers_minimum():
    assert gr.rank_ferrers(identity_block(2, 6, 3)) == 0
    assert gr.rank_ferrers(identity_block(3, 4, 2)) == 0


def test_rank_ferrers_full_box_is_entry_value():
    # the first q^(k(n-k)) positions belong to full-box subspaces, in
    # entry-value order
    params = gr.Params(2, 5, 2)
    for X in gr.enumerate_all(params):
        ft = gr.ferrers_of(X)
        if ft.diagram.size == 6:
            assert gr.rank_ferrers(X) == ft.value
        else:
            assert gr.rank_ferrers(X) >= 2**6


def test_rank_ferrers_blocks_are_contiguous():
    # subspaces sharing a diagram occupy exactly q^m consecutive positions
    params = gr.Params(2, 5, 2)
    by_diagram = {}
    for X in gr.enumerate_all(params):
        ft = gr.ferrers_of(X)
        by_diagram.setdefault(ft.diagram, []).append(gr.rank_ferrers(X))
    for D, ranks in by_diagram.items():
        ranks.sort()
        assert len(ranks) == 2**D.size
        assert ranks == list(range(ranks[0], ranks[0] + len(ranks)))


def test_unrank_ferrers_worked_value():
    assert gr.unrank_ferrers(1323, gr.Params(2, 6, 3)) == x0_matrix()


def test_unrank_ferrers_zero():
    X = gr.unrank_ferrers(0, gr.Params(2, 6, 3))
    assert gr.ferrers_of(X).diagram.size == 9
    assert gr.ferrers_of(X).value == 0
    assert X == identity_block(2, 6, 3)


def test_unrank_ferrers_range_checks():
    with pytest.raises(IndexOutOfRangeError):
        gr.unrank_ferrers(1395, gr.Params(2, 6, 3))
    with pytest.raises(IndexOutOfRangeError):
        gr.unrank_ferrers(-1, gr.Params(2, 6, 3))


def test_roundtrip_exhaustive():
    params = gr.Params(2, 6, 3)
    for index, X in enumerate(gr.sorted_enumeration(params, "ferrers")):
        assert gr.rank_ferrers(X) == index
        assert gr.unrank_ferrers(index, params) == X


def test_roundtrip_odd_alphabet():
    params = gr.Params(3, 4, 2)
    for index, X in enumerate(gr.sorted_enumeration(params, "ferrers")):
        assert gr.rank_ferrers(X) == index
        assert gr.unrank_ferrers(index, params) == X


def test_degenerate_dimensions():
    for params in (gr.Params(2, 4, 0), gr.Params(2, 4, 4), gr.Params(3, 1, 1)):
        X = gr.unrank_ferrers(0, params)
        assert gr.rank_ferrers(X) == 0
