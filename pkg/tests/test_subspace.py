import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import grassrank as gr
from grassrank.errors import (
    InconsistentExtensionError,
    InvalidParameterError,
    MalformedInputError,
    NonPrimeFieldError,
    NotRrefError,
    RankDeficientError,
    WrongEntryCountError,
)
from helpers import identity_block, running_example, tableaux_rows, x0_matrix


def test_validate_running_example():
    X = running_example()
    assert X.pivot_cols == (1, 3, 4)
    assert (X.n, X.k, X.q) == (7, 3, 2)


def test_validate_identity_block():
    X = identity_block(2, 6, 3)
    assert X.pivot_cols == (1, 2, 3)


def test_validate_rejects_bad_matrices():
    with pytest.raises(NotRrefError, match="not 1"):
        gr.validate_rref([(2, 0), (0, 1)], 3)
    with pytest.raises(NotRrefError, match="strictly right"):
        gr.validate_rref([(0, 1, 0), (1, 0, 0)], 2)
    with pytest.raises(NotRrefError, match="pivot column"):
        gr.validate_rref([(1, 1, 0), (0, 1, 0)], 2)
    with pytest.raises(NotRrefError, match="zero"):
        gr.validate_rref([(1, 0), (0, 0)], 2)
    with pytest.raises(NotRrefError):
        gr.validate_rref([(1, 0), (0, 3)], 2)  # entry out of range


def test_validate_degenerate_dimensions():
    empty = gr.validate_rref([], 2, n=5)
    assert (empty.n, empty.k) == (5, 0)
    with pytest.raises(InvalidParameterError):
        gr.validate_rref([], 2)


def test_identifying_vector_examples():
    assert gr.format_digit_string(gr.identifying_vector(running_example()), 2) == "1011000"
    assert gr.identifying_vector(identity_block(2, 7, 3)) == (1, 1, 1, 0, 0, 0, 0)
    assert gr.format_digit_string(gr.identifying_vector(x0_matrix()), 2) == "010110"


def test_extend_matches_display():
    E = gr.extend(running_example())
    assert E.rows == (
        (1, 0, 1, 1, 0, 0, 0),
        (1, 0, 0, 0, 1, 1, 0),
        (0, 0, 1, 0, 1, 0, 1),
        (0, 0, 0, 1, 0, 1, 1),
    )


def test_extend_zero_dimensional():
    E = gr.extend(gr.validate_rref([], 3, n=4))
    assert E.rows == ((0, 0, 0, 0),)
    assert gr.unextend(E).k == 0


def test_unextend_rejects_contradiction():
    X = running_example()
    bad_top = list(gr.identifying_vector(X))
    bad_top[1] = 1
    with pytest.raises(InconsistentExtensionError):
        gr.unextend(gr.ExtendedRepresentation(2, 7, (tuple(bad_top),) + X.rows))


def test_extend_roundtrip_exhaustive():
    params = gr.Params(2, 5, 2)
    for X in gr.enumerate_all(params):
        assert gr.unextend(gr.extend(X)) == X


def test_ferrers_of_running_example():
    ft = gr.ferrers_of(running_example())
    assert ft.diagram.cols == (3, 3, 3, 1)
    assert ft.diagram.row_counts() == (4, 3, 3)
    assert tableaux_rows(ft) == [(0, 1, 1, 0), (1, 0, 1), (0, 1, 1)]


def test_ferrers_of_identity_block():
    ft = gr.ferrers_of(identity_block(3, 5, 2))
    assert ft.diagram.cols == (2, 2, 2)
    assert ft.entries == (0,) * 6
    assert ft.diagram.size == 6


def test_ferrers_of_x0():
    ft = gr.ferrers_of(x0_matrix())
    assert ft.diagram.cols == (3, 1, 0)
    assert ft.entries == (1, 0, 1, 1)
    assert ft.value == 11


def test_diagram_from_vector_examples():
    assert gr.diagram_from_vector((1, 0, 1, 1, 0, 0, 0)).cols == (3, 3, 3, 1)
    assert gr.diagram_from_vector((1, 1, 0, 0, 0)).cols == (2, 2, 2)
    diagrams = {
        gr.diagram_from_vector(bits).cols
        for bits in itertools.permutations((1, 1, 0, 0))
    }
    # permutations repeat bit patterns; distinct vectors give distinct diagrams
    vectors = set(itertools.permutations((1, 1, 0, 0)))
    assert len(diagrams) == len(vectors) == 6


def test_vector_from_diagram_inverts():
    for n in range(7):
        for k in range(n + 1):
            for positions in itertools.combinations(range(n), k):
                bits = tuple(1 if i in positions else 0 for i in range(n))
                assert gr.vector_from_diagram(gr.diagram_from_vector(bits)) == bits


def test_diagram_depends_only_on_vector():
    params = gr.Params(2, 5, 2)
    for X in gr.enumerate_all(params):
        assert gr.ferrers_of(X).diagram == gr.diagram_from_vector(
            gr.identifying_vector(X)
        )


@pytest.mark.parametrize("q,n,k", [(2, 6, 3), (3, 4, 2)])
def test_assemble_inverts_ferrers_exhaustive(q, n, k):
    for X in gr.enumerate_all(gr.Params(q, n, k)):
        ft = gr.ferrers_of(X)
        assert gr.assemble(gr.identifying_vector(X), ft.entries, q) == X


def test_assemble_entry_count_checked():
    with pytest.raises(WrongEntryCountError):
        gr.assemble((1, 0, 0), (1,), 2)  # needs 2 free entries


def test_box_size_extremes():
    params = gr.Params(2, 5, 2)
    full = (1, 1, 0, 0, 0)
    for X in gr.enumerate_all(params):
        ft = gr.ferrers_of(X)
        assert ft.diagram.size <= 6
        assert (ft.diagram.size == 6) == (gr.identifying_vector(X) == full)


def test_extension_divisibility_invariant():
    # below a pivot bit the column is the w-th unit; under a zero bit the
    # bottom w digits vanish
    params = gr.Params(2, 5, 2)
    q, k = params.q, params.k
    for X in gr.enumerate_all(params):
        w = 0
        for j in range(1, params.n + 1):
            value = X.col_value(j)
            if X.has_pivot(j):
                assert value == q**w
                w += 1
            else:
                assert value % q**w == 0


def test_reduce_to_rref_fixes_nothing_when_canonical():
    X = running_example()
    assert gr.reduce_to_rref(X.rows, 2) == X


def test_reduce_to_rref_row_permutation():
    X = running_example()
    shuffled = (X.rows[2], X.rows[0], X.rows[1])
    assert gr.reduce_to_rref(shuffled, 2) == X


def test_reduce_to_rref_random_mix():
    rng = random.Random(20240901)
    X = identity_block(2, 6, 3)
    for _ in range(25):
        while True:
            mix = [[rng.randrange(2) for _ in range(3)] for _ in range(3)]
            try:
                rows = [
                    tuple(
                        sum(mix[r][s] * X.rows[s][c] for s in range(3)) % 2
                        for c in range(6)
                    )
                    for r in range(3)
                ]
                assert gr.reduce_to_rref(rows, 2) == X
                break
            except RankDeficientError:
                continue  # the random mix was singular; draw again


def test_reduce_to_rref_uniqueness_over_enumeration():
    params = gr.Params(3, 4, 2)
    for X in gr.enumerate_all(params):
        a, b = X.rows
        mixed = (
            tuple((e1 + 2 * e2) % 3 for e1, e2 in zip(a, b)),
            tuple((2 * e1 + 2 * e2) % 3 for e1, e2 in zip(a, b)),
        )
        # det of [[1,2],[2,2]] mod 3 = 1, so the rows still span X
        assert gr.reduce_to_rref(mixed, 3) == X


def test_reduce_to_rref_errors():
    with pytest.raises(RankDeficientError):
        gr.reduce_to_rref([(1, 1, 0), (1, 1, 0)], 2)
    with pytest.raises(NonPrimeFieldError):
        gr.reduce_to_rref([(1, 0), (0, 1)], 4)


def test_column_value_examples():
    assert gr.column_value((1, 0, 1), 2) == 5
    assert gr.column_value((0, 0, 0), 2) == 0
    assert gr.column_value((2, 1), 3) == 7


def test_matrix_text_roundtrip():
    X = x0_matrix()
    text = gr.format_matrix(X)
    assert text.splitlines()[0] == "2 6 3"
    assert gr.parse_matrix(text) == X


def test_matrix_text_zero_rows():
    X = gr.validate_rref([], 2, n=4)
    assert gr.parse_matrix(gr.format_matrix(X)) == X


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2 6\n",
        "2 6 3\n0 1 1 0 0 1\n",
        "2 6 1\n0 1 1 0 0\n",
        "2 6 1\nx y z a b c\n",
    ],
)
def test_parse_matrix_rejects_malformed(text):
    with pytest.raises(MalformedInputError):
        gr.parse_matrix(text)


def test_parse_matrix_rejects_non_echelon():
    with pytest.raises(NotRrefError):
        gr.parse_matrix("2 3 2\n0 1 0\n1 0 0\n")


def test_digit_string_formats():
    assert gr.format_digit_string((1, 0, 1, 1), 2) == "1011"
    assert gr.format_digit_string((11, 0, 3), 16) == "11 0 3"


def test_col_accessors():
    X = x0_matrix()
    assert X.col(1) == (1, 0, 1)
    assert X.col_value(1) == 5
    assert X.col(6) == (0, 0, 0)
    assert X.has_pivot(2) and not X.has_pivot(1)


def test_extended_column_stacks_bit_on_top():
    E = gr.extend(x0_matrix())
    assert E.col(1) == (0, 1, 0, 1)
    assert E.col_value(1) == 5  # zero bit adds nothing
    assert E.col(2) == (1, 0, 0, 1)
    assert E.col_value(2) == 2**3 + 1  # the bit is the most significant digit


@settings(max_examples=40, deadline=None)
@given(
    q=st.sampled_from([2, 3, 5]),
    n=st.integers(min_value=0, max_value=6),
    data=st.data(),
)
def test_assemble_accepts_any_vector_and_entries(q, n, data):
    k = data.draw(st.integers(min_value=0, max_value=n))
    positions = data.draw(
        st.sets(st.integers(min_value=0, max_value=max(n - 1, 0)), min_size=k, max_size=k)
        if n
        else st.just(set())
    )
    bits = tuple(1 if i in positions else 0 for i in range(n))
    size = gr.diagram_from_vector(bits).size
    entries = data.draw(
        st.lists(st.integers(min_value=0, max_value=q - 1), min_size=size, max_size=size)
    )
    X = gr.assemble(bits, entries, q)
    assert gr.identifying_vector(X) == bits
    assert gr.ferrers_of(X).entries == tuple(entries)
