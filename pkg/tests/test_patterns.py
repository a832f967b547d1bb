"""Structural laws of the named weight patterns.

Mostly cross-identities the builders promise in their docstrings: the
mixed square/octagon pattern is a doubled-blocks specialization and an
eight-column specialization; swapping the two values of a banded pattern
is the same as complementing it; the zigzag pattern's complement swaps
its two values.
"""

from fractions import Fraction as F

import pytest

from tilecount.aztec import WeightPattern
from tilecount.patterns import (
    composition_bands,
    doubled_blocks,
    eight_column,
    four_row,
    q_pattern,
    quad,
    s_family_pattern,
    tri_pattern,
    two_row,
    zig,
)


def test_shapes():
    assert (two_row([1], [1], [1], [1]).k, two_row([1], [1], [1], [1]).l) == (2, 2)
    assert four_row([1, 2], [1, 1], [2, 2], [1, 2]).k == 4
    assert four_row([1, 2], [1, 1], [2, 2], [1, 2]).l == 4
    assert (zig(1, 2).k, zig(1, 2).l) == (8, 8)
    assert (q_pattern().k, q_pattern().l) == (4, 8)
    assert (tri_pattern().k, tri_pattern().l) == (4, 4)
    for fam in (1, 2, 3, 4):
        assert (s_family_pattern(fam).k, s_family_pattern(fam).l) == (4, 4)


def test_two_row_interleaves_roles():
    p = two_row([1, 2], [3, 4], [5, 6], [7, 8])
    assert p.rows[0] == (1, 5, 2, 6)  # x1 t1 x2 t2
    assert p.rows[1] == (3, 7, 4, 8)  # y1 w1 y2 w2


def test_banded_pattern_layout():
    p = composition_bands((1, 2), 2, 3)
    assert p.rows[0] == (2, 2, 3, 3, 3, 3)  # block 1 odd, block 2 even
    assert p.rows[2] == (3, 3, 2, 2, 2, 2)
    assert p.rows[0] == p.rows[1] and p.rows[2] == p.rows[3]


def test_banded_complement_swaps_values():
    assert composition_bands((2, 1, 3), 2, 7, bar=True) == composition_bands(
        (2, 1, 3), 7, 2
    )


def test_banded_rejects_bad_parts():
    with pytest.raises(ValueError):
        composition_bands((), 1, 2)
    with pytest.raises(ValueError):
        composition_bands((2, 0), 1, 2)


def test_zig_complement_swaps_values():
    a, b = F(1, 2), F(3)
    swapped = WeightPattern(
        [[b if x == a else a for x in row] for row in zig(a, b).rows]
    )
    assert swapped == zig(b, a)


def test_quad_layout():
    assert quad(1, 2, 3, 4).rows == (
        (1, 2, 3, 4),
        (2, 1, 4, 3),
        (4, 3, 2, 1),
        (3, 4, 1, 2),
    )


def test_doubled_blocks_scales_lower_half():
    p = doubled_blocks([1], [2], [3], [1])
    delta = 1 * 3 + 2 * 1
    assert p.rows == (
        (1, 2),
        (1, 3),
        (F(1, delta), F(3, delta)),
        (F(1, delta), F(2, delta)),
    )


def test_doubled_blocks_rejects_degenerate_column():
    with pytest.raises(ValueError):
        doubled_blocks([1], [2], [-2], [1])  # ac + bd == 0


def test_octagon_pattern_is_doubled_blocks():
    ac = (F(1, 5), F(3, 2), F(3, 5), F(1, 2))
    bd = (F(3, 5), F(1, 2), F(1, 5), F(3, 2))
    assert q_pattern() == doubled_blocks(ac, bd, ac, bd)


def test_octagon_pattern_is_eight_column_specialization():
    assert q_pattern() == eight_column(
        F(1, 5), F(3, 5), F(1, 5), F(3, 5), F(3, 2), F(1, 2), F(3, 2), F(1, 2)
    )


def test_family_index_is_checked():
    with pytest.raises(ValueError):
        s_family_pattern(5)


def test_triangle_pattern_has_zero_cells():
    zeros = [x for row in tri_pattern().rows for x in row if x == 0]
    assert len(zeros) == 2


def test_vector_builders_reject_ragged_input():
    with pytest.raises(ValueError):
        two_row([1, 2], [1], [1, 2], [1, 2])
    with pytest.raises(ValueError):
        four_row([], [], [], [])
