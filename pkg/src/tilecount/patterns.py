"""Factories for the weight patterns behind the product theorems.

Each function builds a ``WeightPattern`` from the parameters that appear in
the corresponding closed form.  The literal matrices at the bottom are the
fixed patterns whose diamond values collapse to powers of small primes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .aztec import WeightPattern
from .rational import RationalLike


def _interleave(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = []
    for x, y in zip(a, b):
        out.extend((x, y))
    return out


def _vec(xs) -> list[Fraction]:
    return [Fraction(x) for x in xs]


def two_row(xs, ys, ts, ws) -> WeightPattern:
    """2 x 2n pattern whose column pair i carries the cell roles

        x_i  t_i        (x = top edge, t = right, y = left, w = bottom)
        y_i  w_i

    so its diamond value is the double product of stanley_eval."""
    xs, ys, ts, ws = _vec(xs), _vec(ys), _vec(ts), _vec(ws)
    if not len(xs) == len(ys) == len(ts) == len(ws) >= 1:
        raise ValueError("four parameter rows of equal positive length required")
    return WeightPattern([_interleave(xs, ts), _interleave(ys, ws)])


def four_row(a, b, c, d) -> WeightPattern:
    """4 x 2n pattern: two rows of a_1 b_1 ... a_n b_n over two rows of
    c_1 d_1 ... c_n d_n."""
    a, b, c, d = _vec(a), _vec(b), _vec(c), _vec(d)
    if not len(a) == len(b) == len(c) == len(d) >= 1:
        raise ValueError("four parameter rows of equal positive length required")
    top, bottom = _interleave(a, b), _interleave(c, d)
    return WeightPattern([top, top, bottom, bottom])


def composition_bands(parts: Sequence[int], a: RationalLike, b: RationalLike,
                      bar: bool = False) -> WeightPattern:
    """4 x 2n two-value pattern for a column grouping d_1 + ... + d_m = n.

    Columns of block j carry (a over b) when j is odd and (b over a) when
    j is even — top value on the first two rows, bottom value on the last
    two, each column pair constant.  ``bar`` swaps the roles.
    """
    parts = tuple(int(d) for d in parts)
    if not parts or any(d < 1 for d in parts):
        raise ValueError("parts must be positive integers")
    a, b = Fraction(a), Fraction(b)
    top, bottom = [], []
    for j, d in enumerate(parts, start=1):
        odd = (j % 2 == 1) != bar
        top.extend([a if odd else b] * (2 * d))
        bottom.extend([b if odd else a] * (2 * d))
    return WeightPattern([top, top, bottom, bottom])


def zig(a: RationalLike, b: RationalLike) -> WeightPattern:
    """8 x 8 two-value zigzag pattern; the complementary pattern is
    ``zig(b, a)``."""
    a, b = Fraction(a), Fraction(b)
    rows = [
        "aabbbbaa",
        "aabbbbaa",
        "aaaabbbb",
        "aaaabbbb",
        "bbaaaabb",
        "bbaaaabb",
        "bbbbaaaa",
        "bbbbaaaa",
    ]
    return WeightPattern(
        [[a if ch == "a" else b for ch in row] for row in rows]
    )


def quad(a, b, c, d) -> WeightPattern:
    """4 x 4 pattern with rows (a b c d), (b a d c), (d c b a), (c d a b)."""
    a, b, c, d = Fraction(a), Fraction(b), Fraction(c), Fraction(d)
    return WeightPattern(
        [[a, b, c, d], [b, a, d, c], [d, c, b, a], [c, d, a, b]]
    )


def doubled_blocks(a, b, c, d) -> WeightPattern:
    """4 x 2n pattern built from four length-n vectors: column pair i is

        a_i      b_i
        d_i      c_i
        d_i/D_i  c_i/D_i      with D_i = a_i c_i + b_i d_i.
        a_i/D_i  b_i/D_i
    """
    a, b, c, d = _vec(a), _vec(b), _vec(c), _vec(d)
    if not len(a) == len(b) == len(c) == len(d) >= 1:
        raise ValueError("four parameter rows of equal positive length required")
    rows = [[], [], [], []]
    for ai, bi, ci, di in zip(a, b, c, d):
        delta = ai * ci + bi * di
        if delta == 0:
            raise ValueError("degenerate column pair: ac + bd == 0")
        rows[0].extend((ai, bi))
        rows[1].extend((di, ci))
        rows[2].extend((di / delta, ci / delta))
        rows[3].extend((ai / delta, bi / delta))
    return WeightPattern(rows)


def eight_column(a, b, c, d, x, y, z, t) -> WeightPattern:
    """4 x 8 pattern interlocking two quadruples (a,b,c,d) and (x,y,z,t).

    Every 2 x 2 block pairs a with c and b with d (or x with z and y with
    t), so every cell of every tiled diamond has value ac + bd or xz + yt.
    Specializing a=c, b=d, x=z, y=t to the two quadruples of q_pattern
    reproduces that pattern exactly.
    """
    a, b, c, d, x, y, z, t = (
        Fraction(v) for v in (a, b, c, d, x, y, z, t)
    )
    return WeightPattern(
        [
            [a, b, x, y, b, a, y, x],
            [d, c, t, z, c, d, z, t],
            [x, y, a, b, y, x, b, a],
            [t, z, d, c, z, t, c, d],
        ]
    )


def s_family_pattern(family: int) -> WeightPattern:
    """The fixed 4 x 4 pattern attached to square-lattice family 1..4."""
    if family == 1:
        return quad(Fraction(3, 2), Fraction(1, 2), 1, 1)
    if family == 2:
        h, t = Fraction(1, 2), Fraction(3, 2)
        return WeightPattern(
            [[h, t, h, h], [t, h, h, h], [h, h, t, h], [h, h, h, t]]
        )
    if family == 3:
        return quad(Fraction(1, 5), Fraction(3, 5), 1, 1)
    if family == 4:
        h, t = Fraction(1, 2), Fraction(3, 2)
        return WeightPattern(
            [[h, h, h, t], [h, h, t, h], [t, h, 1, 1], [h, t, 1, 1]]
        )
    raise ValueError("family must be 1, 2, 3 or 4")


def q_pattern() -> WeightPattern:
    """The fixed 4 x 8 pattern whose diamond values count the mixed
    square/octagon region; equals doubled_blocks on the vectors
    (1/5, 3/2, 3/5, 1/2) with a == c and b == d per block."""
    f = Fraction
    return WeightPattern(
        [
            [f(1, 5), f(3, 5), f(3, 2), f(1, 2), f(3, 5), f(1, 5), f(1, 2), f(3, 2)],
            [f(3, 5), f(1, 5), f(1, 2), f(3, 2), f(1, 5), f(3, 5), f(3, 2), f(1, 2)],
            [f(3, 2), f(1, 2), f(1, 5), f(3, 5), f(1, 2), f(3, 2), f(3, 5), f(1, 5)],
            [f(1, 2), f(3, 2), f(3, 5), f(1, 5), f(3, 2), f(1, 2), f(1, 5), f(3, 5)],
        ]
    )


def tri_pattern() -> WeightPattern:
    """The fixed 4 x 4 pattern (zero entries included) whose diamond values
    count unit-triangle dissections of the bowtie-hexagon family."""
    f = Fraction
    return WeightPattern(
        [
            [f(1, 2), f(1, 2), f(1, 2), f(1, 2)],
            [f(1, 2), 1, 0, f(1, 2)],
            [f(3, 2), 0, 1, f(1, 2)],
            [f(3, 2), f(3, 2), f(1, 2), f(1, 2)],
        ]
    )
