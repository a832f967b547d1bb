"""Concrete lattice graphs: diamonds, fortress duals, and brick duals.

Tilings of a region correspond to perfect matchings of the region's dual
graph, so each builder here returns a ``WeightedGraph`` whose matching
generating function is the tiling count being studied.  These graphs are
the independent oracle against which both the reduction engine and every
closed-form product theorem are checked.

Vertex ids encode doubled coordinates ("p:q" for the point (p/2, q/2)) so
that half-integer lattice positions serialize exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .aztec import WeightMatrix, WeightPattern, tile_pattern
from .graph import WeightedGraph

HALF = Fraction(1, 2)


def _pid(x: Fraction, y: Fraction) -> str:
    """Vertex id for a lattice point, in doubled integer coordinates."""
    dx, dy = 2 * Fraction(x), 2 * Fraction(y)
    if dx.denominator != 1 or dy.denominator != 1:
        raise ValueError(f"not a half-integer point: ({x}, {y})")
    return f"{dx.numerator}:{dy.numerator}"


# -- diamond graphs ----------------------------------------------------------


def _matrix_entry(m: WeightMatrix, uc: Fraction, vc: Fraction) -> Fraction:
    """Weight of the diamond edge with midpoint (uc, vc).

    Midpoints map to the 2n x 2n matrix by row n + 1/2 - (uc + vc) and
    column uc - vc + n + 1/2 (1-based).
    """
    n = m.order
    i = n + HALF - (uc + vc)
    j = uc - vc + n + HALF
    if i.denominator != 1 or j.denominator != 1:
        raise ValueError(f"({uc}, {vc}) is not an edge midpoint")
    return m.rows[int(i) - 1][int(j) - 1]


def build_aztec_graph(
    n: int, weights: Union[WeightPattern, WeightMatrix, None] = None
) -> WeightedGraph:
    """The order-n diamond graph: vertices at half-integer (u, v) with
    |u| + |v| <= n, unit-distance edges.  ``weights`` may be a pattern
    (tiled), a full matrix, or None for all-ones.  Zero-weight entries are
    skipped entirely; they cannot occur in a matching.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    m: Optional[WeightMatrix] = None
    if isinstance(weights, WeightPattern):
        m = tile_pattern(weights, n)
    elif isinstance(weights, WeightMatrix):
        if weights.order != n:
            raise ValueError(f"matrix order {weights.order} != graph order {n}")
        m = weights
    elif weights is not None:
        raise TypeError("weights must be WeightPattern, WeightMatrix or None")

    g = WeightedGraph()
    doubled = range(-2 * n + 1, 2 * n, 2)  # numerators of half-integers

    def inside(u: Fraction, v: Fraction) -> bool:
        return abs(u) + abs(v) <= n

    for du in doubled:
        for dv in doubled:
            u, v = Fraction(du, 2), Fraction(dv, 2)
            if inside(u, v):
                g.add_vertex(_pid(u, v), (u, v))
    for du in doubled:
        for dv in doubled:
            u, v = Fraction(du, 2), Fraction(dv, 2)
            if not inside(u, v):
                continue
            for uu, vv in ((u + 1, v), (u, v + 1)):
                if not inside(uu, vv):
                    continue
                w = (
                    Fraction(1)
                    if m is None
                    else _matrix_entry(m, (u + uu) / 2, (v + vv) / 2)
                )
                if w != 0:
                    g.add_edge(_pid(u, v), _pid(uu, vv), w)
    return g


# -- fortress dual graphs ----------------------------------------------------
#
# A fortress of order n is carved into n rows of n unit cells; cell (r, c)
# (1-based) has center (c - r, n + 1 - r - c), so consecutive cells of a row
# share a corner, as do vertically adjacent cells.  A composition
# d_1 + ... + d_m = n groups the columns into blocks; within row r the cells
# of block j form one "city", *extended* when r + j is even (odd for the
# complementary fortress).  A regular city contributes the four unit edges
# of each of its cells on the corner lattice; an extended city of order k
# contributes a fresh diamond chain (equator e_0..e_k, tips n_i, s_i) whose
# boundary vertices hang by unit pendant edges from the corner lattice:
# e_0 from the first cell's NW corner, e_k from the last cell's SE corner,
# n_i / s_i from cell i's NE / SW corner.  Vertically and horizontally
# adjacent cells always carry opposite city types, so every pendant lands
# either on a regular city's corner or on a boundary corner used by no one
# else.


@dataclass(frozen=True)
class CitySpec:
    """Ids of one extended city, in the layout city_replace expects."""

    equator: tuple[str, ...]
    north: tuple[str, ...]
    south: tuple[str, ...]


def _cell_center(r: int, c: int, n: int) -> tuple[Fraction, Fraction]:
    return Fraction(c - r), Fraction(n + 1 - r - c)


def build_fortress_graph(
    parts: Sequence[int], bar: bool = False, with_cities: bool = False
):
    """Dual graph of the fortress of order n = sum(parts), with its columns
    grouped by ``parts``.  With ``bar`` the extended/regular roles of the
    cities are swapped.  With ``with_cities`` returns (graph, cities) where
    ``cities`` lists a CitySpec per extended city.
    """
    parts = tuple(int(d) for d in parts)
    if not parts or any(d < 1 for d in parts):
        raise ValueError("parts must be positive integers")
    n = sum(parts)

    block_of = []  # block index (1-based) for each column
    for j, d in enumerate(parts, start=1):
        block_of.extend([j] * d)
    starts = [0]
    for d in parts:
        starts.append(starts[-1] + d)

    g = WeightedGraph()
    cities: list[CitySpec] = []

    def corner(r, c, which):
        x, y = _cell_center(r, c, n)
        dx, dy = {
            "NE": (HALF, HALF),
            "NW": (-HALF, HALF),
            "SE": (HALF, -HALF),
            "SW": (-HALF, -HALF),
        }[which]
        return x + dx, y + dy

    def lattice(r, c, which):
        x, y = corner(r, c, which)
        vid = _pid(x, y)
        g.add_vertex(vid, (x, y))
        return vid

    for r in range(1, n + 1):
        for j, d in enumerate(parts, start=1):
            cols = range(starts[j - 1] + 1, starts[j] + 1)
            extended = (r + j) % 2 == (1 if bar else 0)
            if not extended:
                for c in cols:
                    nw, ne = lattice(r, c, "NW"), lattice(r, c, "NE")
                    sw, se = lattice(r, c, "SW"), lattice(r, c, "SE")
                    g.add_edge(nw, ne, 1)
                    g.add_edge(sw, se, 1)
                    g.add_edge(nw, sw, 1)
                    g.add_edge(ne, se, 1)
                continue

            first, last = cols[0], cols[-1]
            tag = f"x{r}.{j}"
            equator = [f"{tag}.e{i}" for i in range(d + 1)]
            north = [f"{tag}.n{i}" for i in range(1, d + 1)]
            south = [f"{tag}.s{i}" for i in range(1, d + 1)]

            for i, c in enumerate(cols):
                x, y = _cell_center(r, c, n)
                g.add_vertex(north[i], (x + HALF / 2, y + HALF / 2))
                g.add_vertex(south[i], (x - HALF / 2, y - HALF / 2))
            xf, yf = _cell_center(r, first, n)
            xl, yl = _cell_center(r, last, n)
            g.add_vertex(equator[0], (xf - HALF / 2, yf + HALF / 2))
            g.add_vertex(equator[d], (xl + HALF / 2, yl - HALF / 2))
            for i in range(1, d):
                x, y = corner(r, cols[0] + i - 1, "SE")
                g.add_vertex(equator[i], (x, y))

            for i in range(1, d + 1):
                g.add_edge(equator[i - 1], north[i - 1], 1)
                g.add_edge(north[i - 1], equator[i], 1)
                g.add_edge(equator[i - 1], south[i - 1], 1)
                g.add_edge(south[i - 1], equator[i], 1)

            g.add_edge(equator[0], lattice(r, first, "NW"), 1)
            g.add_edge(equator[d], lattice(r, last, "SE"), 1)
            for i, c in enumerate(cols):
                g.add_edge(north[i], lattice(r, c, "NE"), 1)
                g.add_edge(south[i], lattice(r, c, "SW"), 1)

            cities.append(
                CitySpec(tuple(equator), tuple(north), tuple(south))
            )

    if with_cities:
        return g, tuple(cities)
    return g


# -- brick wall dual graphs --------------------------------------------------
#
# Two brick walls over the square lattice, each filling the plane with one
# 1x2 brick followed by a longer brick per period, rows shifted so that
# even rows sit one unit right of odd rows:
#
#   kind "2-3": period 5, bricks [0,2) and [2,5)   (the 2-brick's interior
#                edge makes its dual cell a hexagon);
#   kind "2-1": period 3, bricks [0,2) and [2,3).
#
# The dual graph of a diamond-shaped window of side n is induced on the
# integer points with |2x - 1| + |2y - 1| <= 2n: all horizontal unit edges,
# plus the vertical unit edges crossed by no brick boundary.  The window is
# anchored so the brick boundary of the equator strip y in [0, 1] falls at
# x = n with the 2-brick east of it.


def build_brick_graph(n: int, kind: str = "2-3") -> WeightedGraph:
    if n < 1:
        raise ValueError("order must be positive")
    period = {"2-3": 5, "2-1": 3}.get(kind)
    if period is None:
        raise ValueError(f"unknown kind {kind!r}; use '2-3' or '2-1'")

    def inside(x: int, y: int) -> bool:
        return abs(2 * x - 1) + abs(2 * y - 1) <= 2 * n

    def wall(x: int, y: int) -> bool:
        """Is there a brick boundary at abscissa x in strip [y, y+1]?"""
        shift = 0 if y % 2 == 0 else -1
        return (x - n - shift) % period in (0, 2)

    g = WeightedGraph()
    ys = range(1 - n, n + 1)
    for y in ys:
        for x in ys:
            if inside(x, y):
                g.add_vertex(_pid(Fraction(x), Fraction(y)), (x, y))
    for y in ys:
        for x in ys:
            if not inside(x, y):
                continue
            a = _pid(Fraction(x), Fraction(y))
            if inside(x + 1, y):
                g.add_edge(a, _pid(Fraction(x + 1), Fraction(y)), 1)
            if inside(x, y + 1) and wall(x, y):
                g.add_edge(a, _pid(Fraction(x), Fraction(y + 1)), 1)
    return g


# -- debug rendering ---------------------------------------------------------


def render_svg(g: WeightedGraph, scale: int = 40) -> str:
    """Plain SVG picture of a graph whose vertices all carry coordinates.
    Non-unit weights are printed at edge midpoints.  Debugging aid only."""
    coords = {}
    for vid in g.vertices():
        c = g.coord(vid)
        if c is None:
            raise ValueError(f"vertex {vid} has no coordinates")
        coords[vid] = (float(c[0]), float(c[1]))
    xs = [p[0] for p in coords.values()]
    ys = [p[1] for p in coords.values()]
    pad = 1.0
    x0, y0 = min(xs) - pad, min(ys) - pad
    x1, y1 = max(xs) + pad, max(ys) + pad

    def sx(x):
        return (x - x0) * scale

    def sy(y):
        return (y1 - y) * scale  # flip: lattice y grows upward

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{sx(x1):.0f}" height="{sy(y0):.0f}">'
    ]
    for u, v, w in g.edges():
        (ux, uy), (vx, vy) = coords[u], coords[v]
        out.append(
            f'<line x1="{sx(ux):.1f}" y1="{sy(uy):.1f}" '
            f'x2="{sx(vx):.1f}" y2="{sy(vy):.1f}" '
            'stroke="black" stroke-width="1.5"/>'
        )
        if w != 1:
            mx, my = (ux + vx) / 2, (uy + vy) / 2
            out.append(
                f'<text x="{sx(mx):.1f}" y="{sy(my):.1f}" '
                f'font-size="10" fill="crimson">{w}</text>'
            )
    for vid, (x, y) in coords.items():
        out.append(
            f'<circle cx="{sx(x):.1f}" cy="{sy(y):.1f}" r="3" fill="black"/>'
        )
    out.append("</svg>")
    return "\n".join(out)
