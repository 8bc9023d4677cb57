"""
Column bumping for set-valued tableaux: forward insertion, the products
box*tableau and column*tableau with extra-box marks, the reverse rules,
strip reversal, and the factorization inverse to column multiplication.

A column is a tuple of boxes (sorted tuples) from top to bottom, with
max(box) < min(next box).  The guard argument x0 is None for the
"infinity" guard used in plain products; membership tests against a box
are then false, which is exactly the product behaviour x . C.

Forward rules for inserting a single x with guard x0 into a column: let
i be the topmost box whose maximum is >= x (if none, x is appended in a
new bottom box and nothing is ejected).  Split that box as a|b with
a < x <= b.  If x0 lies in b, x simply joins the box and nothing is
ejected.  Otherwise b is bumped out, and x takes its place: alone in the
box if a is empty; in a new box appended below when the box was the
bottom one; and joining the box below otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .shapes import SkewShape, conjugate, strip_classify, trim
from .tableaux import Box, Tableau

Column = tuple[Box, ...]
Guard = int | None  # None plays the role of infinity (forward) / zero (reverse)


class BumpOutcome(NamedTuple):
    column: Column
    ejected: Box


@dataclass(frozen=True)
class MarkedProduct:
    """A column*tableau product together with its extra-box columns."""

    tableau: Tableau
    marks: frozenset[int]


def check_column(col: Column) -> Column:
    for box in col:
        if not box or list(box) != sorted(set(box)) or box[0] < 1:
            raise ValueError(f"bad box {box}")
    for upper, lower in zip(col, col[1:]):
        if upper[-1] >= lower[0]:
            raise ValueError(f"column not strictly increasing: {col}")
    return col


def _box_insert(box: Box, x: int) -> Box:
    return tuple(sorted(set(box) | {x}))


def insert_single(x: int, x0: Guard, col: Column) -> BumpOutcome:
    """Insert one integer with guard x0, applying the unique bumping rule."""
    land = next((i for i, box in enumerate(col) if box[-1] >= x), None)
    if land is None:
        # B1: x is larger than everything, append at the bottom
        return BumpOutcome(col + ((x,),), ())
    box = col[land]
    a = tuple(e for e in box if e < x)
    b = tuple(e for e in box if e >= x)
    if x0 is not None and x0 in b:
        # B6/B7: the guard sits in the bumped part, so x joins the box
        return BumpOutcome(
            col[:land] + (_box_insert(box, x),) + col[land + 1 :], ()
        )
    if not a:
        # B5: x replaces the whole box
        return BumpOutcome(col[:land] + ((x,),) + col[land + 1 :], b)
    if land == len(col) - 1:
        # B2: bottom box splits, x starts a new box below a
        return BumpOutcome(col[:land] + (a, (x,)), b)
    # B3/B4: x moves down and joins the next box
    return BumpOutcome(
        col[:land] + (a, _box_insert(col[land + 1], x)) + col[land + 2 :],
        b,
    )


def insert_set(x: Iterable[int], x0, col: Column) -> BumpOutcome:
    """Insert a set, largest element first, threading guards.

    A set-valued guard stands for its minimum.  The ejected sets of the
    individual steps are united.
    """
    xs = sorted(set(x))
    if not xs:
        raise ValueError("cannot insert the empty set")
    if isinstance(x0, (tuple, frozenset, set, list)):
        x0 = min(x0) if x0 else None
    ejected: set[int] = set()
    guard: Guard = x0
    for v in reversed(xs):
        col, out = insert_single(v, guard, col)
        ejected.update(out)
        guard = v
    return BumpOutcome(col, tuple(sorted(ejected)))


# ---------------------------------------------------------------------------
# products


def tableau_from_cols(cols: list[Column]) -> Tableau:
    lengths = tuple(len(c) for c in cols)
    if list(lengths) != sorted(lengths, reverse=True):
        raise ValueError(f"column lengths not weakly decreasing: {lengths}")
    outer = conjugate(trim(lengths))
    return Tableau(outer, (), tuple(cols))


def multiply_box(x: Iterable[int], t: Tableau) -> Tableau:
    """The product x . T of a one-box tableau with a straight-shape
    tableau: the ejected set of each column feeds the next column."""
    if t.inner:
        raise ValueError("products are defined for straight shapes only")
    cols = list(t.cols)
    carry = tuple(sorted(set(x)))
    if not carry:
        raise ValueError("cannot multiply by the empty set")
    for i in range(len(cols)):
        cols[i], carry = insert_set(carry, None, cols[i])
        if not carry:
            break
    else:
        if carry:
            cols.append((carry,))
            carry = ()
    result = tableau_from_cols(cols)
    added = SkewShape(result.outer, t.outer)
    assert strip_classify(added)[0], "product did not add a rook strip"
    return result


def multiply_column(col: Column, t: Tableau) -> MarkedProduct:
    """Bottom-up product C . T with the columns of the added strip that
    hold extra boxes recorded as marks."""
    check_column(col)
    if t.inner:
        raise ValueError("products are defined for straight shapes only")
    current = t
    marks: set[int] = set()
    strips: list[list[tuple[int, int]]] = []
    for box in col:  # C . T = x_l ( ... (x_1 . T)), x_1 applied first
        nxt = multiply_box(box, current)
        strips.append(sorted(set(nxt.shape.boxes()) - set(current.shape.boxes())))
        current = nxt
    added = SkewShape(current.outer, t.outer)
    assert strip_classify(added)[1], "column product did not add a vertical strip"
    for strip in strips:
        # boxes of one rook strip, sorted by row; the northernmost box is
        # the upper-right one, the rest are extra
        for _, c in strip[1:]:
            marks.add(c)
    return MarkedProduct(current, frozenset(marks))


# ---------------------------------------------------------------------------
# reverse rules


def reverse_single(col: Column, y: int, y0: Guard) -> tuple[Box, Column]:
    """Apply the unique reverse rule for a single integer y with guard y0.

    Returns (ejected set, new column).  Raises ValueError when no rule
    applies, which signals a malformed configuration.
    """
    land = None
    for i in range(len(col) - 1, -1, -1):
        if col[i][0] <= y:
            land = i
            break
    if land is None:
        raise ValueError(f"no reverse rule applies: {y} below column {col}")
    box = col[land]
    b = tuple(e for e in box if e <= y)
    c = tuple(e for e in box if e > y)
    if c:
        # R1: the box splits as b|c with b <= y < c; b is ejected and y
        # joins the box above
        if land == 0:
            raise ValueError(f"reverse of {y} into {col} has no box above")
        new_above = _box_insert(col[land - 1], y)
        return b, col[: land - 1] + (new_above, c) + col[land + 1 :]
    if y0 is not None and y0 in box:
        # R4/R5: the guard is in the box, y joins it
        return (), col[:land] + (_box_insert(box, y),) + col[land + 1 :]
    # R2/R3: y replaces the whole box, which is ejected
    return box, col[:land] + ((y,),) + col[land + 1 :]


def reverse_set(col: Column, y: Iterable[int], y0=None) -> tuple[Box, Column]:
    """Reverse a set, smallest element first, threading guards.

    A set-valued guard stands for its maximum; the default None plays
    the role of the zero guard.
    """
    ys = sorted(set(y))
    if not ys:
        raise ValueError("cannot reverse the empty set")
    if isinstance(y0, (tuple, frozenset, set, list)):
        y0 = max(y0) if y0 else None
    ejected: set[int] = set()
    guard: Guard = y0
    for v in ys:
        out, col = reverse_single(col, v, guard)
        ejected.update(out)
        guard = v
    return tuple(sorted(ejected)), col


def reverse_star(col: Column, y: Iterable[int]) -> tuple[Box, Column]:
    """The two-box variant inverting insertions that grew the column.

    After the plain reversal the bottom box either belongs to the
    inserted set (it came from a bottom split and is merged back into
    the box above: D2) or it is the appended remainder of the inserted
    set itself (it joins the ejected set and its box disappears: D1).
    """
    ys = set(y)
    x, col1 = reverse_set(col, y)
    if len(col1) < 1:
        raise ValueError("reverse* of an empty column")
    bottom = col1[-1]
    if not set(bottom) <= ys:
        # D1
        return tuple(sorted(set(x) | set(bottom))), col1[:-1]
    # D2
    if len(col1) < 2:
        raise ValueError(f"reverse* cannot merge the only box of {col1}")
    merged = tuple(sorted(set(col1[-2]) | set(bottom)))
    return x, col1[:-2] + (merged,)


def reverse_strip(t: Tableau, lam) -> tuple[Box, Tableau]:
    """Inverse of multiply_box along the rook strip sh(t)/lam.

    Walks from the strip's upper-right column leftwards, using the
    starred reversal exactly in the columns where the strip has a box.
    Returns (x, t') with x . t' == t.
    """
    if t.inner:
        raise ValueError("strip reversal needs a straight shape")
    shape = SkewShape(t.outer, lam)
    if shape.size == 0:
        raise ValueError("empty strip")
    if not strip_classify(shape)[0]:
        raise ValueError(f"{shape} is not a rook strip")
    strip_cols = {c for _, c in shape.boxes()}
    j = max(strip_cols)
    cols = list(t.cols)
    carry: Box = cols[j - 1][-1]
    cols[j - 1] = cols[j - 1][:-1]
    for i in range(j - 1, 0, -1):
        if i in strip_cols:
            carry, cols[i - 1] = reverse_star(cols[i - 1], carry)
        else:
            carry, cols[i - 1] = reverse_set(cols[i - 1], carry)
    if not cols[-1]:
        cols.pop()
    result = tableau_from_cols(cols)
    assert result.outer == lam, f"strip reversal produced shape {result.outer}"
    return carry, result


def split_strip_by_marks(
    shape: SkewShape, marks: frozenset[int], length: int
) -> list[list[tuple[int, int]]]:
    """Split a vertical strip into `length` rook strips, north to south,
    whose extra boxes occupy exactly the marked columns."""
    boxes = sorted(shape.boxes())  # row-major = north to south
    if not boxes:
        raise ValueError("empty strip")
    cols = {c for _, c in boxes}
    last_col = max(cols)
    if not marks <= cols or last_col in marks:
        raise ValueError(f"marks {sorted(marks)} invalid for {shape}")
    if len(marks) != len(boxes) - length:
        raise ValueError("mark count does not determine the factor column")
    north_of_col = {}
    for r, c in boxes:
        if c not in north_of_col:
            north_of_col[c] = (r, c)
    groups: list[list[tuple[int, int]]] = []
    for box in boxes:
        extra = box[1] in marks and north_of_col[box[1]] == box
        if groups and extra:
            groups[-1].append(box)
        else:
            groups.append([box])
    if len(groups) != length:
        raise ValueError("marks are inconsistent with the strip")
    for g in groups:
        if len({c for _, c in g}) != len(g):
            raise ValueError("marks do not cut the strip into rook strips")
    return groups


def factorize(t: Tableau, lam, marks: frozenset[int]) -> tuple[Column, Tableau]:
    """Inverse of multiply_column: recover (C, T) from (C . T, marks).

    lam is the shape of the unknown factor T; the marks determine the
    rook strips into which the added vertical strip splits.
    """
    shape = SkewShape(t.outer, lam)
    if not strip_classify(shape)[1]:
        raise ValueError(f"{shape} is not a vertical strip")
    length = shape.size - len(marks)
    if length < 1:
        raise ValueError("inconsistent marks: factor column would be empty")
    groups = split_strip_by_marks(shape, frozenset(marks), length)
    xs: list[Box] = []
    current = t
    for group in reversed(groups):  # peel the southernmost rook strip first
        below = _remove_boxes(current.outer, group)
        x, current = reverse_strip(current, below)
        xs.append(x)
    xs.reverse()
    column = tuple(xs)
    check_column(column)
    return column, current


def _remove_boxes(outer, boxes) -> tuple[int, ...]:
    rows = list(outer)
    for r, _ in boxes:
        rows[r - 1] -= 1
    return trim(tuple(rows))
