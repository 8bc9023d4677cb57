"""
Set-valued tableaux: validation, words, contents, lattice predicates and
constrained enumeration.

A tableau is stored column-major: ``cols[c]`` lists the boxes of column
c+1 from top to bottom, each box a sorted tuple of distinct positive
integers.  Rows weakly increase (max of a box <= min of its right
neighbour) and columns strictly increase (max < min downwards).

Enumeration fills boxes in reverse column-word order (columns right to
left, top to bottom inside a column, letters of a box largest first), so
the column word is produced back to front and every reverse-lattice or
content constraint can be checked the moment a letter is placed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .shapes import Partition, SkewShape, conjugate, part

Box = tuple[int, ...]
Word = tuple[int, ...]
Interval = tuple[int, Optional[int]]

FULL_INTERVAL: tuple[Interval, ...] = ((1, None),)


@dataclass(frozen=True)
class Tableau:
    """A set-valued tableau of shape outer/inner in column-major form."""

    outer: Partition
    inner: Partition
    cols: tuple[tuple[Box, ...], ...]

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.outer, self.inner)

    def col_start(self, c: int) -> int:
        """Topmost row of column c (1-based)."""
        return part(conjugate(self.inner), c) + 1

    def boxes(self) -> dict[tuple[int, int], Box]:
        out = {}
        for ci, col in enumerate(self.cols, start=1):
            r0 = self.col_start(ci)
            for k, box in enumerate(col):
                out[(r0 + k, ci)] = box
        return out

    def box_at(self, r: int, c: int) -> Box | None:
        if not (1 <= c <= len(self.cols)):
            return None
        k = r - self.col_start(c)
        if 0 <= k < len(self.cols[c - 1]):
            return self.cols[c - 1][k]
        return None

    def size(self) -> int:
        """Total number of integers, counted with multiplicity |T|."""
        return sum(len(b) for col in self.cols for b in col)

    def __str__(self) -> str:
        rows = []
        for r in range(1, len(self.outer) + 1):
            cells = ["."] * part(self.inner, r)
            for c in range(part(self.inner, r) + 1, self.outer[r - 1] + 1):
                box = self.box_at(r, c)
                cells.append("{" + ",".join(map(str, box)) + "}")
            rows.append("".join(cells))
        return " / ".join(rows)


def from_box_map(shape: SkewShape, boxes: dict[tuple[int, int], Sequence[int]]) -> Tableau:
    """Build a tableau from a (row, col) -> entries mapping.

    The mapping must cover exactly the boxes of the shape with nonempty
    entry collections; validity of rows/columns is not enforced here.
    """
    expected = set(shape.boxes())
    if set(boxes) != expected:
        raise ValueError("box map does not match the shape")
    outer_conj = conjugate(shape.outer)
    inner_conj = conjugate(shape.inner)
    cols = []
    for c in range(1, (shape.outer[0] if shape.outer else 0) + 1):
        col = []
        for r in range(part(inner_conj, c) + 1, part(outer_conj, c) + 1):
            entries = tuple(sorted(set(boxes[(r, c)])))
            if not entries or entries[0] < 1:
                raise ValueError(f"bad box at {(r, c)}: {boxes[(r, c)]}")
            col.append(entries)
        cols.append(tuple(col))
    return Tableau(shape.outer, shape.inner, tuple(cols))


def validate(t: Tableau) -> bool:
    """True iff every box is nonempty, rows weakly increase and columns
    strictly increase."""
    for col in t.cols:
        for box in col:
            if not box or box[0] < 1 or list(box) != sorted(set(box)):
                return False
        for upper, lower in zip(col, col[1:]):
            if upper[-1] >= lower[0]:
                return False
    positions = t.boxes()
    for (r, c), box in positions.items():
        right = positions.get((r, c + 1))
        if right is not None and box[-1] > right[0]:
            return False
    # shape bookkeeping: column lengths must match the conjugate shapes
    outer_conj, inner_conj = conjugate(t.outer), conjugate(t.inner)
    if len(t.cols) != len(outer_conj):
        return False
    for c in range(1, len(t.cols) + 1):
        if len(t.cols[c - 1]) != part(outer_conj, c) - part(inner_conj, c):
            return False
    return True


def column_word(t: Tableau) -> Word:
    """Columns left to right, each column bottom to top, each box in
    increasing order."""
    word: list[int] = []
    for col in t.cols:
        for box in reversed(col):
            word.extend(box)
    return tuple(word)


def content_of(t: Tableau) -> tuple[tuple[int, ...], int]:
    """(c_1, c_2, ...) where c_i counts boxes containing i, plus |T|."""
    counts: dict[int, int] = {}
    for col in t.cols:
        for box in col:
            for v in box:
                counts[v] = counts.get(v, 0) + 1
    if not counts:
        return ((), 0)
    m = max(counts)
    content = tuple(counts.get(i, 0) for i in range(1, m + 1))
    return content, sum(content)


def word_content(w: Word) -> tuple[int, ...]:
    counts: dict[int, int] = {}
    for v in w:
        counts[v] = counts.get(v, 0) + 1
    if not counts:
        return ()
    return tuple(counts.get(i, 0) for i in range(1, max(counts) + 1))


def is_lattice(word: Word, intervals: Sequence[Interval] = FULL_INTERVAL) -> bool:
    """Partial reverse lattice condition.

    For every suffix of `word` and every p with [p, p+1] inside one of
    the given intervals [a, b] (b may be None for unbounded), p must
    occur at least as often as p+1 in that suffix.  With the single
    interval [1, None] this is exactly the reverse lattice condition.
    """
    counts: dict[int, int] = {}
    for p in reversed(word):
        counts[p] = counts.get(p, 0) + 1
        if _pair_constrained(p, intervals) and counts.get(p - 1, 0) < counts[p]:
            return False
    return True


def _pair_constrained(p: int, intervals: Sequence[Interval]) -> bool:
    """True if the pair (p-1, p) lies inside one of the intervals."""
    return any(a + 1 <= p and (b is None or p <= b) for a, b in intervals)


def superstandard(nu: Partition) -> Tableau:
    """U(nu): row i of the straight shape nu filled with the single
    entry i."""
    nu_conj = conjugate(nu)
    cols = tuple(
        tuple((r,) for r in range(1, nu_conj[c] + 1)) for c in range(len(nu_conj))
    )
    return Tableau(nu, (), cols)


def enumerate_tableaux(
    shape: SkewShape,
    max_entry: int,
    *,
    target_content: Partition | tuple[int, ...] | None = None,
    lattice_intervals: Sequence[Interval] | None = None,
    suffix: Word = (),
    single_valued: bool = False,
    max_letters: int | None = None,
) -> Iterator[Tableau]:
    """Yield every valid tableau on `shape` with entries <= max_entry
    satisfying the constraints, each exactly once, in a fixed order.

    target_content fixes the number of boxes containing each letter;
    lattice predicates are tested on column_word(T) followed by `suffix`;
    max_letters caps |T|.  Branches that already violate a constraint are
    pruned as soon as a letter is placed.
    """
    outer_conj = conjugate(shape.outer)
    inner_conj = conjugate(shape.inner)
    ncols = len(outer_conj)
    # fill order: columns right to left, rows top to bottom
    fill_order: list[tuple[int, int]] = []
    for c in range(ncols, 0, -1):
        for r in range(part(inner_conj, c) + 1, part(outer_conj, c) + 1):
            fill_order.append((r, c))
    nboxes = len(fill_order)

    top = max([max_entry] + [p for p in suffix])
    relevant = (
        {p for p in range(2, top + 2) if _pair_constrained(p, lattice_intervals)}
        if lattice_intervals
        else set()
    )
    counts = [0] * (top + 2)  # word-suffix counts, 1-based
    for p in reversed(suffix):
        counts[p] += 1
        if p in relevant and counts[p - 1] < counts[p]:
            return  # the supplied suffix already violates the condition

    target = None
    total_target = 0
    if target_content is not None:
        target = [0] * (max_entry + 1)
        for i, v in enumerate(target_content, start=1):
            if v < 0:
                return
            if i > max_entry:
                if v > 0:
                    return
                continue
            target[i] = v
        total_target = sum(target)
        if total_target < nboxes:
            return
    placed_content = [0] * (max_entry + 1)
    placed_total = 0

    # boxes assigned so far, keyed by position
    assigned: dict[tuple[int, int], Box] = {}

    def letter_ok(p: int) -> bool:
        if target is not None and placed_content[p] >= target[p]:
            return False
        if p in relevant and counts[p - 1] <= counts[p]:
            return False
        return True

    def box_candidates(lo: int, hi: int, budget: int) -> list[Box]:
        """Valid nonempty entry sets for the current box, canonically
        ordered; letters are test-placed largest first to mirror the
        word order."""
        out: list[Box] = []
        acc: list[int] = []

        def grow(next_hi: int):
            if acc:
                out.append(tuple(reversed(acc)))
                if single_valued:
                    return
            if len(acc) >= budget:
                return
            for p in range(next_hi, lo - 1, -1):
                if not letter_ok(p):
                    continue
                counts[p] += 1
                placed_content[p] += 1
                acc.append(p)
                grow(p - 1)
                acc.pop()
                counts[p] -= 1
                placed_content[p] -= 1

        grow(hi)
        out.sort(key=lambda s: (s[0], s))
        return out

    def apply_box(box: Box, delta: int):
        nonlocal placed_total
        for p in box:
            counts[p] += delta
            placed_content[p] += delta
        placed_total += delta * len(box)

    def rec(k: int) -> Iterator[Tableau]:
        nonlocal placed_total
        if k == nboxes:
            if target is not None and placed_total != total_target:
                return
            cols = []
            for c in range(1, ncols + 1):
                col = tuple(
                    assigned[(r, c)]
                    for r in range(part(inner_conj, c) + 1, part(outer_conj, c) + 1)
                )
                cols.append(col)
            yield Tableau(shape.outer, shape.inner, tuple(cols))
            return
        boxes_left = nboxes - k
        if target is not None:
            needed = total_target - placed_total
            if needed < boxes_left or needed > boxes_left * max_entry:
                return
        r, c = fill_order[k]
        lo, hi = 1, max_entry
        above = assigned.get((r - 1, c))
        if above is not None:
            lo = above[-1] + 1
        right = assigned.get((r, c + 1))
        if right is not None:
            hi = min(hi, right[0])
        if lo > hi:
            return
        budget = hi - lo + 1
        if max_letters is not None:
            budget = min(budget, max_letters - placed_total - (boxes_left - 1))
            if budget <= 0:
                return
        for box in box_candidates(lo, hi, budget):
            assigned[(r, c)] = box
            apply_box(box, +1)
            yield from rec(k + 1)
            apply_box(box, -1)
            del assigned[(r, c)]

    yield from rec(0)


def reverse_lattice_tableaux(
    shape: SkewShape, *, suffix: Word = (), max_entry: int | None = None
) -> Iterator[Tableau]:
    """All tableaux on `shape` whose word (followed by `suffix`) is a
    reverse lattice word.

    The largest letter of such a tableau is at most the number of boxes
    plus the suffix length: each letter m > 1 forces an occurrence of
    m-1 at a strictly later box or suffix position, giving a chain of
    length m through distinct positions.
    """
    if max_entry is None:
        max_entry = shape.size + len(suffix)
    yield from enumerate_tableaux(
        shape,
        max_entry,
        lattice_intervals=FULL_INTERVAL,
        suffix=suffix,
    )
