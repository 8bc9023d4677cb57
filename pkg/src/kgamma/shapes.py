"""
Partitions, skew shapes and the permutation combinatorics that index
everything else: 321-avoidance, Grassmannian permutations, and the map
from skew diagrams to permutations via diagonal reading.

Partitions are plain tuples of positive integers in weakly decreasing
order, never storing trailing zeros, so equal partitions are equal
tuples.  Permutations are tuples in one-line notation; two permutations
that differ only by trailing fixed points are identified by
:func:`canonical_perm`.
"""

from __future__ import annotations

from dataclasses import dataclass

Partition = tuple[int, ...]
Perm = tuple[int, ...]


# ---------------------------------------------------------------------------
# partitions


def is_partition(parts: tuple[int, ...]) -> bool:
    """True if `parts` is weakly decreasing with all entries positive."""
    return all(a > 0 for a in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts: tuple[int, ...]) -> Partition:
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


def weight(lam: Partition) -> int:
    return sum(lam)


def part(lam: Partition, i: int) -> int:
    """The i-th part (1-based), zero beyond the stored length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def contains(outer: Partition, inner: Partition) -> bool:
    """Componentwise containment with implicit zero padding."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: lam'_j = #{i : lam_i >= j}."""
    if not lam:
        return ()
    return tuple(sum(1 for a in lam if a >= j) for j in range(1, lam[0] + 1))


def trim(parts: list[int] | tuple[int, ...]) -> Partition:
    """Drop trailing zeros and return a partition tuple."""
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return check_partition(tuple(parts))


def rotate180_in_rect(lam: Partition, p: int, q: int) -> Partition:
    """Complement of `lam` in the p x q rectangle, rotated 180 degrees.

    Requires lam to fit inside the rectangle.
    """
    if len(lam) > p or (lam and lam[0] > q):
        raise ValueError(f"{lam} does not fit in a {p}x{q} rectangle")
    padded = list(lam) + [0] * (p - len(lam))
    return trim([q - padded[p - 1 - i] for i in range(p)])


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of weight exactly n with parts bounded by max_part."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return out


def partitions_up_to(n: int) -> list[Partition]:
    """All partitions of weight at most n, weight ascending."""
    out: list[Partition] = []
    for k in range(n + 1):
        out.extend(partitions_of(k))
    return out


def subpartitions(lam: Partition) -> list[Partition]:
    """All partitions contained in lam."""
    if not lam:
        return [()]

    def rec(i: int, prev: int) -> list[tuple[int, ...]]:
        if i == len(lam):
            return [()]
        out = [()]
        for a in range(1, min(lam[i], prev) + 1):
            for rest in rec(i + 1, a):
                out.append((a,) + rest)
        return out

    return [trim(t) for t in rec(0, lam[0])]


def partitions_containing(lam: Partition, max_weight: int) -> list[Partition]:
    """All partitions containing lam of weight at most max_weight."""
    extra = max_weight - weight(lam)
    if extra < 0:
        return []
    out: list[Partition] = []

    def rec(i: int, prev: int, extra_left: int, acc: list[int]):
        lam_i = part(lam, i)
        if lam_i == 0:
            # acc is already a complete candidate; further rows are optional
            out.append(trim(tuple(acc)))
            lo, hi = 1, min(prev, extra_left)
        else:
            lo, hi = lam_i, min(prev, lam_i + extra_left)
        for v in range(lo, hi + 1):
            acc.append(v)
            rec(i + 1, v, extra_left - (v - lam_i), acc)
            acc.pop()

    rec(1, max_weight + 1, extra, [])
    return sorted(set(out), key=partition_sort_key)


def partition_sort_key(lam: Partition):
    """Canonical order: weight ascending, then lexicographically descending."""
    return (weight(lam), tuple(-a for a in lam))


def inner_corner_count(lam: Partition) -> int:
    """Number of indices i with lam_i > lam_{i+1} (inner corners)."""
    return sum(1 for i in range(len(lam)) if lam[i] > part(lam, i + 2))


def rook_strip_subpartitions(lam: Partition) -> list[Partition]:
    """All sigma inside lam with lam/sigma a rook strip."""
    out = []
    for sigma in subpartitions(lam):
        shape = SkewShape(lam, sigma)
        rook, _, _ = strip_classify(shape)
        if rook:
            out.append(sigma)
    return out


# ---------------------------------------------------------------------------
# skew shapes


@dataclass(frozen=True)
class SkewShape:
    """Boxes of `outer` not in `inner`, with inner contained in outer."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        check_partition(self.outer)
        check_partition(self.inner)
        if not contains(self.outer, self.inner):
            raise ValueError(f"{self.inner} not contained in {self.outer}")

    def boxes(self) -> list[tuple[int, int]]:
        """Box coordinates (row, col), 1-based, row-major."""
        out = []
        for r in range(1, len(self.outer) + 1):
            for c in range(part(self.inner, r) + 1, self.outer[r - 1] + 1):
                out.append((r, c))
        return out

    @property
    def size(self) -> int:
        return weight(self.outer) - weight(self.inner)

    def row_range(self, r: int) -> range:
        return range(part(self.inner, r) + 1, part(self.outer, r) + 1)

    def __str__(self) -> str:
        inner = ",".join(map(str, self.inner))
        outer = ",".join(map(str, self.outer)) or "0"
        return f"{outer}/{inner}" if inner else outer


def straight(lam: Partition) -> SkewShape:
    return SkewShape(lam, ())


def strip_classify(shape: SkewShape) -> tuple[bool, bool, bool]:
    """(is_rook_strip, is_vertical_strip, is_horizontal_strip).

    Rook: at most one box in every row and column; vertical: at most one
    per row; horizontal: at most one per column.  The empty shape is all
    three.
    """
    row_ok = all(
        part(shape.outer, r) - part(shape.inner, r) <= 1
        for r in range(1, len(shape.outer) + 1)
    )
    col_ok = all(
        part(conjugate(shape.outer), c) - part(conjugate(shape.inner), c) <= 1
        for c in range(1, (shape.outer[0] if shape.outer else 0) + 1)
    )
    return (row_ok and col_ok, row_ok, col_ok)


def star(lam: Partition, mu: Partition) -> SkewShape:
    """The corner-to-corner shape lam * mu.

    mu occupies the upper-right block (rows 1..len(mu), shifted right by
    lam_1) and lam the lower-left block, so the column word of a filling
    is (word of the lam part) followed by (word of the mu part).
    """
    if not lam:
        return SkewShape(mu, ())
    l1 = lam[0]
    outer = tuple(l1 + m for m in mu) + lam
    inner = tuple([l1] * len(mu))
    return SkewShape(trim(outer), trim(inner))


# ---------------------------------------------------------------------------
# permutations


def canonical_perm(w: tuple[int, ...]) -> Perm:
    """Strip trailing fixed points; the identity becomes ()."""
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {w}")
    w = list(w)
    while w and w[-1] == len(w):
        w.pop()
    return tuple(w)


def perm_apply(w: Perm, i: int) -> int:
    """w(i), treating w as the identity beyond its stored length."""
    return w[i - 1] if i <= len(w) else i


def embed(w: Perm, n: int) -> Perm:
    """One-line notation of w inside S_n (explicit embedding)."""
    if n < len(w):
        raise ValueError(f"cannot embed {w} into S_{n}")
    return tuple(perm_apply(w, i) for i in range(1, n + 1))


def shift(w: Perm, m: int) -> Perm:
    """The permutation 1^m x w."""
    return canonical_perm(tuple(range(1, m + 1)) + tuple(v + m for v in w))


def perm_length(w: Perm) -> int:
    """Number of inversions."""
    return sum(
        1
        for i in range(len(w))
        for j in range(i + 1, len(w))
        if w[i] > w[j]
    )


def perm_inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return canonical_perm(tuple(out))


def right_mult_s(w: Perm, i: int) -> Perm:
    """w * s_i (swap entries in positions i, i+1)."""
    v = list(embed(w, max(len(w), i + 1)))
    v[i - 1], v[i] = v[i], v[i - 1]
    return canonical_perm(tuple(v))


def longest_perm(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def conj_by_w0(w: Perm, n: int) -> Perm:
    """w0 * w * w0 inside S_n."""
    v = embed(w, n)
    return canonical_perm(tuple(n + 1 - v[n - i] for i in range(1, n + 1)))


def word_to_perm(word: tuple[int, ...]) -> Perm:
    """Product s_{i_1} s_{i_2} ... s_{i_m} of simple reflections."""
    if not word:
        return ()
    n = max(word) + 1
    v = list(range(1, n + 1))
    for i in word:
        v[i - 1], v[i] = v[i], v[i - 1]
    return canonical_perm(tuple(v))


def is_321_avoiding(w: Perm) -> bool:
    """True iff there are no i < j < k with w(i) > w(j) > w(k)."""
    n = len(w)
    # track, for each j, whether some earlier value exceeds w(j)
    for j in range(n):
        if any(w[i] > w[j] for i in range(j)):
            if any(w[k] < w[j] for k in range(j + 1, n)):
                return False
    return True


def descents(w: Perm) -> list[int]:
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def reduced_word(w: Perm) -> tuple[int, ...]:
    """A reduced word for w, selecting the leftmost descent first.

    Stripping the leftmost descent d turns w into w*s_d; the collected
    descents d_1, d_2, ... therefore satisfy w = s_{d_m} ... s_{d_1}.
    """
    v = w
    collected = []
    while v:
        d = descents(v)[0]
        collected.append(d)
        v = right_mult_s(v, d)
    return tuple(reversed(collected))


def diagonal_word(shape: SkewShape, diag_offset: int) -> tuple[int, ...]:
    """Diagonal numbers of the boxes, read right-to-left within rows,
    bottom row first.

    `diag_offset` is the diagonal number of the bottom-left box position;
    diagonals increase from southwest to northeast.
    """
    boxes = shape.boxes()
    if not boxes:
        return ()
    rmax = max(r for r, _ in boxes)
    cmin = min(c for r, c in boxes if r == rmax)
    base = diag_offset - (cmin - rmax)
    word = []
    for r in range(rmax, 0, -1):
        cols = sorted((c for rr, c in boxes if rr == r), reverse=True)
        for c in cols:
            d = c - r + base
            if d < 1:
                raise ValueError(
                    f"offset {diag_offset} puts box ({r},{c}) on diagonal {d}"
                )
            word.append(d)
    return tuple(word)


def skew_to_permutation(shape: SkewShape, diag_offset: int) -> Perm:
    """The 321-avoiding permutation of a skew diagram.

    The diagonal word is reduced for the result, which is asserted.
    """
    word = diagonal_word(shape, diag_offset)
    w = word_to_perm(word)
    assert perm_length(w) == len(word), "diagonal word is not reduced"
    return w


def grassmannian_permutation(lam: Partition, p: int) -> Perm:
    """The Grassmannian permutation for lam with descent in position p."""
    if p < len(lam):
        raise ValueError(f"descent position {p} < length of {lam}")
    head = [i + part(lam, p + 1 - i) for i in range(1, p + 1)]
    used = set(head)
    tail = [v for v in range(1, p + (lam[0] if lam else 0) + 1) if v not in used]
    return canonical_perm(tuple(head + tail))


# ---------------------------------------------------------------------------
# text forms shared with the CLI


def parse_partition(text: str) -> Partition:
    """Parse "3,2,1"; the empty partition is written "0"."""
    text = text.strip()
    if text in ("0", ""):
        return ()
    try:
        parts = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"bad partition: {text!r}") from None
    return check_partition(parts)


def parse_skew(text: str) -> SkewShape:
    """Parse "4,3,2/1" or "4,3,2" (straight shape)."""
    if "/" in text:
        outer, inner = text.split("/", 1)
        return SkewShape(parse_partition(outer), parse_partition(inner))
    return SkewShape(parse_partition(text), ())


def parse_perm(text: str) -> Perm:
    """Parse one-line notation "2,4,1,3"."""
    try:
        images = tuple(int(t) for t in text.strip().split(","))
    except ValueError:
        raise ValueError(f"bad permutation: {text!r}") from None
    return canonical_perm(images)


def partition_str(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "0"
