"""
The bialgebra of stable Grothendieck polynomials over the basis indexed
by partitions: structure constants by signed tableau counting, element
arithmetic, the coproduct, Pieri closed forms, the row-removal
homomorphisms, conjugation, and the truncated inverse of t = 1 - G_1
with the antipode recursion built on it.

Every coefficient is an exact Python integer, so overflow cannot occur;
signed counts come straight from the enumeration kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import comb

from .shapes import (
    Partition,
    SkewShape,
    conjugate,
    contains,
    inner_corner_count,
    part,
    partition_sort_key,
    partitions_containing,
    partitions_up_to,
    rook_strip_subpartitions,
    straight,
    strip_classify,
    subpartitions,
    trim,
    weight,
)
from .tableaux import (
    FULL_INTERVAL,
    column_word,
    content_of,
    enumerate_tableaux,
    reverse_lattice_tableaux,
    superstandard,
)


# ---------------------------------------------------------------------------
# structure constants


@cache
def product_expansion(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """All coefficients of G_lam * G_mu at once.

    Fillings of lam * mu with a reverse lattice word force the mu block
    to be superstandard, so only the lam block is enumerated, with the
    word of U(mu) as suffix.  Contents are the expansion labels and the
    sign alternates with the number of extra entries.
    """
    suffix = column_word(superstandard(mu))
    base = weight(lam) + weight(mu)
    out: dict[Partition, int] = {}
    for t in reverse_lattice_tableaux(straight(lam), suffix=suffix):
        content, size = content_of(t)
        padded = list(content) + [0] * (len(mu) - len(content))
        for i, m in enumerate(mu):
            padded[i] += m
        nu = trim(tuple(padded))
        out[nu] = out.get(nu, 0) + (-1) ** (size + weight(mu) - base)
    return out


def c_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The product structure constant on G_nu in G_lam * G_mu."""
    if weight(nu) < weight(lam) + weight(mu):
        return 0
    if not contains(nu, lam) or not contains(nu, mu):
        return 0
    return product_expansion(lam, mu).get(nu, 0)


@cache
def classical_lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Classical Littlewood-Richardson number via single-valued skew
    tableaux of shape nu/lam with content mu and reverse lattice word.

    A deliberately separate code path from the set-valued counting.
    """
    if weight(nu) != weight(lam) + weight(mu) or not contains(nu, lam):
        return 0
    shape = SkewShape(nu, lam)
    return sum(
        1
        for _ in enumerate_tableaux(
            shape,
            max(len(mu), 1),
            target_content=mu,
            lattice_intervals=FULL_INTERVAL,
            single_valued=True,
        )
    )


@cache
def classical_support_envelope(lam: Partition, mu: Partition) -> Partition:
    """Componentwise maximum of all classical LR supports; products are
    supported inside it."""
    rows: list[int] = []
    for nu in partitions_up_to(weight(lam) + weight(mu)):
        if weight(nu) == weight(lam) + weight(mu) and classical_lr(lam, mu, nu):
            for i, v in enumerate(nu):
                if i < len(rows):
                    rows[i] = max(rows[i], v)
                else:
                    rows.append(v)
    return trim(tuple(rows))


def d_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Coproduct structure constant, counted directly from the
    definition: tableaux of shape nu with content (lam, mu), partially
    reverse lattice for [1, p] and [p+1, p+q] with p, q the exact
    lengths."""
    p, q = len(lam), len(mu)
    content = lam + mu
    if weight(nu) > weight(content):
        return 0
    intervals = []
    if p >= 1:
        intervals.append((1, p))
    if q >= 1:
        intervals.append((p + 1, p + q))
    n = sum(
        1
        for _ in enumerate_tableaux(
            straight(nu),
            max(p + q, 1),
            target_content=content,
            lattice_intervals=intervals,
        )
    )
    return (-1) ** (weight(lam) + weight(mu) - weight(nu)) * n


@cache
def alpha_skew_all(outer: Partition, inner: Partition) -> dict[Partition, int]:
    """Expansion of a skew G-function over the basis: signed counts of
    reverse-lattice fillings grouped by content."""
    shape = SkewShape(outer, inner)
    out: dict[Partition, int] = {}
    for t in reverse_lattice_tableaux(shape):
        content, size = content_of(t)
        mu = trim(content)
        out[mu] = out.get(mu, 0) + (-1) ** (size - shape.size)
    return out


def alpha_skew(shape: SkewShape, mu: Partition) -> int:
    """Signed count of reverse-lattice fillings of `shape` with content
    mu."""
    n = sum(
        1
        for _ in enumerate_tableaux(
            shape,
            max(len(mu), 1),
            target_content=mu,
            lattice_intervals=FULL_INTERVAL,
        )
    )
    return (-1) ** (weight(mu) - shape.size) * n


def multi_coeff(shape: SkewShape, mu_list: tuple[Partition, ...]) -> int:
    """Coefficient of the iterated coproduct of a skew G-function:
    stacked lattice intervals, concatenated content."""
    intervals = []
    offset = 0
    content: tuple[int, ...] = ()
    for mu in mu_list:
        if mu:
            intervals.append((offset + 1, offset + len(mu)))
        content += mu
        offset += len(mu)
    n = sum(
        1
        for _ in enumerate_tableaux(
            shape,
            max(offset, 1),
            target_content=content,
            lattice_intervals=intervals,
        )
    )
    return (-1) ** (shape.size + sum(weight(m) for m in mu_list)) * n


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class GammaElement:
    """A finite integer combination of basis symbols indexed by
    partitions."""

    coeffs: tuple[tuple[Partition, int], ...]

    @classmethod
    def from_dict(cls, d: dict[Partition, int]) -> "GammaElement":
        items = tuple(
            sorted(((k, v) for k, v in d.items() if v), key=lambda kv: partition_sort_key(kv[0]))
        )
        return cls(items)

    @classmethod
    def basis(cls, lam: Partition) -> "GammaElement":
        return cls.from_dict({lam: 1})

    @classmethod
    def one(cls) -> "GammaElement":
        return cls.basis(())

    @classmethod
    def zero(cls) -> "GammaElement":
        return cls(())

    def to_dict(self) -> dict[Partition, int]:
        return dict(self.coeffs)

    def __add__(self, other: "GammaElement") -> "GammaElement":
        d = self.to_dict()
        for k, v in other.coeffs:
            d[k] = d.get(k, 0) + v
        return GammaElement.from_dict(d)

    def __sub__(self, other: "GammaElement") -> "GammaElement":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "GammaElement":
        if not isinstance(scalar, int):
            return NotImplemented
        return GammaElement.from_dict({k: scalar * v for k, v in self.coeffs})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return multiply(self, other)

    def coeff(self, lam: Partition) -> int:
        return self.to_dict().get(lam, 0)

    def support(self) -> list[Partition]:
        return [k for k, _ in self.coeffs]

    def truncate(self, cap: int) -> "GammaElement":
        return GammaElement.from_dict(
            {k: v for k, v in self.coeffs if weight(k) <= cap}
        )

    def map_basis(self, fn) -> "GammaElement":
        out: dict[Partition, int] = {}
        for k, v in self.coeffs:
            nk = fn(k)
            out[nk] = out.get(nk, 0) + v
        return GammaElement.from_dict(out)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for lam, c in self.coeffs:
            name = "G[" + (",".join(map(str, lam)) if lam else "0") + "]"
            if c == 1:
                parts.append(f"+ {name}")
            elif c == -1:
                parts.append(f"- {name}")
            else:
                parts.append(f"{'-' if c < 0 else '+'} {abs(c)}*{name}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text


@dataclass(frozen=True)
class TensorElement:
    """A finite integer combination of basis tensors."""

    coeffs: tuple[tuple[tuple[Partition, Partition], int], ...]

    @classmethod
    def from_dict(cls, d) -> "TensorElement":
        items = tuple(
            sorted(
                ((k, v) for k, v in d.items() if v),
                key=lambda kv: (partition_sort_key(kv[0][0]), partition_sort_key(kv[0][1])),
            )
        )
        return cls(items)

    def to_dict(self):
        return dict(self.coeffs)

    def __add__(self, other):
        d = self.to_dict()
        for k, v in other.coeffs:
            d[k] = d.get(k, 0) + v
        return TensorElement.from_dict(d)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar: int):
        return TensorElement.from_dict({k: scalar * v for k, v in self.coeffs})

    def __mul__(self, other):
        """Componentwise product of tensors, bilinearly."""
        out: dict = {}
        for (a1, b1), c1 in self.coeffs:
            for (a2, b2), c2 in other.coeffs:
                left = product_expansion(a1, a2)
                right = product_expansion(b1, b2)
                for la, ca in left.items():
                    for mb, cb in right.items():
                        k = (la, mb)
                        out[k] = out.get(k, 0) + c1 * c2 * ca * cb
        return TensorElement.from_dict(out)

    def coeff(self, lam: Partition, mu: Partition) -> int:
        return self.to_dict().get((lam, mu), 0)


@dataclass(frozen=True)
class TruncatedGammaSeries:
    """A representative of an element of the completed ring modulo
    terms of weight above the cap."""

    element: GammaElement
    degree_cap: int


# ---------------------------------------------------------------------------
# ring and coring operations


def multiply(a: GammaElement, b: GammaElement, cap: int | None = None) -> GammaElement:
    out: dict[Partition, int] = {}
    for lam, ca in a.coeffs:
        for mu, cb in b.coeffs:
            for nu, c in product_expansion(lam, mu).items():
                if cap is not None and weight(nu) > cap:
                    continue
                out[nu] = out.get(nu, 0) + ca * cb * c
    return GammaElement.from_dict(out)


@cache
def sslash_expansion(nu: Partition, lam: Partition) -> GammaElement:
    """The basis expansion of the coproduct component attached to lam:
    the alternating rook-strip sum of skew expansions below lam."""
    if not contains(nu, lam):
        raise ValueError(f"{lam} not contained in {nu}")
    out: dict[Partition, int] = {}
    for sigma in rook_strip_subpartitions(lam):
        sgn = (-1) ** (weight(lam) - weight(sigma))
        for mu, c in alpha_skew_all(nu, sigma).items():
            out[mu] = out.get(mu, 0) + sgn * c
    return GammaElement.from_dict(out)


@cache
def coproduct_expansion(nu: Partition) -> dict[tuple[Partition, Partition], int]:
    """All coproduct coefficients of the basis element nu."""
    out: dict[tuple[Partition, Partition], int] = {}
    for lam in subpartitions(nu):
        for mu, c in sslash_expansion(nu, lam).coeffs:
            out[(lam, mu)] = c
    return {k: v for k, v in out.items() if v}


def coproduct(a: GammaElement) -> TensorElement:
    out: dict = {}
    for nu, c in a.coeffs:
        for k, d in coproduct_expansion(nu).items():
            out[k] = out.get(k, 0) + c * d
    return TensorElement.from_dict(out)


def counit(a: GammaElement) -> int:
    return a.coeff(())


def pieri_product(lam: Partition, ell: int) -> GammaElement:
    """G_{(1^ell)} * G_lam by the binomial closed form over vertical
    strips.

    A strip adds at most one box per row of lam plus a run of boxes in
    column one below the diagram.
    """
    if ell < 1:
        raise ValueError("ell must be at least 1")
    out: dict[Partition, int] = {}
    rows = len(lam)
    for mask in range(1 << rows):
        added = [(mask >> i) & 1 for i in range(rows)]
        head = tuple(lam[i] + added[i] for i in range(rows))
        if not all(head[i] >= head[i + 1] for i in range(rows - 1)):
            continue
        head_cols = {lam[i] + 1 for i in range(rows) if added[i]}
        for tail in range(0, ell + rows + 2):
            size = sum(added) + tail
            if size == 0:
                continue
            cols = head_cols | ({1} if tail else set())
            j = size - ell
            if j > len(cols) - 1:
                break
            if j < 0:
                continue
            nu = trim(head + (1,) * tail)
            out[nu] = (-1) ** j * comb(len(cols) - 1, j)
    return GammaElement.from_dict(out)


def pieri_coproduct(lam: Partition, mu: Partition, k: int) -> int:
    """The coproduct coefficient pairing mu with a one-row shape (k)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if not contains(lam, mu):
        return 0
    shape = SkewShape(lam, mu)
    if not strip_classify(shape)[2]:
        return 0
    lam_bar = trim(lam[1:])
    if not contains(mu, lam_bar):
        return 0
    r = sum(1 for i in range(1, len(mu) + 1) if part(mu, i) > part(lam_bar, i))
    j = k - shape.size
    if j < 0 or j > r:
        return 0
    return (-1) ** j * comb(r, j)


def phi_p(a: GammaElement, p: int) -> GammaElement:
    """The row-removal ring homomorphism: drop the top p rows of every
    label."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    return a.map_basis(lambda lam: trim(lam[p:]))


def conjugate_element(a: GammaElement) -> GammaElement:
    return a.map_basis(conjugate)


def t_element() -> GammaElement:
    return GammaElement.one() - GammaElement.basis((1,))


def t_multiply(a: GammaElement, cap: int | None = None) -> GammaElement:
    """Multiplication by t = 1 - G_1: the alternating rook-strip sum."""
    out: dict[Partition, int] = {}
    for lam, c in a.coeffs:
        for sigma in partitions_containing(lam, weight(lam) + len(lam) + 1):
            if cap is not None and weight(sigma) > cap:
                continue
            sh = SkewShape(sigma, lam)
            if strip_classify(sh)[0]:
                out[sigma] = out.get(sigma, 0) + c * (-1) ** sh.size
    return GammaElement.from_dict(out)


def t_inverse_mult(a: GammaElement, cap: int) -> TruncatedGammaSeries:
    """Multiplication by the inverse of t modulo weight above the cap:
    each basis label maps to the sum over all labels containing it."""
    out: dict[Partition, int] = {}
    for lam, c in a.coeffs:
        if weight(lam) > cap:
            continue
        for sigma in partitions_containing(lam, cap):
            out[sigma] = out.get(sigma, 0) + c
    return TruncatedGammaSeries(GammaElement.from_dict(out), cap)


@cache
def _antipode_basis(nu: Partition, cap: int) -> GammaElement:
    if not nu:
        return GammaElement.one()
    m = inner_corner_count(nu)
    total = GammaElement.zero()
    for lam in subpartitions(nu):
        if lam == nu:
            continue
        total = total + multiply(_antipode_basis(lam, cap), sslash_expansion(nu, lam), cap)
    result = (-1) * total
    for _ in range(m):
        result = t_inverse_mult(result, cap).element
    return result.truncate(cap)


def antipode(a: GammaElement, cap: int) -> TruncatedGammaSeries:
    """The antipode of the localized bialgebra, evaluated modulo weight
    above the cap via its defining recursion."""
    out = GammaElement.zero()
    for nu, c in a.coeffs:
        out = out + c * _antipode_basis(nu, cap)
    return TruncatedGammaSeries(out.truncate(cap), cap)
