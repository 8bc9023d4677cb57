"""
The Grothendieck ring of a Grassmannian as the quotient of the stable
ring by the basis elements outside a d x (n-d) rectangle: quotient
arithmetic, pushforward to a point, the dual basis pairing and triple
intersection numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gamma import GammaElement, c_coeff, multiply, product_expansion, t_element
from .shapes import Partition, contains, rotate180_in_rect, subpartitions, trim


@dataclass(frozen=True)
class GrassmannContext:
    d: int
    n: int

    def __post_init__(self):
        if not 0 < self.d < self.n:
            raise ValueError(f"need 0 < d < n, got d={self.d}, n={self.n}")

    @property
    def rectangle(self) -> Partition:
        return trim(tuple([self.n - self.d] * self.d))

    def fits(self, lam: Partition) -> bool:
        return contains(self.rectangle, lam)

    def complement(self, lam: Partition) -> Partition:
        return rotate180_in_rect(lam, self.d, self.n - self.d)

    def basis_partitions(self) -> list[Partition]:
        return subpartitions(self.rectangle)


@dataclass(frozen=True)
class KClass:
    context: GrassmannContext
    element: GammaElement

    def coeff(self, lam: Partition) -> int:
        return self.element.coeff(lam)

    def __eq__(self, other):
        return (
            isinstance(other, KClass)
            and self.context == other.context
            and self.element == other.element
        )

    def __str__(self) -> str:
        return str(self.element)


def reduce_to_grassmannian(a: GammaElement, ctx: GrassmannContext) -> KClass:
    """Drop every basis label not contained in the rectangle."""
    kept = {lam: c for lam, c in a.coeffs if ctx.fits(lam)}
    return KClass(ctx, GammaElement.from_dict(kept))


def schubert_class(lam: Partition, ctx: GrassmannContext) -> KClass:
    if not ctx.fits(lam):
        raise ValueError(f"{lam} does not fit in Gr({ctx.d},{ctx.n})")
    return KClass(ctx, GammaElement.basis(lam))


def k_multiply(a: KClass, b: KClass) -> KClass:
    if a.context != b.context:
        raise ValueError("cannot multiply classes from different Grassmannians")
    return reduce_to_grassmannian(multiply(a.element, b.element), a.context)


def pushforward(a: KClass) -> int:
    """Pushforward to a point: every structure sheaf class has
    pushforward one, so this is the coefficient sum."""
    return sum(c for _, c in a.element.coeffs)


def c_rectangle(lam: Partition, mu: Partition, ctx: GrassmannContext) -> int:
    """Fast path for the coefficient on the full rectangle: one exactly
    when the rectangle is the disjoint union of lam and the rotated mu."""
    return 1 if ctx.fits(lam) and ctx.fits(mu) and mu == ctx.complement(lam) else 0


def dual_pairing(lam: Partition, mu: Partition, ctx: GrassmannContext) -> int:
    """Pushforward of t times the product of two structure sheaf
    classes; equals one exactly when mu is the rotated complement of
    lam."""
    if not ctx.fits(lam) or not ctx.fits(mu):
        raise ValueError("labels must fit in the rectangle")
    prod = multiply(t_element(), multiply(GammaElement.basis(lam), GammaElement.basis(mu)))
    return pushforward(reduce_to_grassmannian(prod, ctx))


def triple_intersection(
    lam: Partition, mu: Partition, nu: Partition, ctx: GrassmannContext
) -> int:
    """Pushforward of the product of three structure sheaf classes,
    evaluated as the sum of product coefficients below the rotated
    complement of nu."""
    for p in (lam, mu, nu):
        if not ctx.fits(p):
            raise ValueError(f"{p} does not fit in Gr({ctx.d},{ctx.n})")
    comp = ctx.complement(nu)
    expansion = product_expansion(lam, mu)
    return sum(c for sigma, c in expansion.items() if contains(comp, sigma))


def triple_intersection_alt(
    lam: Partition, mu: Partition, nu: Partition, ctx: GrassmannContext
) -> int:
    """The alternative evaluation summing coefficients on the rotated
    complement over labels containing lam."""
    comp = ctx.complement(nu)
    total = 0
    for sigma in ctx.basis_partitions():
        if contains(sigma, lam):
            total += c_coeff(sigma, mu, comp)
    return total
