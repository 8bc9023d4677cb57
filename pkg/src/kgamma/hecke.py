"""
The degenerate Hecke algebra H_n(0) over polynomial coefficients.

Generators u_1..u_n satisfy distant commutation, the braid relation and
u_i^2 = -u_i, with basis u_w over S_{n+1}.  Right multiplication by a
generator acts on one-line tuples of fixed length n+1:
u_w u_i = u_{w s_i} when the position ascends, else -u_w.

Besides full element arithmetic this module provides a targeted
coefficient extractor: the coefficient of a fixed u_w in a product of
factors (1 + x u_i) is accumulated backwards through the factor list,
which confines the live states to the Bruhat interval below w.
"""

from __future__ import annotations

from .polynomial import TruncatedPolynomial
from .shapes import Perm, canonical_perm, embed

FullPerm = tuple[int, ...]  # fixed-length one-line notation


def u_right(w: FullPerm, i: int) -> tuple[FullPerm, int]:
    """u_w * u_i as (permutation, sign): (w s_i, +1) on ascent, (w, -1)
    on descent."""
    if w[i - 1] < w[i]:
        v = list(w)
        v[i - 1], v[i] = v[i], v[i - 1]
        return tuple(v), 1
    return w, -1


def demazure_word(word: tuple[int, ...], n: int) -> tuple[Perm, int]:
    """Product u_{i_1} ... u_{i_m} in H_n(0) as (permutation, sign)."""
    w: FullPerm = tuple(range(1, n + 2))
    sign = 1
    for i in word:
        if i > n:
            raise ValueError(f"generator u_{i} outside H_{n}(0)")
        w, s = u_right(w, i)
        sign *= s
    return canonical_perm(w), sign


class HeckeElement:
    """A finite map from permutations to truncated polynomials."""

    __slots__ = ("coeffs", "n")

    def __init__(self, n: int, coeffs: dict[FullPerm, TruncatedPolynomial] | None = None):
        self.n = n
        self.coeffs = {w: c for w, c in (coeffs or {}).items() if not c.is_zero()}

    @classmethod
    def one(cls, n: int, cap: int | None = None) -> "HeckeElement":
        ident = tuple(range(1, n + 2))
        return cls(n, {ident: TruncatedPolynomial.constant(1, cap)})

    def canonical(self) -> dict[Perm, TruncatedPolynomial]:
        return {canonical_perm(w): c for w, c in self.coeffs.items()}

    def times_factor(self, x: TruncatedPolynomial, i: int) -> "HeckeElement":
        """Multiply on the right by (1 + x u_i)."""
        out: dict[FullPerm, TruncatedPolynomial] = dict(self.coeffs)
        for w, c in self.coeffs.items():
            v, sign = u_right(w, i)
            add = x * c if sign > 0 else -(x * c)
            out[v] = out[v] + add if v in out else add
        return HeckeElement(self.n, out)

    def coeff(self, w: Perm) -> TruncatedPolynomial:
        return self.coeffs.get(embed(w, self.n + 1), TruncatedPolynomial())


def a_factor_indices(n: int, side: str) -> list[int]:
    """Generator indices of A(x) (descending) or B(x) (ascending)."""
    return list(range(n, 0, -1)) if side == "x" else list(range(1, n + 1))


def hecke_product(p: int, n: int, side: str, cap: int | None) -> HeckeElement:
    """The full product A(x_p) ... A(x_1) (or B's for the y side)."""
    out = HeckeElement.one(n, cap)
    for j in range(p, 0, -1):
        xj = TruncatedPolynomial.variable(j, "x", cap)
        for i in a_factor_indices(n, side):
            out = out.times_factor(xj, i)
    return out


def coeff_in_factors(
    target: Perm, factors: list[tuple[int, int]], n: int, cap: int | None
) -> TruncatedPolynomial:
    """Coefficient of u_target in prod of (1 + x_{var} u_{gen}) factors.

    `factors` lists (var, gen) pairs left to right.  Accumulates
    backwards: states v carry the coefficient of u_target in
    u_v * (remaining factors), so only the Bruhat interval below the
    target is ever populated.
    """
    t = embed(target, n + 1)
    state: dict[FullPerm, TruncatedPolynomial] = {
        t: TruncatedPolynomial.constant(1, cap)
    }
    for var, gen in reversed(factors):
        x = TruncatedPolynomial.variable(var, "x", cap)
        candidates = set(state)
        for w in state:
            if w[gen - 1] > w[gen]:
                v = list(w)
                v[gen - 1], v[gen] = v[gen], v[gen - 1]
                candidates.add(tuple(v))
        new: dict[FullPerm, TruncatedPolynomial] = {}
        for v in candidates:
            term = state.get(v, TruncatedPolynomial())
            if v[gen - 1] < v[gen]:
                w = list(v)
                w[gen - 1], w[gen] = w[gen], w[gen - 1]
                wc = state.get(tuple(w))
                if wc is not None:
                    term = term + x * wc
            elif v in state:
                term = term - x * state[v]
            if not term.is_zero():
                new[v] = term
        state = new
    ident = tuple(range(1, n + 2))
    return state.get(ident, TruncatedPolynomial.constant(0, cap))
