"""
Independent polynomial-level computations used to verify every counting
rule: signed tableau sums, Hecke products, divided differences with
stable limits, Schur functions, the Schur/G transition matrices, and
brute-force basis expansions.
"""

from __future__ import annotations

from collections import deque
from functools import cache

from .hecke import HeckeElement, a_factor_indices, coeff_in_factors, demazure_word, hecke_product
from .polynomial import TruncatedPolynomial
from .shapes import (
    Partition,
    Perm,
    SkewShape,
    canonical_perm,
    conjugate,
    contains,
    embed,
    partitions_up_to,
    perm_length,
    right_mult_s,
    shift,
    straight,
    weight,
)
from .tableaux import column_word, content_of, enumerate_tableaux

Word = tuple[int, ...]


# ---------------------------------------------------------------------------
# signed tableau sums and Schur functions


@cache
def svt_polynomial(
    shape: SkewShape, p: int, cap: int, bank: str = "x"
) -> TruncatedPolynomial:
    """Sum of (-1)^(|T| - boxes) x^T over set-valued tableaux with
    entries at most p and at most `cap` letters in total."""
    if p < 0:
        raise ValueError("negative variable count")
    if p == 0:
        return (
            TruncatedPolynomial.constant(1, cap)
            if shape.size == 0
            else TruncatedPolynomial(cap=cap)
        )
    terms: dict = {}
    nboxes = shape.size
    for t in enumerate_tableaux(shape, p, max_letters=cap):
        content, size = content_of(t)
        key = (content, ()) if bank == "x" else ((), content)
        terms[key] = terms.get(key, 0) + (-1) ** (size - nboxes)
    return TruncatedPolynomial(terms, cap)


@cache
def schur_polynomial(lam: Partition, p: int) -> TruncatedPolynomial:
    """Sum of x^T over semistandard tableaux of shape lam, entries <= p."""
    terms: dict = {}
    if len(lam) > p:
        return TruncatedPolynomial()
    for t in enumerate_tableaux(straight(lam), p, single_valued=True):
        content, _ = content_of(t)
        key = (content, ())
        terms[key] = terms.get(key, 0) + 1
    return TruncatedPolynomial(terms)


# ---------------------------------------------------------------------------
# Hecke products


def hecke_grothendieck(w: Perm, p: int, side: str = "x", cap: int = 10) -> TruncatedPolynomial:
    """Coefficient of u_w in A(x_p)...A(x_1), the stable polynomial
    G_w(x_1..x_p); the y side uses the reversed products B and computes
    G_w(0; x_1..x_p)."""
    if side not in ("x", "y"):
        raise ValueError("side must be 'x' or 'y'")
    if not w:
        return TruncatedPolynomial.constant(1, cap)
    n = len(w) - 1
    factors = [(j, i) for j in range(p, 0, -1) for i in a_factor_indices(n, side)]
    return coeff_in_factors(w, factors, n, cap)


def hecke_product_element(p: int, n: int, side: str = "x", cap: int = 10) -> HeckeElement:
    """The full Hecke element A(x_p)...A(x_1); exponential in n, for
    desk-scale cross-checks of the targeted extraction."""
    return hecke_product(p, n, side, cap)


# ---------------------------------------------------------------------------
# divided differences


@cache
def _groth_w0(n: int, double: bool) -> TruncatedPolynomial:
    out = TruncatedPolynomial.constant(1)
    for i in range(1, n):
        for j in range(1, n - i + 1):
            xi = TruncatedPolynomial.variable(i, "x")
            if double:
                yj = TruncatedPolynomial.variable(j, "y")
                out = out * (xi + yj - xi * yj)
            else:
                out = out * xi
    return out


@cache
def divided_difference_grothendieck(
    w: Perm, n: int, double: bool = False
) -> TruncatedPolynomial:
    """The exact Grothendieck polynomial of w in S_n, computed from the
    top polynomial by isobaric divided differences along ascents."""
    v = embed(w, n)
    if list(v) == sorted(v, reverse=True):
        return _groth_w0(n, double)
    i = next(i for i in range(1, n) if v[i - 1] < v[i])
    longer = canonical_perm(right_mult_s(v, i))
    return divided_difference_grothendieck(longer, n, double).pi(i)


def _staircase_factors(rank: int, p: int) -> list[tuple[int, int]]:
    """Factor list of the triangular pipe-dream product for single
    Grothendieck polynomials in S_rank, rows restricted to 1..p."""
    out = []
    for i in range(1, min(p, rank - 1) + 1):
        for k in range(rank - 1, i - 1, -1):
            out.append((i, k))
    return out


def finite_grothendieck_truncated(w: Perm, p: int, cap: int) -> TruncatedPolynomial:
    """The single Grothendieck polynomial of w restricted to x_1..x_p,
    truncated in total degree.

    Evaluated through the triangular product of Hecke factors whose
    coefficient of u_w enumerates the K-theoretic pipe dreams of w;
    dropping x_i for i > p removes the rows below p.  The convention is
    pinned against the divided-difference route in the test suite.
    """
    if not w:
        return TruncatedPolynomial.constant(1, cap)
    rank = len(w)
    return coeff_in_factors(w, _staircase_factors(rank, p), rank - 1, cap)


def stable_limit(w: Perm, p: int, cap: int, m_limit: int | None = None) -> TruncatedPolynomial:
    """Truncations of the Grothendieck polynomials of 1^m x w until two
    consecutive shifts agree (and m is at least the cap, a safe margin:
    an extra shift only affects degrees above those already fixed)."""
    w = canonical_perm(w)
    if m_limit is None:
        m_limit = 2 * cap + 2
    prev = None
    for m in range(m_limit + 1):
        cur = finite_grothendieck_truncated(shift(w, m), p, cap)
        if prev is not None and cur == prev and m >= cap:
            return cur
        prev = cur
    raise RuntimeError(f"no stabilization for {w} within {m_limit} shifts")


# ---------------------------------------------------------------------------
# Schur / G transitions


@cache
def g_lambda_mu(lam: Partition, mu: Partition) -> int:
    """Row-and-column strict fillings of mu/lam with row-i entries in
    [1, i-1]."""
    if not contains(mu, lam):
        raise ValueError(f"{lam} not contained in {mu}")
    boxes = SkewShape(mu, lam).boxes()
    filling: dict[tuple[int, int], int] = {}

    def rec(k: int) -> int:
        if k == len(boxes):
            return 1
        r, c = boxes[k]
        lo = 1
        left = filling.get((r, c - 1))
        if left is not None:
            lo = max(lo, left + 1)
        above = filling.get((r - 1, c))
        if above is not None:
            lo = max(lo, above + 1)
        total = 0
        for v in range(lo, r):
            filling[(r, c)] = v
            total += rec(k + 1)
        filling.pop((r, c), None)
        return total

    return rec(0)


@cache
def schur_G_transition(cap: int) -> tuple[dict, dict]:
    """(G_to_s, s_to_G) rows up to weight `cap`.

    G_to_s[lam][mu] = (-1)^{|mu/lam|} g_{lam mu}; the inverse is computed
    by unitriangular back-substitution ordered by weight.
    """
    parts = partitions_up_to(cap)
    g_to_s: dict[Partition, dict[Partition, int]] = {}
    for lam in parts:
        row = {}
        for mu in parts:
            if weight(mu) >= weight(lam) and contains(mu, lam):
                g = g_lambda_mu(lam, mu)
                if g:
                    row[mu] = (-1) ** (weight(mu) - weight(lam)) * g
        g_to_s[lam] = row
    s_to_g: dict[Partition, dict[Partition, int]] = {}
    # s_lam = G_lam - sum_{mu > lam} G_to_s[lam][mu] s_mu needs the rows
    # of strictly higher weight first
    for lam in sorted(parts, key=weight, reverse=True):
        row = {lam: 1}
        for mu, c in g_to_s[lam].items():
            if mu == lam:
                continue
            for nu, d in s_to_g[mu].items():
                row[nu] = row.get(nu, 0) - c * d
        s_to_g[lam] = {k: v for k, v in row.items() if v}
    return g_to_s, s_to_g


@cache
def g_w_lambda(w: Perm, lam: Partition) -> int:
    """Semistandard tableaux of shape lam' whose column word multiplies
    to +-u_w in the degenerate Hecke algebra."""
    n = max(len(w), 2)
    count = 0
    for t in enumerate_tableaux(straight(conjugate(lam)), n - 1, single_valued=True):
        v, _ = demazure_word(column_word(t), n - 1)
        if v == w:
            count += 1
    return count


def alpha_w(w: Perm, cap: int) -> dict[Partition, int]:
    """Expansion coefficients of the stable polynomial of w over the
    basis indexed by partitions, up to weight `cap`.

    Combines the Schur expansion counted by g_w_lambda with the
    triangular transition to the G-basis; the support must fit in the
    (n-1) x (n-1) box, which is asserted.
    """
    w = canonical_perm(w)
    if not w:
        return {(): 1}
    n = len(w)
    ell = perm_length(w)
    _, s_to_g = schur_G_transition(cap)
    out: dict[Partition, int] = {}
    for lam in partitions_up_to(cap):
        if lam and lam[0] >= n:
            continue
        g = g_w_lambda(w, lam)
        if not g:
            continue
        coeff = (-1) ** (weight(lam) - ell) * g
        for mu, c in s_to_g[lam].items():
            out[mu] = out.get(mu, 0) + coeff * c
    out = {k: v for k, v in out.items() if v}
    for mu in out:
        if (mu and mu[0] >= n) or len(mu) >= n:
            raise ValueError(
                f"alpha support {mu} escapes the S_{n} box; raise the cap"
            )
    return out


# ---------------------------------------------------------------------------
# basis expansions


def expand_in_stable_basis(
    f: TruncatedPolynomial, p: int, cap: int
) -> dict[Partition, int]:
    """Greedy expansion of a symmetric polynomial over the stable basis,
    eliminating by lowest degree; the residual must vanish."""
    if not f.is_symmetric_x(p):
        raise ValueError("input is not symmetric in x_1..x_p")
    residual = f.truncate(cap)
    out: dict[Partition, int] = {}
    while not residual.is_zero():
        d = residual.min_degree()
        h = residual.homogeneous_part(d)
        # peel the Schur components of the lowest degree, dominance-safely
        for lam in sorted(
            (l for l in partitions_up_to(d) if weight(l) == d and len(l) <= p),
            reverse=True,
        ):
            c = h.coeff(lam)
            if c:
                h = h - c * schur_polynomial(lam, p)
                out[lam] = out.get(lam, 0) + c
                residual = residual - c * svt_polynomial(straight(lam), p, cap)
        if not h.is_zero():
            raise ValueError(f"degree-{d} part is not in the span of Schur functions")
    return {k: v for k, v in out.items() if v}


def grothendieck_basis_expand(f: TruncatedPolynomial, n: int) -> dict[Perm, int]:
    """Expand an exact polynomial over the Grothendieck basis of S_n.

    The span is exactly the monomials with exponent of x_j at most n-j;
    elimination proceeds by the minimal monomial in (degree, lex) order,
    whose exponent vector is the Lehmer code of the unique candidate
    permutation.
    """
    for (xe, ye), _ in f.terms.items():
        if ye or len(xe) > n - 1 or any(xe[j] > n - 1 - j for j in range(len(xe))):
            raise ValueError(f"monomial {xe} outside the S_{n} staircase span")
    residual = f
    out: dict[Perm, int] = {}
    while not residual.is_zero():
        key = min(residual.terms, key=lambda k: (sum(k[0]), k[0]))
        code = key[0]
        c = residual.terms[key]
        w = _perm_from_code(code, n)
        out[w] = out.get(w, 0) + c
        residual = residual - c * divided_difference_grothendieck(w, n)
    return out


def _perm_from_code(code: tuple[int, ...], n: int) -> Perm:
    avail = list(range(1, n + 1))
    out = []
    for j in range(n):
        cj = code[j] if j < len(code) else 0
        out.append(avail.pop(cj))
    return canonical_perm(tuple(out))


# ---------------------------------------------------------------------------
# double polynomials


def double_grothendieck(nu: Partition, p: int, q: int, cap: int) -> TruncatedPolynomial:
    """G_nu(x_1..x_p; y_1..y_q) assembled from the coproduct expansion,
    with each y factor given by the conjugate single polynomial."""
    from .gamma import coproduct_expansion

    out = TruncatedPolynomial(cap=cap)
    for (lam, mu), d in coproduct_expansion(nu).items():
        fx = svt_polynomial(straight(lam), p, cap) if weight(lam) else TruncatedPolynomial.constant(1, cap)
        fy = (
            svt_polynomial(straight(conjugate(mu)), q, cap, bank="y")
            if weight(mu)
            else TruncatedPolynomial.constant(1, cap)
        )
        out = out + d * (fx * fy)
    return out


# ---------------------------------------------------------------------------
# local plactic relations


def _plactic_neighbors(word: Word) -> list[Word]:
    out = []
    w = list(word)
    for k in range(len(w) - 1):
        a, b = w[k], w[k + 1]
        if abs(a - b) >= 2:
            out.append(tuple(w[:k] + [b, a] + w[k + 2 :]))
    for k in range(len(w) - 2):
        a, b, c = w[k], w[k + 1], w[k + 2]
        repl = None
        if b == a + 1 and c == a:
            repl = [b, a, a]          # (i, i+1, i) -> (i+1, i, i)
        elif a == b + 1 and c == b:
            repl = [b, a, b]          # (i+1, i, i) -> (i, i+1, i)
        elif a == c and b == a - 1:
            repl = [a, a, b]          # (i+1, i, i+1) -> (i+1, i+1, i)
        elif a == b and c == a - 1:
            repl = [a, c, a]          # (i+1, i+1, i) -> (i+1, i, i+1)
        if repl is not None:
            out.append(tuple(w[:k] + repl + w[k + 3 :]))
    return out


def plactic_equivalent(w1: Word, w2: Word, budget: int = 200000) -> bool | None:
    """Decide local-plactic equivalence by breadth-first search over the
    rewriting moves; None when the budget runs out undecided."""
    w1, w2 = tuple(w1), tuple(w2)
    if sorted(w1) != sorted(w2):
        return False
    if w1 == w2:
        return True
    seen = {w1}
    queue = deque([w1])
    while queue and len(seen) <= budget:
        cur = queue.popleft()
        for nxt in _plactic_neighbors(cur):
            if nxt == w2:
                return True
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False if not queue else None
