"""
Sparse exact integer polynomials in two variable banks x_1,x_2,... and
y_1,y_2,..., with an optional total-degree cap.

Terms are stored in a dict keyed by a pair of exponent tuples, each with
trailing zeros stripped so equal monomials have equal keys.  All
coefficients are exact Python integers.  A cap of None means no
truncation; binary operations truncate to the smaller cap, since terms
above a cap are unknown rather than zero.
"""

from __future__ import annotations

from typing import Iterable

Exponents = tuple[int, ...]
Key = tuple[Exponents, Exponents]


def _trim(e: Iterable[int]) -> Exponents:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _min_cap(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class TruncatedPolynomial:
    """An exact sparse polynomial, optionally truncated by total degree."""

    __slots__ = ("terms", "cap")

    def __init__(self, terms: dict[Key, int] | None = None, cap: int | None = None):
        self.cap = cap
        self.terms: dict[Key, int] = {}
        if terms:
            for (xe, ye), c in terms.items():
                if c == 0:
                    continue
                key = (_trim(xe), _trim(ye))
                if cap is not None and sum(key[0]) + sum(key[1]) > cap:
                    continue
                self.terms[key] = self.terms.get(key, 0) + c
            self.terms = {k: c for k, c in self.terms.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, c: int, cap: int | None = None) -> "TruncatedPolynomial":
        return cls({((), ()): c}, cap)

    @classmethod
    def variable(cls, i: int, bank: str = "x", cap: int | None = None):
        xe = _trim([0] * (i - 1) + [1])
        key = (xe, ()) if bank == "x" else ((), xe)
        return cls({key: 1}, cap)

    @classmethod
    def monomial(cls, xe: Iterable[int], ye: Iterable[int] = (), c: int = 1,
                 cap: int | None = None):
        return cls({(_trim(xe), _trim(ye)): c}, cap)

    # -- basics ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, xe: Iterable[int], ye: Iterable[int] = ()) -> int:
        return self.terms.get((_trim(xe), _trim(ye)), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = TruncatedPolynomial.constant(other)
        return isinstance(other, TruncatedPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def min_degree(self) -> int | None:
        if not self.terms:
            return None
        return min(sum(xe) + sum(ye) for xe, ye in self.terms)

    def max_degree(self) -> int | None:
        if not self.terms:
            return None
        return max(sum(xe) + sum(ye) for xe, ye in self.terms)

    def homogeneous_part(self, d: int) -> "TruncatedPolynomial":
        return TruncatedPolynomial(
            {k: c for k, c in self.terms.items() if sum(k[0]) + sum(k[1]) == d},
            self.cap,
        )

    def truncate(self, cap: int | None) -> "TruncatedPolynomial":
        return TruncatedPolynomial(dict(self.terms), _min_cap(self.cap, cap))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "TruncatedPolynomial":
        if isinstance(other, int):
            other = TruncatedPolynomial.constant(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TruncatedPolynomial(out, _min_cap(self.cap, other.cap))

    __radd__ = __add__

    def __neg__(self) -> "TruncatedPolynomial":
        return TruncatedPolynomial({k: -c for k, c in self.terms.items()}, self.cap)

    def __sub__(self, other) -> "TruncatedPolynomial":
        if isinstance(other, int):
            other = TruncatedPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedPolynomial":
        if isinstance(other, int):
            return TruncatedPolynomial(
                {k: c * other for k, c in self.terms.items()}, self.cap
            )
        cap = _min_cap(self.cap, other.cap)
        out: dict[Key, int] = {}
        for (xa, ya), ca in self.terms.items():
            da = sum(xa) + sum(ya)
            for (xb, yb), cb in other.terms.items():
                if cap is not None and da + sum(xb) + sum(yb) > cap:
                    continue
                xe = _add_exp(xa, xb)
                ye = _add_exp(ya, yb)
                k = (xe, ye)
                out[k] = out.get(k, 0) + ca * cb
        return TruncatedPolynomial(out, cap)

    __rmul__ = __mul__

    # -- variable manipulations ---------------------------------------------

    def swap_x(self, i: int) -> "TruncatedPolynomial":
        """Exchange x_i and x_{i+1}."""
        out: dict[Key, int] = {}
        for (xe, ye), c in self.terms.items():
            e = list(xe) + [0] * max(0, i + 1 - len(xe))
            e[i - 1], e[i] = e[i], e[i - 1]
            k = (_trim(e), ye)
            out[k] = out.get(k, 0) + c
        return TruncatedPolynomial(out, self.cap)

    def is_symmetric_x(self, p: int) -> bool:
        return all(self.swap_x(i) == self for i in range(1, p))

    def set_x_zero_beyond(self, p: int) -> "TruncatedPolynomial":
        """Substitute x_i = 0 for i > p."""
        return TruncatedPolynomial(
            {k: c for k, c in self.terms.items() if len(k[0]) <= p}, self.cap
        )

    def shift_x(self, k: int) -> "TruncatedPolynomial":
        """Rename x_i to x_{i+k}."""
        out: dict[Key, int] = {}
        for (xe, ye), c in self.terms.items():
            key = (_trim((0,) * k + xe), ye)
            out[key] = out.get(key, 0) + c
        return TruncatedPolynomial(out, self.cap)

    def substitute_x1(self, value: int) -> "TruncatedPolynomial":
        """Substitute x_1 = value and shift x_{i+1} to x_i.

        Truncation is unsafe under this substitution unless the result
        is interpreted at the same cap; the caller decides.
        """
        out: dict[Key, int] = {}
        for (xe, ye), c in self.terms.items():
            a = xe[0] if xe else 0
            coeff = c * (value**a)
            if coeff == 0:
                continue
            k = (_trim(xe[1:]), ye)
            out[k] = out.get(k, 0) + coeff
        return TruncatedPolynomial(out, self.cap)

    def divide_exact(self, i: int) -> "TruncatedPolynomial":
        """Exact division by (x_i - x_{i+1}); raises if not divisible."""
        rem = dict(self.terms)
        quot: dict[Key, int] = {}
        while rem:
            # take the term with the highest x_i exponent (ties broken by key)
            key = max(rem, key=lambda k: (_exp_at(k[0], i), k))
            c = rem.pop(key)
            xe, ye = key
            a = _exp_at(xe, i)
            if a == 0:
                raise ArithmeticError("polynomial not divisible by x_i - x_{i+1}")
            qx = _with_exp(xe, i, a - 1)
            qk = (qx, ye)
            quot[qk] = quot.get(qk, 0) + c
            # subtract c * x^qx * (x_i - x_{i+1}); the x_i part cancels `key`
            lowx = _with_exp(qx, i + 1, _exp_at(qx, i + 1) + 1)
            lk = (lowx, ye)
            rem[lk] = rem.get(lk, 0) + c
            if rem[lk] == 0:
                del rem[lk]
        return TruncatedPolynomial(quot, self.cap)

    def pi(self, i: int) -> "TruncatedPolynomial":
        """Isobaric divided difference:
        ((1 - x_{i+1}) f - (1 - x_i) f^{swap}) / (x_i - x_{i+1})."""
        xi = TruncatedPolynomial.variable(i, "x")
        xi1 = TruncatedPolynomial.variable(i + 1, "x")
        swapped = self.swap_x(i)
        numerator = (1 - xi1) * self - (1 - xi) * swapped
        return numerator.divide_exact(i)

    # -- presentation --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Key, int]]:
        """Graded order: total degree ascending, then exponents lex."""
        return sorted(
            self.terms.items(),
            key=lambda kv: (sum(kv[0][0]) + sum(kv[0][1]), kv[0]),
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for (xe, ye), c in self.sorted_terms():
            factors = [f"x{i}^{e}" if e > 1 else f"x{i}"
                       for i, e in enumerate(xe, 1) if e]
            factors += [f"y{j}^{e}" if e > 1 else f"y{j}"
                        for j, e in enumerate(ye, 1) if e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if factors:
                body = ("" if mag == 1 else f"{mag}*") + "*".join(factors)
            else:
                body = str(mag)
            chunks.append(f"{sign} {body}")
        text = " ".join(chunks)
        return text[2:] if text.startswith("+ ") else text

    def __repr__(self) -> str:
        return f"TruncatedPolynomial({self})"

    def to_json(self) -> list:
        return [
            {"x": list(xe), "y": list(ye), "c": c}
            for (xe, ye), c in self.sorted_terms()
        ]


def _add_exp(a: Exponents, b: Exponents) -> Exponents:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, e in enumerate(b):
        out[i] += e
    return _trim(out)


def _exp_at(e: Exponents, i: int) -> int:
    return e[i - 1] if i <= len(e) else 0


def _with_exp(e: Exponents, i: int, v: int) -> Exponents:
    out = list(e) + [0] * max(0, i - len(e))
    out[i - 1] = v
    return _trim(out)


ONE = TruncatedPolynomial.constant(1)
ZERO = TruncatedPolynomial()
