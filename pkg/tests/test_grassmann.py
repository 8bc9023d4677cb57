from itertools import permutations as iperms

import pytest

from kgamma.gamma import GammaElement, c_coeff, multiply
from kgamma.grassmann import (
    GrassmannContext,
    c_rectangle,
    dual_pairing,
    k_multiply,
    pushforward,
    reduce_to_grassmannian,
    schubert_class,
    triple_intersection,
    triple_intersection_alt,
)
from kgamma.shapes import partitions_up_to

G = GammaElement.basis


def test_context():
    ctx = GrassmannContext(2, 4)
    assert ctx.rectangle == (2, 2)
    assert ctx.complement((1,)) == (2, 1)
    assert len(ctx.basis_partitions()) == 6
    with pytest.raises(ValueError):
        GrassmannContext(3, 3)


def test_reduce():
    ctx = GrassmannContext(2, 4)
    assert reduce_to_grassmannian(G((3,)), ctx).element == GammaElement.zero()
    r = reduce_to_grassmannian(multiply(G((1,)), G((1,))), ctx)
    assert r.element.to_dict() == {(2,): 1, (1, 1): 1, (2, 1): -1}
    assert reduce_to_grassmannian(GammaElement.one(), ctx).element == GammaElement.one()


def test_k_multiply_and_pushforward():
    ctx = GrassmannContext(2, 4)
    o1 = schubert_class((1,), ctx)
    sq = k_multiply(o1, o1)
    assert sq.element.to_dict() == {(2,): 1, (1, 1): 1, (2, 1): -1}
    assert pushforward(sq) == 1
    for lam in ctx.basis_partitions():
        assert pushforward(schubert_class(lam, ctx)) == 1
    unit = schubert_class((), ctx)
    assert k_multiply(unit, o1) == o1
    with pytest.raises(ValueError):
        k_multiply(o1, schubert_class((1,), GrassmannContext(2, 5)))


def test_quotient_soundness():
    for d, n in [(2, 4), (3, 6)]:
        ctx = GrassmannContext(d, n)
        for lam in partitions_up_to(4):
            for mu in partitions_up_to(4):
                if not (ctx.fits(lam) and ctx.fits(mu)):
                    continue
                lhs = reduce_to_grassmannian(multiply(G(lam), G(mu)), ctx)
                rhs = k_multiply(
                    reduce_to_grassmannian(G(lam), ctx),
                    reduce_to_grassmannian(G(mu), ctx),
                )
                assert lhs == rhs


def test_dual_pairing():
    for d, n in [(2, 4), (2, 5)]:
        ctx = GrassmannContext(d, n)
        for lam in ctx.basis_partitions():
            for mu in ctx.basis_partitions():
                expect = 1 if mu == ctx.complement(lam) else 0
                assert dual_pairing(lam, mu, ctx) == expect
    assert dual_pairing((1,), (2, 1), GrassmannContext(2, 4)) == 1
    assert dual_pairing((), (), GrassmannContext(1, 2)) == 0
    with pytest.raises(ValueError):
        dual_pairing((3,), (), GrassmannContext(2, 4))


def test_rectangle_shortcut():
    for d, n in [(2, 4), (2, 5)]:
        ctx = GrassmannContext(d, n)
        for lam in ctx.basis_partitions():
            for mu in ctx.basis_partitions():
                assert c_rectangle(lam, mu, ctx) == c_coeff(lam, mu, ctx.rectangle)


def test_triple_intersection_values():
    ctx = GrassmannContext(2, 4)
    assert triple_intersection((1,), (1,), (1,), ctx) == 1
    assert triple_intersection((), (), (2, 2), ctx) == 1
    assert triple_intersection((1,), (), (2, 2), ctx) == 0
    ctx49 = GrassmannContext(4, 9)
    assert triple_intersection((3, 2, 1), (3, 2, 1), (4, 2, 1), ctx49) == -1
    with pytest.raises(ValueError):
        triple_intersection((3,), (), (), ctx)


def test_triple_symmetry_gr24():
    ctx = GrassmannContext(2, 4)
    parts = ctx.basis_partitions()
    for lam in parts:
        for mu in parts:
            for nu in parts:
                base = triple_intersection(lam, mu, nu, ctx)
                for a, b, c in iperms((lam, mu, nu)):
                    assert triple_intersection(a, b, c, ctx) == base


def test_alternative_formula_gr25():
    ctx = GrassmannContext(2, 5)
    parts = ctx.basis_partitions()
    for lam in parts[::2]:
        for mu in parts[1::2]:
            for nu in parts:
                assert triple_intersection(lam, mu, nu, ctx) == triple_intersection_alt(
                    lam, mu, nu, ctx
                )
