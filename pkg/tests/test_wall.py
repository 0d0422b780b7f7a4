import itertools
import random

import pytest

from linktau.invariants import phi, phi_laurent
from linktau.rings import BiLaurent, C2Algebra, Laurent
from linktau.wall import (
    PairingData,
    SphereClass,
    lambda_disc,
    lambda_linear_combination,
    lambda_sphere,
    lambda_tilde,
    lambda_tilde_disc,
    relation4_instances,
)

t = Laurent.monomial(1, 1)
ONE_PLUS_T = C2Algebra(1, 1)


def pd(points, eps=1):
    return PairingData("D", tuple(points), eps)


def test_lambda_disc_examples():
    assert lambda_disc(pd([(1, 0), (1, 1)])) == 1 + t
    assert lambda_disc(pd([(1, 0), (1, 1)] * 2)) == 2 + 2 * t
    assert lambda_disc(pd([])) == Laurent()


def test_lambda_sphere_examples():
    assert lambda_sphere(SphereClass.build("A", [(1, 0), (1, 1)], eps=1)) == 1 - t * t
    assert lambda_sphere(SphereClass.build("A", [(1, 0)], eps=-1)) == 1 - t**-1
    for eps in (1, -1):
        assert lambda_sphere(SphereClass.build("A", [], eps=eps)) == Laurent()


def test_lambda_tilde_can_be_nonzero():
    assert lambda_tilde(SphereClass.build("A", [(1, 0)], eps=1)) == ONE_PLUS_T


def test_dual_disc_identity_exhaustive():
    pts = [(s, e) for s in (1, -1) for e in range(-2, 3)]
    for n in range(0, 3):
        for combo in itertools.combinations_with_replacement(pts, n):
            for eps in (1, -1):
                s = SphereClass.build("A", combo, eps=eps)
                assert lambda_tilde(s) == ONE_PLUS_T * lambda_tilde_disc(s.pairing)


def test_kirk_wall_values(kirk):
    assert [str(lambda_disc(s.pairing)) for s in kirk.spheres] == ["t + 1"] * 4 + ["2*t + 2"]
    assert all(lambda_tilde(s) == C2Algebra() for s in kirk.spheres)
    assert all(s.w2 == 0 for s in kirk.spheres)


def test_relation4_examples():
    zero = SphereClass.build("A", [])
    assert relation4_instances([zero], 3) == []
    s = SphereClass.build("A", [(1, 0), (1, 1)], eps=1)
    rel = relation4_instances([s], 1)
    assert BiLaurent({(1, 0): 1, (1, 2): -1}) in rel
    degenerate = SphereClass.build("A", [], w2=1)
    assert relation4_instances([degenerate], 0) == [BiLaurent({(0, 0): -1})]


def test_kirk_relation4_killed_by_phi(kirk):
    for r in relation4_instances(kirk.spheres, 20):
        assert phi(r) == C2Algebra()


def test_linear_combination_examples(kirk):
    a1 = kirk.spheres[0]
    assert lambda_linear_combination([Laurent.const(1)], [a1]) == lambda_sphere(a1)
    p, q = kirk.spheres[0], kirk.spheres[4]
    got = lambda_linear_combination([t, 1 - t], [p, q])
    assert got == t * lambda_sphere(p) + (1 - t) * lambda_sphere(q)
    with pytest.raises(ValueError):
        lambda_linear_combination([t], [p, q])


def test_linear_combination_bilinear_and_phi_zero_on_kirk(kirk):
    rng = random.Random(11)

    def rand_poly():
        return Laurent({rng.randint(-4, 4): rng.randint(-3, 3) for _ in range(3)})

    spheres = list(kirk.spheres)
    for _ in range(200):
        f = [rand_poly() for _ in spheres]
        g = [rand_poly() for _ in spheres]
        lhs = lambda_linear_combination([a + b for a, b in zip(f, g)], spheres)
        assert lhs == lambda_linear_combination(f, spheres) + lambda_linear_combination(g, spheres)
        k = len(spheres) // 2
        split = lambda_linear_combination(f[:k], spheres[:k]) + lambda_linear_combination(f[k:], spheres[k:])
        assert split == lambda_linear_combination(f, spheres)
        lam = lambda_linear_combination(f, spheres)
        assert phi_laurent(lam) == C2Algebra()
        for j in range(-3, 4):
            assert phi(BiLaurent.from_laurent(lam, j)) == C2Algebra()


def test_sign_and_eps_validation():
    with pytest.raises(ValueError):
        pd([(1, 0)], eps=0)
    with pytest.raises(ValueError):
        pd([(3, 0)])
    with pytest.raises(ValueError):
        SphereClass.build("A", [], w2=2)
