import random
from fractions import Fraction as F

import pytest

from padichg.padic import PadicContext
from padichg.pgamma import GammaCache, gamma_cache, gamma_p, gamma_p_nat


def brute_gamma_nat(n, p, modulus):
    """Independent oracle: the defining product, no folding, no checkpoints."""
    acc = 1
    for j in range(1, n):
        if j % p:
            acc = acc * j % modulus
    return -acc % modulus if n % 2 else acc % modulus


@pytest.mark.parametrize("p,n", [(5, 3), (5, 4), (7, 3), (3, 5)])
def test_gamma_nat_matches_brute_force(p, n):
    ctx = PadicContext(p, n)
    cache = GammaCache(ctx)
    for k in range(0, 300):
        assert cache.gamma_nat(k).residue == brute_gamma_nat(k, p, p**n), k


def test_gamma_nat_examples():
    ctx = PadicContext(5, 3)
    cache = GammaCache(ctx)
    assert cache.gamma_nat(0).residue == 1
    assert cache.gamma_nat(1) == -1
    assert cache.gamma_nat(3) == -2  # (-1)^3 * (1*2)
    with pytest.raises(ValueError):
        cache.gamma_nat(-1)


def test_gamma_rational_frozen_values():
    # representative of 1/4 mod 5^5 is 2344; defining-product oracle gives 21
    cache4 = GammaCache(PadicContext(5, 4))
    assert cache4.gamma(F(1, 4)).residue == 21
    assert brute_gamma_nat(2344, 5, 5**5) % 5**4 == 21
    cache3 = GammaCache(PadicContext(5, 3))
    g = cache3.gamma(F(1, 2))
    assert g.residue == 68
    assert g * g == -1  # forced by the half-shift product identity
    assert cache3.gamma(F(0)).residue == 1


def test_gamma_rejects_non_padic_argument():
    cache = GammaCache(PadicContext(5, 3))
    with pytest.raises(ValueError):
        cache.gamma(F(1, 5))
    with pytest.raises(ValueError):
        cache.gamma(F(3, 10))
    with pytest.raises(ValueError):
        GammaCache(PadicContext(5, 3), guard=0)


def test_period_fold_is_exact():
    # Gamma_p(n) mod p^N depends only on n mod p^N; cross-check via brute force
    p, n = 7, 3
    ctx = PadicContext(p, n)
    cache = GammaCache(ctx)
    m = p**n
    for t in (0, 1, 2, 50, 341):
        base = brute_gamma_nat(t, p, m)
        for k in (1, 2, 5):
            assert brute_gamma_nat(t + k * m, p, m) == base
            assert cache.gamma_nat(t + k * m).residue == base


def test_functional_equation_random_rationals():
    # Gamma(x+1)/Gamma(x) = -x when x is a unit, -1 when x = 0 mod p
    rng = random.Random(99)
    for p, n in ((5, 4), (7, 3)):
        ctx = PadicContext(p, n)
        cache = GammaCache(ctx)
        m = p**n
        for _ in range(60):
            den = rng.choice([1, 2, 3, 4, 6, 11])
            if den % p == 0:
                continue
            x = F(rng.randint(0, 40), den)
            ratio = cache.gamma(x + 1).residue * pow(cache.gamma(x).residue, -1, m) % m
            residue = x.numerator * pow(x.denominator, -1, m) % m
            if residue % p:
                assert ratio == -residue % m
            else:
                assert ratio == m - 1


def test_guard_doubling_self_test():
    for p, n in ((5, 4), (3, 5)):
        ctx = PadicContext(p, n)
        lo = GammaCache(ctx, guard=1)
        hi = GammaCache(ctx, guard=3)
        for x in (F(1, 2), F(1, 3), F(5, 6), F(3, 4), F(7, 12)):
            if x.denominator % p:
                assert lo.gamma(x) == hi.gamma(x)


def test_precision_truncation_agrees():
    for p in (5, 7):
        lo = GammaCache(PadicContext(p, 3))
        hi = GammaCache(PadicContext(p, 5))
        cut = p**3
        for x in (F(1, 2), F(1, 4), F(2, 3), F(11, 12)):
            if x.denominator % p:
                assert hi.gamma(x).residue % cut == lo.gamma(x).residue


def test_module_level_helpers_share_cache():
    ctx = PadicContext(5, 3)
    assert gamma_p_nat(10, ctx) == gamma_cache(ctx).gamma_nat(10)
    assert gamma_p(F(1, 2), ctx).residue == 68
    assert gamma_cache(ctx) is gamma_cache(ctx)
