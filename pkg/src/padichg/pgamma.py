"""Morita's p-adic gamma function on Z_p ∩ Q at fixed precision.

For a positive integer n, Gamma_p(n) = (-1)^n * prod_{0<j<n, p∤j} j, with
Gamma_p(0) = 1, extended to Z_p by continuity.  Two exact facts drive the
implementation:

* the product of the units in any block [k*p^N, (k+1)*p^N) is ≡ -1 mod p^N
  (generalized Wilson theorem, odd p), and the parity bookkeeping cancels,
  so Gamma_p(n) mod p^N depends only on n mod p^N;
* a rational x with denominator coprime to p has a canonical residue
  mod p^{N+guard}, and folding that residue mod p^N is therefore exact.

Values are produced from checkpointed prefix products: one O(p^N) pass per
cache, O(block) work per fresh argument, memoized thereafter.  The memo is
write-once per key and safe for concurrent readers.
"""

from __future__ import annotations

from fractions import Fraction

from .padic import PadicContext, ZpElement

_BLOCK = 128

_caches: dict[tuple[int, int, int], "GammaCache"] = {}


class GammaCache:
    """Gamma_p evaluator bound to one PadicContext."""

    def __init__(self, context: PadicContext, guard: int = 1):
        if guard < 1:
            raise ValueError("guard must be >= 1")
        self.context = context
        self.guard = guard
        self.p = context.p
        self.modulus = context.modulus
        self._prefix: list[int] | None = None
        self._memo: dict[int, int] = {}

    def _checkpoints(self) -> list[int]:
        if self._prefix is None:
            p, m = self.p, self.modulus
            prefix = [1]
            acc = 1
            for j in range(1, m):
                if j % p:
                    acc = acc * j % m
                if j % _BLOCK == _BLOCK - 1:
                    prefix.append(acc)
            self._prefix = prefix
        return self._prefix

    def _nat_mod(self, n: int) -> int:
        """Gamma_p(n) mod p^N via the period fold t = n mod p^N.

        The fold also yields the t = 0 convention value 1 and Gamma_p(1) = -1
        with no special-casing: the block scan below is empty for t <= 1.
        """
        t = n % self.modulus
        v = self._memo.get(t)
        if v is None:
            prefix = self._checkpoints()
            k = t // _BLOCK
            acc = prefix[k]
            for j in range(k * _BLOCK, t):
                if j % self.p:
                    acc = acc * j % self.modulus
            v = -acc % self.modulus if t % 2 else acc
            self._memo[t] = v
        return v

    def gamma_nat(self, n: int) -> ZpElement:
        """Gamma_p at a non-negative integer, by the defining product."""
        if n < 0:
            raise ValueError("gamma_nat requires n >= 0")
        return ZpElement(self.context, self._nat_mod(n))

    def gamma(self, x) -> ZpElement:
        """Gamma_p at a rational p-adic integer (denominator coprime to p)."""
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ValueError(f"argument {x} is not a p-adic integer for p={self.p}")
        big = self.p ** (self.context.precision + self.guard)
        rep = x.numerator * pow(x.denominator, -1, big) % big
        return ZpElement(self.context, self._nat_mod(rep))


def gamma_cache(context: PadicContext, guard: int = 1) -> GammaCache:
    """Shared per-(p, N, guard) cache; evaluations are pure, so sharing is safe."""
    key = (context.p, context.precision, guard)
    cache = _caches.get(key)
    if cache is None:
        cache = GammaCache(context, guard)
        _caches[key] = cache
    return cache


def gamma_p_nat(n: int, context: PadicContext) -> ZpElement:
    return gamma_cache(context).gamma_nat(n)


def gamma_p(x, context: PadicContext) -> ZpElement:
    return gamma_cache(context).gamma(x)
