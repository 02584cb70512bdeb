"""F_{p^r} with a full discrete-log table, the quadratic character, and root counting.

Contexts are deterministic: the defining polynomial is the lexicographically
smallest monic irreducible of degree r over F_p (coefficients ordered
c_0, c_1, ..., c_{r-1}), and the generator is the smallest element in
coefficient-lexicographic order of multiplicative order q - 1.  Elements are
coefficient vectors in the power basis of that polynomial.

Fields are kept small on purpose (q <= 2^16): the dlog table makes every
character evaluation O(1) inside the O(q^2) verification loops.
"""

from __future__ import annotations

import itertools

MAX_Q = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num by monic den over F_p (den's leading coeff must be 1)."""
    num = [c % p for c in num]
    d = len(den) - 1
    while len(num) - 1 >= d:
        lead = num[-1]
        if lead:
            shift = len(num) - 1 - d
            for j, c in enumerate(den):
                num[shift + j] = (num[shift + j] - lead * c) % p
        num.pop()
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if all(c == 0 for c in _poly_mod(poly, divisor, p)):
                return False
    return True


def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Low-order coefficients (c_0 .. c_{r-1}) of the chosen monic polynomial."""
    for tail in itertools.product(range(p), repeat=r):
        low = list(tail)  # lex order on (c_0, ..., c_{r-1})
        if _is_irreducible(low + [1], p):
            return tuple(low)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FqElement:
    """Element of F_q as an immutable coefficient vector."""

    __slots__ = ("context", "coeffs")

    def __init__(self, context: "FqContext", coeffs: tuple[int, ...]):
        self.context = context
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FqElement)
            and self.context is other.context
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = self.context.coerce(other)
        p = self.context.p
        return FqElement(
            self.context,
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    __radd__ = __add__

    def __neg__(self):
        p = self.context.p
        return FqElement(self.context, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self.context.coerce(other))

    def __rsub__(self, other):
        return self.context.coerce(other) - self

    def __mul__(self, other):
        other = self.context.coerce(other)
        return self.context._mul(self, other)

    __rmul__ = __mul__

    def inverse(self) -> "FqElement":
        ctx = self.context
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in F_q")
        k = ctx.dlog[self.coeffs]
        return ctx.exp_table[(ctx.q - 1 - k) % (ctx.q - 1)]

    def __truediv__(self, other):
        return self * self.context.coerce(other).inverse()

    def __pow__(self, e: int) -> "FqElement":
        ctx = self.context
        if self.is_zero():
            if e < 0:
                raise ZeroDivisionError("negative power of zero in F_q")
            return ctx.one if e == 0 else ctx.zero
        k = ctx.dlog[self.coeffs]
        return ctx.exp_table[(k * e) % (ctx.q - 1)]

    def dlog(self) -> int:
        """Discrete log base the context generator; undefined at zero."""
        if self.is_zero():
            raise ZeroDivisionError("dlog of zero")
        return self.context.dlog[self.coeffs]

    def __repr__(self):
        if self.context.r == 1:
            return f"Fq({self.coeffs[0]} mod {self.context.p})"
        return f"Fq{self.coeffs} over F_{self.context.p}^{self.context.r}"


class FqContext:
    """The field F_q, q = p^r, with generator and complete dlog table."""

    def __init__(self, p: int, r: int):
        if not is_prime(p) or p == 2:
            raise ValueError(f"p must be an odd prime, got {p}")
        if r < 1:
            raise ValueError("r must be >= 1")
        q = p**r
        if q > MAX_Q:
            raise ValueError(f"q = {q} exceeds the supported bound {MAX_Q}")
        self.p = p
        self.r = r
        self.q = q
        self.poly = smallest_irreducible(p, r)
        # x^r = -(c_0 + c_1 x + ... + c_{r-1} x^{r-1})
        self._neg_poly = tuple((-c) % p for c in self.poly)
        self.zero = FqElement(self, (0,) * r)
        self.one = FqElement(self, (1,) + (0,) * (r - 1))
        self.generator = self._find_generator()
        self.exp_table: list[FqElement] = []
        self.dlog: dict[tuple[int, ...], int] = {}
        g = self.one
        for k in range(q - 1):
            self.exp_table.append(g)
            self.dlog[g.coeffs] = k
            g = self._mul(g, self.generator)
        self._elements = [
            FqElement(self, t) for t in itertools.product(range(p), repeat=r)
        ]
        self._jacobi_pairs: list[tuple[int, int]] | None = None

    def _mul(self, a: FqElement, b: FqElement) -> FqElement:
        p, r = self.p, self.r
        prod = [0] * (2 * r - 1)
        for i, ai in enumerate(a.coeffs):
            if ai:
                for j, bj in enumerate(b.coeffs):
                    prod[i + j] += ai * bj
        for d in range(2 * r - 2, r - 1, -1):
            c = prod[d] % p
            if c:
                for j, nc in enumerate(self._neg_poly):
                    prod[d - r + j] += c * nc
        return FqElement(self, tuple(c % p for c in prod[:r]))

    def _order(self, x: FqElement) -> bool:
        """True iff x has multiplicative order exactly q - 1."""
        n = self.q - 1
        if x.is_zero():
            return False
        for ell in _prime_factors(n):
            y = self.one
            e = n // ell
            base = x
            while e:  # square-and-multiply without the dlog table
                if e & 1:
                    y = self._mul(y, base)
                base = self._mul(base, base)
                e >>= 1
            if y == self.one:
                return False
        return True

    def _find_generator(self) -> FqElement:
        for t in itertools.product(range(self.p), repeat=self.r):
            cand = FqElement(self, t)
            if self._order(cand):
                return cand
        raise AssertionError("no generator found")  # unreachable

    def scalar(self, n: int) -> FqElement:
        """Embed the rational integer n into the prime subfield."""
        return FqElement(self, (n % self.p,) + (0,) * (self.r - 1))

    def coerce(self, value) -> FqElement:
        if isinstance(value, FqElement):
            if value.context is not self:
                raise ValueError("element from a different field context")
            return value
        if isinstance(value, int):
            return self.scalar(value)
        if isinstance(value, tuple):
            if len(value) != self.r:
                raise ValueError(f"expected {self.r} coefficients")
            return FqElement(self, tuple(c % self.p for c in value))
        raise TypeError(f"cannot coerce {type(value).__name__} into F_q")

    def elements(self) -> list[FqElement]:
        """All q elements in coefficient-lexicographic order."""
        return self._elements

    def nonzero_elements(self) -> list[FqElement]:
        return [x for x in self._elements if not x.is_zero()]

    def jacobi_dlog_pairs(self) -> list[tuple[int, int]]:
        """(dlog x, dlog(1-x)) for every x outside {0, 1}; cached."""
        if self._jacobi_pairs is None:
            pairs = []
            for x in self._elements:
                if x.is_zero() or x == self.one:
                    continue
                pairs.append((self.dlog[x.coeffs], self.dlog[(self.one - x).coeffs]))
            self._jacobi_pairs = pairs
        return self._jacobi_pairs

    def __repr__(self):
        return f"FqContext(p={self.p}, r={self.r})"


def make_fq(p: int, r: int) -> FqContext:
    """Deterministic F_{p^r} context (see module docstring for the choices)."""
    return FqContext(p, r)


def quadratic_char(x: FqElement) -> int:
    """phi(x): 0 at zero, +1 on even dlog, -1 on odd dlog."""
    if x.is_zero():
        return 0
    return 1 if x.context.dlog[x.coeffs] % 2 == 0 else -1


def delta(j: int) -> int:
    """1 on the trivial character index, 0 otherwise (0 <= j <= q-2)."""
    return 1 if j == 0 else 0


def count_roots(coeffs) -> int:
    """Distinct roots in F_q of sum coeffs[i] * y^i; degree <= 3 by brute force.

    The degree cap is a documented bound of this scanner, not intrinsic to
    the definition.  The zero polynomial is rejected.
    """
    coeffs = list(coeffs)
    if not coeffs or all(c.is_zero() for c in coeffs):
        raise ValueError("zero polynomial has no well-defined root count")
    ctx = coeffs[0].context
    deg = max(i for i, c in enumerate(coeffs) if not c.is_zero())
    if deg > 3:
        raise ValueError(f"degree {deg} exceeds the supported bound 3")
    count = 0
    for y in ctx.elements():
        acc = ctx.zero
        for c in reversed(coeffs):
            acc = acc * y + c
        if acc.is_zero():
            count += 1
    return count


def discriminant_sign_check(x: FqElement) -> int:
    """phi(3x(1-x)), the quadratic class of the relevant cubic discriminant."""
    ctx = x.context
    return quadratic_char(ctx.scalar(3) * x * (ctx.one - x))
