"""Fixed-precision arithmetic in Z_p and its unramified degree-r extension Z_q.

Z_q is represented as Z[x] / (f(x), p^N) in the power basis of the same
defining polynomial as the paired F_q context, lifted verbatim; reduction
mod p therefore intertwines the two rings coefficient-wise.  Contexts are
immutable after construction; the Teichmuller memo is write-once per key.
"""

from __future__ import annotations

from .finitefield import FqContext, FqElement, is_prime


class PadicContext:
    """The ring Z/p^N standing in for Z_p at precision N."""

    def __init__(self, p: int, precision: int):
        if not is_prime(p) or p == 2:
            raise ValueError(f"p must be an odd prime, got {p}")
        if precision < 1:
            raise ValueError("precision must be >= 1")
        self.p = p
        self.precision = precision
        self.modulus = p**precision

    def element(self, value: int) -> "ZpElement":
        return ZpElement(self, value % self.modulus)

    def __repr__(self):
        return f"PadicContext(p={self.p}, N={self.precision})"


class ZpElement:
    """Residue in Z/p^N."""

    __slots__ = ("context", "residue")

    def __init__(self, context: PadicContext, residue: int):
        self.context = context
        self.residue = residue % context.modulus

    def is_unit(self) -> bool:
        return self.residue % self.context.p != 0

    def inverse(self) -> "ZpElement":
        if not self.is_unit():
            raise ZeroDivisionError("non-unit in Z_p (residue divisible by p)")
        return ZpElement(self.context, pow(self.residue, -1, self.context.modulus))

    def _coerce(self, other) -> int:
        if isinstance(other, ZpElement):
            if other.context is not self.context:
                raise ValueError("mixed Z_p contexts")
            return other.residue
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return ZpElement(self.context, self.residue + v)

    __radd__ = __add__

    def __neg__(self):
        return ZpElement(self.context, -self.residue)

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return ZpElement(self.context, self.residue - v)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return ZpElement(self.context, self.residue * v)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.residue == other % self.context.modulus
        return (
            isinstance(other, ZpElement)
            and self.context is other.context
            and self.residue == other.residue
        )

    def __hash__(self):
        return hash((self.context.p, self.context.precision, self.residue))

    def __int__(self):
        return self.residue

    def __repr__(self):
        return f"Zp({self.residue} mod {self.context.p}^{self.context.precision})"


class UnramifiedContext:
    """Z_q / p^N Z_q built on top of a matching F_q context."""

    def __init__(self, fq: FqContext, precision: int):
        self.fq = fq
        self.base = PadicContext(fq.p, precision)
        self.r = fq.r
        self.q = fq.q
        self.precision = precision
        self.modulus = self.base.modulus
        # defining polynomial lifted verbatim; x^r = -(c_0 + ... + c_{r-1} x^{r-1})
        self.poly = tuple(int(c) for c in fq.poly)
        self._neg_poly = tuple((-c) % self.modulus for c in self.poly)
        self.zero = ZqElement(self, (0,) * self.r)
        self.one = ZqElement(self, (1,) + (0,) * (self.r - 1))
        self._teich: dict[tuple[int, ...], ZqElement] = {}
        self._omega_pows: list[ZqElement] | None = None
        self._g_tables: dict = {}
        self._charsum_tables: dict = {}

    def element(self, coeffs) -> "ZqElement":
        coeffs = tuple(int(c) % self.modulus for c in coeffs)
        if len(coeffs) != self.r:
            raise ValueError(f"expected {self.r} coefficients")
        return ZqElement(self, coeffs)

    def scalar(self, value) -> "ZqElement":
        """Embed an integer or ZpElement as a constant vector."""
        if isinstance(value, ZpElement):
            if value.context.p != self.base.p or value.context.precision != self.precision:
                raise ValueError("Z_p scalar from a mismatched context")
            value = value.residue
        return ZqElement(self, (value % self.modulus,) + (0,) * (self.r - 1))

    def _mul(self, a: "ZqElement", b: "ZqElement") -> "ZqElement":
        m, r = self.modulus, self.r
        prod = [0] * (2 * r - 1)
        for i, ai in enumerate(a.coeffs):
            if ai:
                for j, bj in enumerate(b.coeffs):
                    prod[i + j] += ai * bj
        for d in range(2 * r - 2, r - 1, -1):
            c = prod[d] % m
            if c:
                for j, nc in enumerate(self._neg_poly):
                    prod[d - r + j] += c * nc
        return ZqElement(self, tuple(c % m for c in prod[:r]))

    def teichmuller(self, t: FqElement) -> "ZqElement":
        """The (q-1)-th root of unity congruent to t mod p.

        Computed by iterating x -> x^q from the verbatim lift of t until two
        successive iterates agree at full precision; each step gains r digits,
        so at most N iterations are needed (capped at N + 2).
        """
        if t.context is not self.fq:
            raise ValueError("element from a different field context")
        if t.is_zero():
            raise ValueError("Teichmuller lift of 0 is undefined; use char_value")
        cached = self._teich.get(t.coeffs)
        if cached is not None:
            return cached
        x = ZqElement(self, tuple(int(c) for c in t.coeffs))
        for _ in range(self.precision + 2):
            y = x**self.q
            if y == x:
                self._teich[t.coeffs] = x
                return x
            x = y
        raise ArithmeticError("Teichmuller iteration failed to stabilize")

    def char_value(self, j: int, t: FqElement) -> "ZqElement":
        """omega-bar^j(t) with the chi(0) = 0 convention (0 for t = 0, all j)."""
        if t.is_zero():
            return self.zero
        w = self.teichmuller(t)
        return w ** ((self.q - 1 - j) % (self.q - 1))

    def omega_generator_powers(self) -> list["ZqElement"]:
        """[omega(g)^m for m in 0..q-2]; omega(g^k) = omega(g)^k exactly."""
        if self._omega_pows is None:
            w = self.teichmuller(self.fq.generator)
            pows = [self.one]
            for _ in range(self.q - 2):
                pows.append(pows[-1] * w)
            self._omega_pows = pows
        return self._omega_pows

    def reduce_mod_p(self, x: "ZqElement") -> FqElement:
        return FqElement(self.fq, tuple(c % self.base.p for c in x.coeffs))

    def __repr__(self):
        return f"UnramifiedContext(p={self.base.p}, r={self.r}, N={self.precision})"


class ZqElement:
    """Residue in Z_q / p^N Z_q as a coefficient vector in the power basis."""

    __slots__ = ("context", "coeffs")

    def __init__(self, context: UnramifiedContext, coeffs: tuple[int, ...]):
        self.context = context
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_unit(self) -> bool:
        return not self.context.reduce_mod_p(self).is_zero()

    def _coerce(self, other):
        ctx = self.context
        if isinstance(other, ZqElement):
            if other.context is not ctx:
                raise ValueError("mixed Z_q contexts")
            return other
        if isinstance(other, (int, ZpElement)):
            return ctx.scalar(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        m = self.context.modulus
        return ZqElement(
            self.context, tuple((a + b) % m for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        m = self.context.modulus
        return ZqElement(self.context, tuple((-a) % m for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.context._mul(self, o)

    __rmul__ = __mul__

    def scale(self, n: int) -> "ZqElement":
        """Fast scalar multiple (used by the hot evaluation loops)."""
        m = self.context.modulus
        return ZqElement(self.context, tuple(a * n % m for a in self.coeffs))

    def __pow__(self, e: int) -> "ZqElement":
        if e < 0:
            return self.inverse() ** (-e)
        base = self
        out = self.context.one
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "ZqElement":
        """Unit inverse via Hensel lifting from the residue-field inverse."""
        ctx = self.context
        red = ctx.reduce_mod_p(self)
        if red.is_zero():
            raise ZeroDivisionError("non-unit in Z_q (reduction mod p is zero)")
        seed = red.inverse()
        y = ZqElement(ctx, tuple(int(c) for c in seed.coeffs))
        # y -> y(2 - xy) doubles the precision each round
        k = 1
        while k < ctx.precision:
            y = y * (ctx.scalar(2) - self * y)
            k *= 2
        if not (self * y == ctx.one):
            raise ArithmeticError("Hensel inversion failed")  # defensive
        return y

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, ZpElement)):
            other = self.context.scalar(other)
        return (
            isinstance(other, ZqElement)
            and self.context is other.context
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        ctx = self.context
        if ctx.r == 1:
            return f"Zq({self.coeffs[0]} mod {ctx.base.p}^{ctx.precision})"
        return f"Zq{self.coeffs} mod {ctx.base.p}^{ctx.precision}"


def balanced_lift(x) -> int:
    """Symmetric representative of a scalar residue in (-m/2, m/2].

    Accepts a ZpElement or a scalar ZqElement (all higher coefficients zero);
    a non-scalar argument is an integrity failure.
    """
    if isinstance(x, ZpElement):
        v, m = x.residue, x.context.modulus
    elif isinstance(x, ZqElement):
        if any(c != 0 for c in x.coeffs[1:]):
            raise ArithmeticError(f"value is not a Z_p scalar: {x!r}")
        v, m = x.coeffs[0], x.context.modulus
    else:
        raise TypeError("balanced_lift expects a ZpElement or ZqElement")
    return v - m if v > m // 2 else v


def recover_bounded_integer(x, bound: int) -> int:
    """Balanced lift certified by |value| <= bound, requiring modulus > 2*bound."""
    m = x.context.modulus
    if m <= 2 * bound:
        raise ValueError(f"modulus {m} too small to certify |v| <= {bound}")
    v = balanced_lift(x)
    if abs(v) > bound:
        raise ArithmeticError(f"lifted value {v} violates the stated bound {bound}")
    return v
