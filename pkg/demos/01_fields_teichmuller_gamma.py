"""Tour of the base rings: F_q, Z_q at fixed precision, and Gamma_p.

Builds the deterministic field F_25 and its unramified companion ring,
lifts elements through the Teichmuller character, and evaluates Morita's
p-adic gamma function at a few rational arguments.
"""

from fractions import Fraction as F

from padichg import contexts, gamma_cache, quadratic_char

fq, zq = contexts(p=5, r=2, precision=4)

print(f"F_25 defined by x^2 + {fq.poly[1]}x + {fq.poly[0]} over F_5")
print(f"generator g = {fq.generator}, so dlog(g^k) = k for all k")
print()

# The Teichmuller character: the unique (q-1)-th root of unity over each t.
g = fq.generator
w = zq.teichmuller(g)
print(f"omega(g) = {w}")
print(f"  check: omega(g)^(q-1) = {w ** (fq.q - 1)} (must be 1)")
print(f"  check: reduction mod p = {zq.reduce_mod_p(w)} (must equal g)")
print()

# omega is multiplicative, so characters are realized as its powers.
s, t = fq.scalar(2), fq.scalar(3)
print(f"omega(2)*omega(3) = {zq.teichmuller(s) * zq.teichmuller(t)}")
print(f"omega(6)          = {zq.teichmuller(s * t)}")
print()

# Gamma_p at rational arguments in Z_p; Gamma_5(1/2)^2 = -1 always.
cache = gamma_cache(zq.base)
half = cache.gamma(F(1, 2))
print(f"Gamma_5(1/2) mod 5^4 = {half.residue}, squared = {(half * half).residue}")
print(f"  (-1 mod 5^4 = {zq.modulus - 1})")
for x in (F(1, 4), F(1, 3), F(5, 6)):
    print(f"Gamma_5({x}) mod 5^4 = {cache.gamma(x).residue}")
print()

# The quadratic character phi reads off dlog parity.
f5, _ = contexts(p=5, r=1, precision=4)
print("squares in F_5:", [v for v in range(1, 5) if quadratic_char(f5.scalar(v)) == 1])
print("phi(3) over F_25 =", quadratic_char(fq.scalar(3)), "(every F_5 scalar is a square in F_25)")
