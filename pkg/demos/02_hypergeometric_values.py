"""Evaluating the p-adic hypergeometric function and certifying its values.

The value 2G2[1/3,2/3; 0,1/2 | 1/x] + 1 counts the roots of the cubic
27 y^2 (1 - y) = 4x, an integer anyone can verify by scanning F_q.  This
script evaluates the function at every x in F_5 and F_13 and checks the
count, then shows the zero classification through phi(3x(1-x)).
"""

from fractions import Fraction as F

from padichg import (
    GParams,
    balanced_lift,
    contexts,
    count_roots,
    discriminant_sign_check,
    evaluate_g,
)

PARAMS = ((F(1, 3), F(2, 3)), (F(0), F(1, 2)))

for p in (5, 13):
    fq, zq = contexts(p, 1, 4)
    print(f"--- F_{p} ---")
    print(f"{'x':>3} {'G(1/x)':>7} {'roots':>6} {'phi(3x(1-x))':>13}")
    for x in fq.nonzero_elements():
        value = balanced_lift(evaluate_g(GParams(*PARAMS, x.inverse(), zq)).value)
        cubic = [fq.scalar(-4) * x, fq.zero, fq.scalar(27), fq.scalar(-27)]
        roots = count_roots(cubic)
        assert value + 1 == roots
        sign = discriminant_sign_check(x)
        marker = "  <- zero" if value == 0 else ""
        print(f"{x.coeffs[0]:>3} {value:>7} {roots:>6} {sign:>13}{marker}")
    print()

print("G + 1 = root count held at every x; zeros occur exactly where")
print("phi(3x(1-x)) = -1, i.e. where the cubic has a single root.")
