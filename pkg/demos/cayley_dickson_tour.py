"""Tour of the Cayley-Dickson ladder: real -> complex -> quaternion ->
octonion -> sedenion, showing which algebraic law breaks at each doubling
and ending with the sedenion zero divisors that block a fourth fibration.

Run:  python3 demos/cayley_dickson_tour.py
"""

import numpy as np

from hopfq import (
    CDElement,
    basis,
    basis_product_table,
    cd_conj,
    cd_inverse,
    cd_mul,
    cd_norm_sq,
    find_basis_zero_divisors,
    one,
)
from hopfq.cdnum import LEVEL_NAMES

rng = np.random.default_rng(7)


def rand(level):
    x = CDElement(level, rng.standard_normal(1 << level))
    return (1.0 / np.sqrt(cd_norm_sq(x))) * x


def banner(text):
    print()
    print(text)
    print("-" * len(text))


banner("Multiplication convention (quaternion slice of the shipped table)")
table = {(a, b): (s, k) for a, b, s, k in basis_product_table(2)}
for a, b in ((1, 2), (2, 1), (2, 3), (1, 3)):
    s, k = table[(a, b)]
    print(f"  i{a} * i{b} = {'+' if s > 0 else '-'}i{k}")
print("  (the full level-4 table ships as hopfq/data/basis_products_level4.csv)")

banner("Which law survives at each level?")
print(f"  {'level':>5}  {'algebra':<10} {'assoc':>6} {'altern':>7} {'|xy|=|x||y|':>12}")
for level in range(5):
    x, y, z = rand(level), rand(level), rand(level)
    assoc = np.max(np.abs(
        cd_mul(cd_mul(x, y), z).coeffs - cd_mul(x, cd_mul(y, z)).coeffs
    ))
    altern = np.max(np.abs(
        cd_mul(x, cd_mul(x, y)).coeffs - cd_mul(cd_mul(x, x), y).coeffs
    ))
    mult = abs(cd_norm_sq(cd_mul(x, y)) - cd_norm_sq(x) * cd_norm_sq(y))
    mark = lambda v: "yes" if v < 1e-12 else "NO"
    print(
        f"  {level:>5}  {LEVEL_NAMES[level]:<10} {mark(assoc):>6}"
        f" {mark(altern):>7} {mark(mult):>12}"
    )

banner("The octonion associativity witness")
i1, i2, i4 = basis(3, 1), basis(3, 2), basis(3, 4)
lhs = cd_mul(cd_mul(i1, i2), i4)
rhs = cd_mul(i1, cd_mul(i2, i4))
print(f"  (i1*i2)*i4 = {lhs}")
print(f"  i1*(i2*i4) = {rhs}")

banner("Sedenion zero divisors")
pairs = find_basis_zero_divisors(4)
print(f"  levels 1-3: {sum(len(find_basis_zero_divisors(k)) for k in (1, 2, 3))} pairs")
print(f"  level 4:    {len(pairs)} two-term basis pairs, for example:")
for (a, s1, b), (c, s2, d) in pairs[:4]:
    print(
        f"    (i{a} {'+' if s1 > 0 else '-'} i{b})"
        f" * (i{c} {'+' if s2 > 0 else '-'} i{d}) = 0"
    )

banner("A zero divisor still has a formal inverse")
x = basis(4, 3) + basis(4, 10)
y = basis(4, 6) - basis(4, 15)
inv = cd_inverse(x)
print(f"  x = i3 + i10,  x * conj(x)/|x|^2 = one:"
      f" {np.max(np.abs(cd_mul(x, inv).coeffs - one(4).coeffs)):.2e} error")
print(f"  yet x * (i6 - i15) has norm {np.sqrt(cd_norm_sq(cd_mul(x, y))):.2e}"
      " -> left multiplication is not injective")

banner("Norm amplification (the flip side of cancellation)")
y2 = basis(4, 6) + basis(4, 15)
ratio = cd_norm_sq(cd_mul(x, y2)) / (cd_norm_sq(x) * cd_norm_sq(y2))
print(f"  |x*y'|^2 / (|x|^2 |y'|^2) = {ratio:.12f} for the sign-flipped partner")
print("  (division algebras pin this ratio to exactly 1)")
