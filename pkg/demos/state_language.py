"""Tour the bra-ket expression language: parsing, formatting, error reports.

States move in and out of the toolkit as plain text like
"0.5|00> - i/sqrt(2)|11>".  The reader accepts scalar arithmetic (fractions,
square roots, parentheses, the imaginary unit), both ASCII and unicode ket
brackets, and reports malformed input with line/column positions instead of
crashing.  The writer is its inverse: at full precision the round trip is
bit-exact.
"""

import numpy as np

from hopfq import ParseError, format_state, parse_state, random_state

print("=" * 72)
print("One state, many spellings")
print("=" * 72)

spellings = [
    "1/sqrt(2)|00> + 1/sqrt(2)|11>",
    "sqrt(2)/2 * (|00> + |11>)",
    "0.7071067811865476|00> + 0.7071067811865476|11>",
    "√(1/2)|00⟩ + √(1/2)|11⟩",
]
for text in spellings:
    s = parse_state(text)
    print(f"  {text!r:<58} -> {format_state(s, digits=3)}")

print()
print("=" * 72)
print("Scalar arithmetic, signs, and the imaginary unit")
print("=" * 72)

cases = [
    "(1+2i)/3|0> + 2/3|1>",
    "1/sqrt(2) * (-|01> + |10>)",
    "3e-1|1> + sqrt(1 - 9e-2)|0>",
    "1/(2*sqrt(2)) * (|000> + |011> + |101> + |110>) + 1/sqrt(2)|111>",
]
for text in cases:
    s = parse_state(text)
    print(f"  {text}")
    print(f"    -> {format_state(s, digits=4)}")

print()
print("=" * 72)
print("Malformed input never crashes: positioned error messages")
print("=" * 72)

bad = [
    "0.5|00> +",
    "|0> + |001>",
    "1/0|1>",
    "0.5|00> 0.5|11>",
    "|2>",
    "sqrt(2|0>",
]
for text in bad:
    try:
        parse_state(text)
        print(f"  {text!r:<22} -> (accepted)")
    except ParseError as exc:
        print(f"  {text!r:<22} -> {exc}")

print()
print("=" * 72)
print("The writer inverts the reader")
print("=" * 72)

worst = 0.0
for k in range(50):
    s = random_state(4, seed=7070, index=k)
    t = parse_state(format_state(s))
    worst = max(worst, float(np.max(np.abs(s.amps - t.amps))))
print(f"  50 random 4-qubit states, parse(format(state)) at default digits:")
print(f"  max amplitude deviation = {worst:.1e}  (bit-exact)")

s = random_state(2, seed=7071, index=0)
print()
print("  trimmed precision stays readable:")
for digits in (3, 6, 12):
    print(f"    digits={digits:<2} {format_state(s, digits=digits)}")
