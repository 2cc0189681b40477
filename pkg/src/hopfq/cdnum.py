"""Cayley-Dickson number tower: reals, complex, quaternions, octonions, sedenions.

Level L holds elements with 2**L real coefficients over the basis units
i_0 = 1, i_1, ..., i_(2**L - 1).  The doubling convention is fixed once and
used everywhere: writing an element as an ordered pair (a, b) of elements one
level down,

    (a, b) * (c, d) = (a*c - conj(d)*b,  d*a + b*conj(c))

With this rule basis products satisfy i_a * i_b = +-i_(a XOR b), and the signs
follow from the recursion itself (i_1*i_2 = +i_3, i_1*i_4 = +i_5,
i_1*i_6 = -i_7, ...).  The full sign table is exported in CSV form for
auditing, see ``basis_product_table`` and ``data/basis_products_level4.csv``.
"""

import functools

import numpy as np

MAX_LEVEL = 4

LEVEL_NAMES = {0: "real", 1: "complex", 2: "quaternion", 3: "octonion", 4: "sedenion"}

ZERO_TOL = 1e-12


class SingularElementError(ArithmeticError):
    """Raised when inverting an element of zero norm."""


class CDElement:
    """An element of the level-``level`` Cayley-Dickson algebra.

    Coefficients are a read-only float64 array of length 2**level, coefficient
    k multiplying the basis unit i_k.
    """

    __slots__ = ("level", "coeffs")

    def __init__(self, level, coeffs):
        if not 0 <= level <= MAX_LEVEL:
            raise ValueError(f"level must be in 0..{MAX_LEVEL}, got {level}")
        arr = np.asarray(coeffs, dtype=np.float64).copy()
        if arr.shape != (1 << level,):
            raise ValueError(
                f"level {level} needs {1 << level} coefficients, got shape {arr.shape}"
            )
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("CDElement is immutable")

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c != 0.0:
                unit = "" if k == 0 else f"*i{k}"
                terms.append(f"{c:g}{unit}")
        body = " + ".join(terms) if terms else "0"
        return f"CDElement({LEVEL_NAMES[self.level]}: {body})"

    def __add__(self, other):
        _check_levels(self, other)
        return CDElement(self.level, self.coeffs + other.coeffs)

    def __sub__(self, other):
        _check_levels(self, other)
        return CDElement(self.level, self.coeffs - other.coeffs)

    def __neg__(self):
        return CDElement(self.level, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return CDElement(self.level, self.coeffs * float(other))
        return cd_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return CDElement(self.level, self.coeffs * float(other))
        return NotImplemented

    def is_zero(self, tol=ZERO_TOL):
        return bool(np.max(np.abs(self.coeffs)) < tol)


def zero(level):
    return CDElement(level, np.zeros(1 << level))


def one(level):
    return basis(level, 0)


def basis(level, k):
    """The basis unit i_k at the given level."""
    if not 0 <= k < (1 << level):
        raise ValueError(f"basis index {k} out of range for level {level}")
    c = np.zeros(1 << level)
    c[k] = 1.0
    return CDElement(level, c)


def from_complex_pairs(level, values):
    """Build an element whose coefficient pairs (2k, 2k+1) are complex values.

    ``values`` holds 2**(level-1) complex numbers; value k lands in
    coefficients (2k, 2k+1) = (real, imaginary).  This is the pair-of-pairs
    layout the doubling construction induces, so e.g. level 2 with values
    (c0, c1) is the quaternion c0 + c1*i_2.
    """
    v = np.asarray(values, dtype=np.complex128)
    if v.shape != (1 << (level - 1),):
        raise ValueError(f"level {level} needs {1 << (level - 1)} complex values")
    return CDElement(level, np.column_stack([v.real, v.imag]).ravel())


def complex_pairs(x):
    """Inverse of from_complex_pairs: coefficients as 2**(level-1) complex values."""
    return x.coeffs[0::2] + 1j * x.coeffs[1::2]


def _check_levels(x, y):
    if x.level != y.level:
        raise ValueError(f"level mismatch: {x.level} vs {y.level}")


def _conj_coeffs(c):
    out = -c
    out[0] = c[0]
    return out


def _mul_recursive(a, b):
    # The doubling rule verbatim; authoritative definition of the product.
    n = a.shape[0]
    if n == 1:
        return a * b
    h = n // 2
    a1, a2 = a[:h], a[h:]
    b1, b2 = b[:h], b[h:]
    lo = _mul_recursive(a1, b1) - _mul_recursive(_conj_coeffs(b2), a2)
    hi = _mul_recursive(b2, a1) + _mul_recursive(a2, _conj_coeffs(b1))
    return np.concatenate([lo, hi])


@functools.lru_cache(maxsize=None)
def _structure_tensor(level):
    # T[k, a, b] = sign of i_a * i_b if a XOR b == k else 0, derived by
    # multiplying basis units with the recursive rule.
    m = 1 << level
    t = np.zeros((m, m, m))
    eye = np.eye(m)
    for a in range(m):
        for b in range(m):
            prod = _mul_recursive(eye[a], eye[b])
            k = a ^ b
            t[k, a, b] = prod[k]
    return t


def cd_mul(x, y):
    """Product of two same-level elements under the fixed doubling convention."""
    _check_levels(x, y)
    if x.level == 0:
        return CDElement(0, x.coeffs * y.coeffs)
    out = np.einsum("kab,a,b->k", _structure_tensor(x.level), x.coeffs, y.coeffs)
    return CDElement(x.level, out)


def cd_conj(x):
    """Conjugate: negate every coefficient except the real one."""
    return CDElement(x.level, _conj_coeffs(x.coeffs))


def cd_norm_sq(x):
    """Squared Euclidean norm, sum of squared coefficients."""
    return float(np.dot(x.coeffs, x.coeffs))


def cd_inverse(x):
    """Multiplicative inverse conj(x)/||x||^2; raises on zero norm.

    At level 4 an inverse always exists for nonzero x even though zero
    divisors do: x * cd_inverse(x) = 1 while x * y = 0 for some other y.
    """
    nsq = cd_norm_sq(x)
    if nsq < ZERO_TOL**2:
        raise SingularElementError("cannot invert an element of zero norm")
    return CDElement(x.level, _conj_coeffs(x.coeffs) / nsq)


def basis_product_table(level):
    """All basis products as rows (a, b, sign, index) with i_a*i_b = sign*i_index."""
    m = 1 << level
    t = _structure_tensor(level) if level > 0 else None
    rows = []
    for a in range(m):
        for b in range(m):
            k = a ^ b
            sign = 1 if level == 0 else int(t[k, a, b])
            rows.append((a, b, sign, k))
    return rows


@functools.lru_cache(maxsize=None)
def find_basis_zero_divisors(level):
    """Exhaustive search for (i_a + s1*i_b)(i_c + s2*i_d) = 0 with a<b, c<d.

    Returns a tuple of ((a, s1, b), (c, s2, d)) entries whose product has norm
    below 1e-12.  Empty for every level up to 3 (division algebras); level 4
    is the first with zero divisors.
    """
    m = 1 << level
    two_term = [
        ((a, s, b), basis(level, a) + float(s) * basis(level, b))
        for a in range(m)
        for b in range(a + 1, m)
        for s in (1, -1)
    ]
    found = []
    for key_x, x in two_term:
        for key_y, y in two_term:
            if cd_mul(x, y).is_zero():
                found.append((key_x, key_y))
    return tuple(found)
