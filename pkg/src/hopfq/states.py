"""Pure n-qubit states (n = 1..4) and their Cayley-Dickson pair encodings.

Qubit 0 is the most significant bit: the amplitude of |b0 b1 ... b(n-1)> sits
at index b0*2**(n-1) + ... + b(n-1).  A state maps to a pair (u1, u2) of
level-n elements; u1 collects the amplitudes with qubit 0 in |0>, u2 those
with qubit 0 in |1>.  Amplitude k occupies complex slot (k mod 2**(n-1)) of
its half, conjugated in the even-parity slots described at _HALF_CONJ below
so that the base-map coordinates reproduce the closed-form entanglement
results for every qubit count.
"""

import json

import numpy as np

from .cdnum import CDElement, cd_conj, from_complex_pairs, complex_pairs

MAX_QUBITS = 4

NORM_TOL_STRICT = 1e-9
NORM_TOL_INPUT = 1e-6


class StateError(ValueError):
    """Base class for state validation failures."""


class ShapeError(StateError):
    """Amplitude vector has the wrong length or qubit count is unsupported."""


class DegenerateStateError(StateError):
    """Amplitude vector is (numerically) the zero vector."""


class NormalizationError(StateError):
    """State is not normalized and no rescale was requested."""


class QubitState:
    """Validated pure state: qubit count n and 2**n complex amplitudes."""

    __slots__ = ("n", "amps")

    def __init__(self, n, amps, _norm_tol=NORM_TOL_INPUT):
        if not 1 <= n <= MAX_QUBITS:
            raise ShapeError(f"qubit count must be 1..{MAX_QUBITS}, got {n}")
        arr = np.asarray(amps, dtype=np.complex128).copy()
        if arr.shape != (1 << n,):
            raise ShapeError(f"{n} qubits need {1 << n} amplitudes, got shape {arr.shape}")
        if not np.all(np.isfinite(arr.view(np.float64))):
            raise StateError("amplitudes must be finite")
        if _norm_tol is not None:
            total = float(np.sum(np.abs(arr) ** 2))
            if abs(total - 1.0) >= _norm_tol:
                raise NormalizationError(
                    f"squared norm is {total!r}, not 1; pass normalize=True to rescale"
                )
        arr.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "amps", arr)

    def __setattr__(self, name, value):
        raise AttributeError("QubitState is immutable")

    def __repr__(self):
        return f"QubitState(n={self.n})"


def make_state(n, amps, normalize=False):
    """Validate (and optionally rescale) an amplitude vector into a QubitState.

    Without ``normalize`` the squared norm must sit within 1e-6 of 1 and the
    amplitudes are stored verbatim, so round-trips through the text formats
    stay bit-exact.  With ``normalize`` any nonzero vector is rescaled to unit
    norm; a zero vector is rejected either way.
    """
    arr = np.asarray(amps, dtype=np.complex128)
    if arr.ndim != 1:
        raise ShapeError(f"amplitudes must be a flat vector, got shape {arr.shape}")
    norm = float(np.linalg.norm(arr))
    if norm < 1e-12:
        raise DegenerateStateError("amplitude vector is numerically zero")
    if normalize:
        return QubitState(n, arr / norm, _norm_tol=None)
    return QubitState(n, arr)


class PairEncoding:
    """The two level-n elements (u1, u2) a state encodes to."""

    __slots__ = ("n", "u1", "u2")

    def __init__(self, n, u1, u2):
        self.n = n
        self.u1 = u1
        self.u2 = u2


# Complex slot j of a half stores the amplitude conjugated exactly when j has
# an even, nonzero number of set bits (slot 3 at n = 3; slots 3, 5, 6 at
# n = 4).  This parity pattern is forced by requiring the scalar complex slot
# of u2 * conj(u1) to accumulate sum_k a[2nd half][k] * conj(a[1st half][k])
# uniformly across slots, which makes the base-map invariant equal
# 4*det(rho) of the leading qubit and sends every one-vs-rest product state
# to the boundary sphere (both facts are locked in by the test suite).
_HALF_CONJ = {
    n: tuple(bin(j).count("1") % 2 == 0 and j > 0 for j in range(1 << (n - 1)))
    for n in range(1, MAX_QUBITS + 1)
}


def encode_pair(state):
    """Encode a state into its (u1, u2) Cayley-Dickson pair."""
    n = state.n
    half = 1 << (n - 1)
    conj_slots = _HALF_CONJ[n]
    out = []
    for lo in (0, half):
        vals = np.array(state.amps[lo:lo + half], dtype=np.complex128)
        for j in range(half):
            if conj_slots[j]:
                vals[j] = vals[j].conjugate()
        out.append(from_complex_pairs(n, vals))
    return PairEncoding(n, out[0], out[1])


def decode_pair(enc):
    """Invert encode_pair back to the amplitude vector (exact, slot-wise)."""
    n = enc.n
    half = 1 << (n - 1)
    conj_slots = _HALF_CONJ[n]
    amps = np.empty(1 << n, dtype=np.complex128)
    for lo, u in ((0, enc.u1), (half, enc.u2)):
        vals = complex_pairs(u)
        for j in range(half):
            amps[lo + j] = vals[j].conjugate() if conj_slots[j] else vals[j]
    return QubitState(n, amps, _norm_tol=None)


def permute_qubits(state, perm):
    """Reindex amplitudes so original qubit perm[j] occupies position j."""
    n = state.n
    if sorted(perm) != list(range(n)):
        raise ValueError(f"perm must be a permutation of 0..{n - 1}, got {perm}")
    t = state.amps.reshape((2,) * n)
    out = np.transpose(t, axes=perm).reshape(-1)
    return QubitState(n, out, _norm_tol=None)


def bring_to_front(state, qubit):
    """Permutation helper: move one qubit into role 0, others keep their order."""
    perm = [qubit] + [q for q in range(state.n) if q != qubit]
    return permute_qubits(state, perm)


def random_state(n, seed, index=0):
    """Haar-random pure state: i.i.d. standard complex Gaussians, normalized.

    The generator is counter-based and keyed by (seed, index), so drawing
    sample ``index`` never depends on how many other samples were drawn.
    """
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=(int(index),))
    rng = np.random.Generator(np.random.Philox(ss))
    z = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    return QubitState(n, z / np.linalg.norm(z), _norm_tol=None)


def basis_state(n, bits):
    """Computational basis state |bits>."""
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[int(bits, 2)] = 1.0
    return QubitState(n, amps, _norm_tol=None)


def bell_state():
    return make_state(2, np.array([1, 0, 0, 1]) / np.sqrt(2), normalize=False)


def ghz_state(n):
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = amps[-1] = 1 / np.sqrt(2)
    return QubitState(n, amps, _norm_tol=None)


def w_state(n):
    """Single-excitation symmetric state (|10..0> + |01..0> + ... )/sqrt(n)."""
    amps = np.zeros(1 << n, dtype=np.complex128)
    for q in range(n):
        amps[1 << q] = 1 / np.sqrt(n)
    return QubitState(n, amps, _norm_tol=None)


def product_state(factors):
    """Tensor product of per-qubit amplitude pairs, most significant first."""
    amps = np.array([1.0 + 0j])
    for f in factors:
        amps = np.kron(amps, np.asarray(f, dtype=np.complex128))
    return make_state(len(factors), amps, normalize=True)


def state_to_json(state):
    """Serialize to the interchange format: {"n": ..., "amplitudes": [[re, im], ...]}.

    Floats are written with repr precision (up to 17 significant digits), so
    loading the text reproduces the amplitudes bit for bit.
    """
    pairs = [[float(a.real), float(a.imag)] for a in state.amps]
    return json.dumps({"n": state.n, "amplitudes": pairs})


def state_from_json(text, normalize=False):
    """Parse the interchange format; validates shape and normalization."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateError(f"invalid state file: {exc}") from None
    if not isinstance(obj, dict) or "n" not in obj or "amplitudes" not in obj:
        raise StateError('state file must be an object with "n" and "amplitudes"')
    n = obj["n"]
    if not isinstance(n, int):
        raise ShapeError("state file field 'n' must be an integer")
    pairs = obj["amplitudes"]
    try:
        amps = np.array([complex(re, im) for re, im in pairs], dtype=np.complex128)
    except (TypeError, ValueError):
        raise StateError("state file amplitudes must be [re, im] pairs") from None
    return make_state(n, amps, normalize=normalize)


def read_state_file(path, normalize=False):
    with open(path, "r", encoding="utf-8") as fh:
        return state_from_json(fh.read(), normalize=normalize)


def write_state_file(state, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(state_to_json(state))
        fh.write("\n")
