"""Density-matrix entanglement oracles, independent of the geometric map.

Everything here goes through reduced density matrices or polynomial
invariants of the amplitude tensor, so it cross-validates the fibration
coordinates rather than reusing them.
"""

import numpy as np

from .states import bring_to_front

SEP_TOL = 1e-9

_EPS = np.array([[0.0, 1.0], [-1.0, 0.0]])


def partial_trace_to_single(state, keep):
    """Reduced 2x2 density matrix of one qubit, tracing out the rest."""
    if not 0 <= keep < state.n:
        raise ValueError(f"qubit index {keep} out of range for n={state.n}")
    t = state.amps.reshape((2,) * state.n)
    m = np.moveaxis(t, keep, 0).reshape(2, -1)
    return m @ m.conj().T


def concurrence(state):
    """Two-qubit concurrence 2|a00*a11 - a01*a10|."""
    if state.n != 2:
        raise ValueError("concurrence is defined for 2 qubits")
    a = state.amps
    return 2.0 * float(abs(a[0] * a[3] - a[1] * a[2]))


def hyperdeterminant_222(state):
    """Hyperdeterminant of the 2x2x2 amplitude tensor (complex scalar).

    Computed as the determinant of the symmetric bilinear form
    c_kn = eps^il eps^jm a_ijk a_lmn (with eps^01 = 1 = -eps^10), times 1/2.
    Equal in magnitude to the classical quartic polynomial; see three_tangle.
    """
    if state.n != 3:
        raise ValueError("the hyperdeterminant is defined for 3 qubits")
    a = state.amps.reshape(2, 2, 2)
    c = np.einsum("il,jm,ijk,lmn->kn", _EPS, _EPS, a, a)
    return complex(0.5 * np.einsum("il,jm,ij,lm->", _EPS, _EPS, c, c))


def three_tangle(state):
    """Genuine three-way tangle: 4 |hyperdeterminant|."""
    return 4.0 * abs(hyperdeterminant_222(state))


def two_tangles(state):
    """Pairwise one-vs-rest tangles (tau_A, tau_B, tau_C) for 3 qubits."""
    if state.n != 3:
        raise ValueError("two_tangles is defined for 3 qubits")
    return tuple(tau_one_rest(state, q) for q in range(3))


def tau_one_rest(state, qubit):
    """One-vs-rest tangle 4*det(rho_qubit); equals the linear entropy measure."""
    rho = partial_trace_to_single(state, qubit)
    det = rho[0, 0].real * rho[1, 1].real - abs(rho[0, 1]) ** 2
    return 4.0 * float(det)


def separable_one_rest(state, qubit, tol=SEP_TOL):
    """True when the chosen qubit factors out: every 2x2 minor vanishes."""
    t = state.amps.reshape((2,) * state.n)
    m = np.moveaxis(t, qubit, 0).reshape(2, -1)
    minors = np.outer(m[0], m[1]) - np.outer(m[1], m[0])
    return bool(np.max(np.abs(minors)) < tol)


def classify_three(state, tol=SEP_TOL):
    """Coarse 3-qubit class: 'fully-separable', 'bi-separable', or 'entangled'.

    Tries each qubit as the split-off factor; when one splits, the remaining
    two-qubit factor decides between bi- and fully separable.
    """
    if state.n != 3:
        raise ValueError("classification is defined for 3 qubits")
    for q in range(3):
        if not separable_one_rest(state, q, tol):
            continue
        front = bring_to_front(state, q)
        m = front.amps.reshape(2, 4)
        rest = m[0] if np.linalg.norm(m[0]) >= np.linalg.norm(m[1]) else m[1]
        if abs(rest[0] * rest[3] - rest[1] * rest[2]) < tol:
            return "fully-separable"
        return "bi-separable"
    return "entangled"
