"""Report assembly: per-state analysis reports, the published-value
conformance table, and random-sample tables.

Everything here is a pure projection of the algebra/fibration/tangle modules
into ordered dictionaries and rows; serialization helpers keep float output
lossless (repr round-trips doubles exactly).
"""

import io
import json

import numpy as np

from .braket import parse_amplitudes, parse_state
from .fibration import ball_coordinates, base_coordinates, e_measure, is_mes
from .states import QubitState, bring_to_front
from .tangles import (
    classify_three,
    concurrence,
    separable_one_rest,
    tau_one_rest,
    three_tangle,
    two_tangles,
)

MATCH_TOL = 1e-3


def analysis_report(state):
    """Full per-state report as an ordered dict of plain Python values.

    The amplitude list is [[re, im], ...]; coordinate fields are the raw
    base-map values while e_complement / e_sum carry the boundary-snapped
    measure values.
    """
    n = state.n
    bc = base_coordinates(state)
    report = {
        "n": n,
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amps],
        "delta": bc.delta,
        "comps": [float(c) for c in bc.comps],
    }
    if n >= 2:
        e_comp, e_sum, defect = e_measure(state)
        report["e_complement"] = e_comp
        report["e_sum"] = e_sum
        report["norm_defect"] = defect
    if n == 4:
        x, y, z = ball_coordinates(state)
        report["ball"] = [x, y, z]
        report["mes"] = is_mes(state)
    if n >= 2:
        report["tau_one_rest"] = [
            tau_one_rest(state, q) for q in range(n)
        ]
    if n == 2:
        report["concurrence"] = concurrence(state)
    if n == 3:
        report["three_tangle"] = three_tangle(state)
        report["two_tangles"] = list(two_tangles(state))
    if n >= 2:
        report["separable"] = [
            separable_one_rest(state, q) for q in range(n)
        ]
    if n == 3:
        report["classification"] = classify_three(state)
    return report


def _flat_items(report):
    """Flatten the report into (name, scalar) pairs for CSV output."""
    for key, value in report.items():
        if key == "amplitudes":
            for k, (re_, im) in enumerate(value):
                yield f"amp_{k}_re", re_
                yield f"amp_{k}_im", im
        elif isinstance(value, list):
            for k, item in enumerate(value):
                yield f"{key}_{k}", item
        else:
            yield key, value


def _csv_scalar(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def report_to_json(report):
    return json.dumps(report, indent=2) + "\n"


def report_to_csv(report):
    out = io.StringIO()
    out.write("field,value\n")
    for name, value in _flat_items(report):
        out.write(f"{name},{_csv_scalar(value)}\n")
    return out.getvalue()


class ConformanceRow:
    """One published-value check: label, published value, computed values,
    an independent density-matrix oracle, and the match verdict."""

    __slots__ = (
        "label",
        "paper_value",
        "computed_e_complement",
        "computed_e_sum",
        "oracle_tau",
        "match",
        "note",
    )

    def __init__(self, label, paper_value, e_complement, e_sum, oracle_tau, note):
        self.label = label
        self.paper_value = float(paper_value)
        self.computed_e_complement = float(e_complement)
        self.computed_e_sum = float(e_sum)
        self.oracle_tau = float(oracle_tau)
        self.match = bool(abs(self.computed_e_complement - self.paper_value) < MATCH_TOL)
        self.note = note

    def as_dict(self):
        return {
            "label": self.label,
            "paper_value": self.paper_value,
            "computed_e_complement": self.computed_e_complement,
            "computed_e_sum": self.computed_e_sum,
            "oracle_tau": self.oracle_tau,
            "match": self.match,
            "note": self.note,
        }


PUBLISHED_STATES = (
    ("GHZ (4 qubits)", "(|0000>+|1111>)/sqrt(2)"),
    ("W0 (4 qubits)", "1/2*(|1000>+|0100>+|0010>+|0001>)"),
    ("W1 (4 qubits)", "1/2*(|0111>+|1011>+|1101>+|1110>)"),
    ("Phi1 (4 qubits)", "1/sqrt(6)*(sqrt(2)|1111>+|1000>+|0100>+|0010>+|0001>)"),
    (
        "Phi2 (4 qubits)",
        "3|0000>+3|1111>-|0011>-|1100>+3|0101>+3|1010>-|0110>-|1001>",
    ),
    ("Bell (2 qubits)", "(|00>+|11>)/sqrt(2)"),
    ("GHZ (3 qubits)", "(|000>+|111>)/sqrt(2)"),
    ("W (3 qubits)", "1/sqrt(3)*(|001>+|010>+|100>)"),
    ("|0>xBell (3 qubits)", "(|000>+|011>)/sqrt(2)"),
)


def _row(label, paper_value, state, note):
    e_comp, e_sum, _ = e_measure(state)
    return ConformanceRow(
        label, paper_value, e_comp, e_sum, tau_one_rest(state, 0), note
    )


def conformance_rows():
    """The published-example table: one row per state and claim.

    Published E values are reproduced where the arithmetic allows and shown
    side by side with both computed expressions where it does not; the
    density-matrix tau oracle is computed independently of the pair encoding.
    """
    states = {label: parse_state(text, normalize=True) for label, text in PUBLISHED_STATES}
    rows = []

    rows.append(_row(
        "GHZ (4 qubits)", 1.0, states["GHZ (4 qubits)"],
        "matches the published 1; ball point at the origin (maximally entangled)",
    ))
    rows.append(_row(
        "W0 (4 qubits)", 0.5, states["W0 (4 qubits)"],
        "published 1/2; both computed forms and the density-matrix oracle give 3/4",
    ))
    rows.append(_row(
        "W1 (4 qubits)", 0.75, states["W1 (4 qubits)"],
        "matches the published 3/4; ball point (0, 0, -1/2)",
    ))
    rows.append(_row(
        "Phi1 (4 qubits)", 8.0 / 9.0, states["Phi1 (4 qubits)"],
        "published 8/9 equals the antilinear-monotone value cited alongside it; "
        "the base-map measure and the oracle give 1 (leading qubit maximally mixed)",
    ))

    # The published prefactor 1/sqrt(2*sqrt(10)) does not normalize this
    # vector (squared norm 2*sqrt(10) ~= 6.325), so it is evaluated twice:
    # exactly as printed, and rescaled to unit norm.
    _, raw = parse_amplitudes(PUBLISHED_STATES[4][1])
    printed = QubitState(4, raw / np.sqrt(2.0 * np.sqrt(10.0)), _norm_tol=None)
    printed_bc = base_coordinates(printed)
    rows.append(ConformanceRow(
        "Phi2 (4 qubits, as printed)", 0.6625,
        printed_bc.e_complement, printed_bc.e_sum, tau_one_rest(printed, 0),
        "printed prefactor leaves squared norm 2*sqrt(10) ~= 6.3246, so the "
        "quadratic forms are far off scale; values shown for the vector as printed",
    ))
    rows.append(_row(
        "Phi2 (4 qubits, normalized)", 0.6625, states["Phi2 (4 qubits)"],
        "published 0.6625; the normalized state is maximally entangled across "
        "the leading cut (computed 1, ball origin)",
    ))

    bell = states["Bell (2 qubits)"]
    rows.append(ConformanceRow(
        "Bell (2 qubits)", 1.0,
        *e_measure(bell)[:2], concurrence(bell) ** 2,
        "equals concurrence squared (oracle column holds concurrence^2 here)",
    ))

    ghz3 = states["GHZ (3 qubits)"]
    rows.append(_row(
        "GHZ (3 qubits)", 1.0, ghz3,
        f"three-tangle {three_tangle(ghz3):.6g}, two-tangles all 1, "
        f"classified {classify_three(ghz3)}",
    ))
    w3 = states["W (3 qubits)"]
    rows.append(_row(
        "W (3 qubits)", 8.0 / 9.0, w3,
        f"three-tangle {three_tangle(w3):.3g} (vanishes), two-tangles all 8/9, "
        f"classified {classify_three(w3)}",
    ))
    bisep = states["|0>xBell (3 qubits)"]
    taus = [tau_one_rest(bisep, q) for q in range(3)]
    rows.append(_row(
        "|0>xBell (3 qubits)", 0.0, bisep,
        f"leading qubit separable; remaining pair maximally entangled "
        f"(tau per qubit {taus[0]:.3g}, {taus[1]:.3g}, {taus[2]:.3g}); "
        f"classified {classify_three(bisep)}",
    ))
    return rows


def rows_to_text(rows):
    headers = ("state", "published", "e_complement", "e_sum", "oracle tau", "match")
    table = [
        (
            r.label,
            f"{r.paper_value:.10g}",
            f"{r.computed_e_complement:.10g}",
            f"{r.computed_e_sum:.10g}",
            f"{r.oracle_tau:.10g}",
            "yes" if r.match else "NO",
        )
        for r in rows
    ]
    widths = [
        max(len(headers[c]), max(len(row[c]) for row in table))
        for c in range(len(headers))
    ]
    out = io.StringIO()
    line = "  ".join(h.ljust(w) for h, w in zip(headers, widths))
    out.write(line.rstrip() + "\n")
    out.write("-" * len(line) + "\n")
    for r, row in zip(rows, table):
        out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")
        out.write(f"    note: {r.note}\n")
    mismatches = sum(1 for r in rows if not r.match)
    out.write(f"\n{len(rows)} checks, {len(rows) - mismatches} matching, "
              f"{mismatches} mismatching (mismatches are reported, never hidden)\n")
    return out.getvalue()


def rows_to_json(rows):
    return json.dumps([r.as_dict() for r in rows], indent=2) + "\n"


def rows_to_csv(rows):
    out = io.StringIO()
    out.write("label,paper_value,computed_e_complement,computed_e_sum,oracle_tau,match,note\n")
    for r in rows:
        note = '"' + r.note.replace('"', '""') + '"'
        out.write(
            f"{r.label},{repr(r.paper_value)},{repr(r.computed_e_complement)},"
            f"{repr(r.computed_e_sum)},{repr(r.oracle_tau)},"
            f"{'true' if r.match else 'false'},{note}\n"
        )
    return out.getvalue()


def sample_table(n, count, seed):
    """CSV lines for `count` random n-qubit states under a fixed seed.

    Values are the raw base-map quantities (no boundary snapping) so the
    defect identity e_complement - e_sum = norm_defect stays exact in the
    output; the tau column is the independent density-matrix value.
    """
    from .states import random_state  # local import keeps module load light

    lines = ["index,e_complement,e_sum,norm_defect,tau_a" + (",ball_radius" if n == 4 else "")]
    for index in range(count):
        state = random_state(n, seed, index=index)
        bc = base_coordinates(state)
        tau = tau_one_rest(state, 0)
        row = (
            f"{index},{repr(bc.e_complement)},{repr(bc.e_sum)},"
            f"{repr(bc.norm_defect)},{repr(tau)}"
        )
        if n == 4:
            radius = float(np.sqrt(bc.delta ** 2 + bc.comps[0] ** 2 + bc.comps[1] ** 2))
            row += f",{repr(radius)}"
        lines.append(row)
    return "\n".join(lines) + "\n"


def analyze_state(state, qubit=0):
    """Bring `qubit` into the leading role and build the analysis report."""
    if qubit:
        state = bring_to_front(state, qubit)
    return analysis_report(state)
