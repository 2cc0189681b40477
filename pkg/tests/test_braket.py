import math

import numpy as np
import pytest

from hopfq.braket import ParseError, format_state, parse_amplitudes, parse_state
from hopfq.states import (
    NormalizationError,
    bell_state,
    ghz_state,
    make_state,
    random_state,
    w_state,
)

R2 = 1 / math.sqrt(2)


def test_single_ket():
    n, amps = parse_amplitudes("|01>")
    assert n == 2
    assert np.array_equal(amps, [0, 1, 0, 0])


def test_ket_lengths():
    for bits, idx in (("0", 0), ("10", 2), ("110", 6), ("1011", 11)):
        n, amps = parse_amplitudes(f"|{bits}>")
        assert n == len(bits)
        assert amps[idx] == 1.0 and np.sum(np.abs(amps)) == 1.0


def test_sum_and_difference():
    n, amps = parse_amplitudes("|00> + |11> - |01>")
    assert np.array_equal(amps, [1, -1, 0, 1])


def test_scalar_prefixes():
    n, amps = parse_amplitudes("2|0> + 0.5|1>")
    assert np.array_equal(amps, [2.0, 0.5])
    n, amps = parse_amplitudes("3e-1|0> + 1E+1|1>")
    assert np.array_equal(amps, [0.3, 10.0])


def test_imaginary_unit():
    n, amps = parse_amplitudes("i|0> - 2i|1>")
    assert np.array_equal(amps, [1j, -2j])
    n, amps = parse_amplitudes("(1+2i)|0> + (3-4i)|1>")
    assert np.array_equal(amps, [1 + 2j, 3 - 4j])


def test_division_and_sqrt():
    n, amps = parse_amplitudes("(|00> + |11>)/sqrt(2)")
    assert np.max(np.abs(amps - np.array([R2, 0, 0, R2]))) == 0.0
    n, amps = parse_amplitudes("1/sqrt(3)*(|001> + |010> + |100>)")
    r3 = 1 / math.sqrt(3)
    assert np.max(np.abs(amps - np.array([0, r3, r3, 0, r3, 0, 0, 0]))) < 1e-16


def test_unicode_aliases():
    a = parse_amplitudes("(|00⟩ + |11⟩)/√2")[1]
    b = parse_amplitudes("(|00> + |11>)/sqrt(2)")[1]
    assert np.array_equal(a, b)
    # the radical also accepts a parenthesized argument
    c = parse_amplitudes("(|00> + |11>)/√(2)")[1]
    assert np.array_equal(a, c)


def test_implicit_multiplication():
    a = parse_amplitudes("2|01>")[1]
    b = parse_amplitudes("2*|01>")[1]
    assert np.array_equal(a, b)
    c = parse_amplitudes("sqrt(2)(|00>)")[1]
    d = parse_amplitudes("sqrt(2)*|00>")[1]
    assert np.array_equal(c, d)


def test_nested_parentheses():
    n, amps = parse_amplitudes("((1/2)*(|00> + |01> + |10> + |11>))")
    assert np.array_equal(amps, [0.5, 0.5, 0.5, 0.5])


def test_leading_sign():
    n, amps = parse_amplitudes("-|1> + |0>")
    assert np.array_equal(amps, [1, -1])
    n, amps = parse_amplitudes("+|1>")
    assert np.array_equal(amps, [0, 1])
    n, amps = parse_amplitudes("-0.5|1> - -0.5|0>")
    assert np.array_equal(amps, [0.5, -0.5])


def test_scalar_grammar_soundness():
    # "sqrt(2)/2" and "1/sqrt(2)" are the same real number; as doubles they
    # may differ by at most one representable step
    a = parse_amplitudes("sqrt(2)/2*|0> + |1>")[1][0]
    b = parse_amplitudes("1/sqrt(2)*|0> + |1>")[1][0]
    assert abs(a - b) <= math.ulp(max(abs(a), abs(b)))


def test_parse_state_normalization():
    s = parse_state("(|00> + |11>)/sqrt(2)")
    assert np.array_equal(s.amps, bell_state().amps)
    with pytest.raises(NormalizationError):
        parse_state("|00> + |11>")
    s = parse_state("|00> + |11>", normalize=True)
    assert abs(np.sum(np.abs(s.amps) ** 2) - 1.0) < 1e-12


def _err(text):
    with pytest.raises(ParseError) as info:
        parse_amplitudes(text)
    return info.value


def test_error_positions():
    err = _err("|00> + |11")
    assert err.line == 1 and err.col == 8
    err = _err("|00> +\n+ |2>")
    assert err.line == 2
    err = _err("")
    assert err.line == 1 and err.col == 1


def test_error_messages():
    assert "ket" in str(_err("1 + 2"))              # no ket terms at all
    assert "bit" in str(_err("|>")).lower()
    _err("|01210>")                                  # non-binary digits
    assert "1..4" in str(_err("|00000>"))            # too many qubits
    _err("|00> + |000>")                             # mixed ket sizes
    _err("|00> * |00>")                              # ket times ket
    _err("|00> / |00>")                              # divide by ket
    _err("1/0 * |0>")                                # divide by zero
    _err("sqrt(-1)|0>")                              # radical of negative
    _err("sqrt(i)|0>")                               # radical of non-real
    _err("2 + |0>")                                  # scalar plus ket
    _err("(|00> + |11>")                             # unclosed paren
    _err("|00> @ |11>")                              # stray character
    _err("3.2.1|0>")                                 # malformed number
    _err("foo|0>")                                   # unknown name


def test_oversized_ket_never_allocates():
    # lexer rejects long bitstrings before any 2**k array could be built
    err = _err("|" + "0" * 64 + ">")
    assert "1..4" in str(err)


def test_format_simple():
    # coefficients are always explicit, so output re-parses unambiguously
    assert format_state(parse_state("|01>")) == "1|01>"
    s = parse_state("(|00> + |11>)/sqrt(2)")
    text = format_state(s, digits=3)
    assert text == "0.707|00> + 0.707|11>"


def test_format_signs_and_zeros():
    s = make_state(2, np.array([0.5, -0.5, 0.0, 0.5 + 0.5j]), normalize=True)
    text = format_state(s, digits=3)
    assert "|10>" not in text          # exact zeros are skipped
    assert " - " in text               # negative real joins with a minus
    assert "(" in text and "i" in text # complex amplitude is parenthesized
    s2 = make_state(1, np.array([0.0, -1.0]))
    assert format_state(s2, digits=3).startswith("-")


def test_format_parse_round_trip_bit_exact():
    # default 17 digits reproduces every double exactly
    cases = [
        bell_state(),
        ghz_state(3),
        ghz_state(4),
        w_state(3),
        w_state(4),
    ]
    for n in (1, 2, 3, 4):
        for k in range(10):
            cases.append(random_state(n, seed=900 + n, index=k))
    for s in cases:
        back = parse_state(format_state(s), normalize=False)
        assert back.n == s.n
        assert np.array_equal(back.amps, s.amps)


def test_format_parse_round_trip_15_digits():
    for n in (2, 3, 4):
        s = random_state(n, seed=901, index=n)
        back = parse_state(format_state(s, digits=15), normalize=False)
        assert np.max(np.abs(back.amps - s.amps)) < 1e-12


def test_fuzz_never_crashes():
    # parser must be total: random byte soup either parses or raises ParseError
    rng = np.random.default_rng(2024)
    alphabet = "01|<>()+-*/sqrti. e⟩√\n\t2479,"
    chars = np.array(list(alphabet))
    picks = rng.integers(0, len(chars), size=(5000, 24))
    lengths = rng.integers(0, 24, size=5000)
    for row, ln in zip(picks, lengths):
        text = "".join(chars[row[:ln]])
        try:
            parse_amplitudes(text)
        except ParseError:
            pass
