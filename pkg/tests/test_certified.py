from fractions import Fraction

import pytest
from mpmath import mp, mpf

from oddzeta import certified as cert
from oddzeta.certified import CertifiedReal, PrecisionError, UndecidedComparison


def _cr(value, err, bits=128):
    with mp.workprec(cert.working_prec(bits)):
        return CertifiedReal(mpf(value), mpf(err), bits)


def test_from_rational_encloses():
    c = cert.from_rational(Fraction(1, 3), 128)
    with mp.workprec(200):
        true = mpf(1) / 3
    assert c.lower <= true <= c.upper
    assert c.accepted


def test_add_sub_mul_enclosures():
    a = cert.from_rational(Fraction(2, 7), 128)
    b = cert.from_rational(Fraction(3, 11), 128)
    with mp.workprec(250):
        ts = mpf(2) / 7 + mpf(3) / 11
        tp = mpf(2) / 7 * (mpf(3) / 11)
        td = mpf(2) / 7 - mpf(3) / 11
    s = cert.add(a, b)
    assert s.lower <= ts <= s.upper
    p = cert.mul(a, b)
    assert p.lower <= tp <= p.upper
    d = cert.sub(a, b)
    assert d.lower <= td <= d.upper


def test_neg_is_exact_at_full_precision():
    # negation must not round to the ambient (much lower) precision
    a = cert.from_rational(Fraction(972119770446909306, 10**18), 192)
    n = cert.neg(a)
    with mp.workprec(260):
        assert n.value + a.value == 0


def test_scale_and_shift():
    a = cert.from_rational(Fraction(5, 4), 128)
    s = cert.scale(a, Fraction(-3, 2))
    with mp.workprec(200):
        assert s.lower <= mpf(-15) / 8 <= s.upper
    t = cert.shift(a, Fraction(1, 4))
    with mp.workprec(200):
        assert t.lower <= mpf(3) / 2 <= t.upper


def test_compare_decides_separated_intervals():
    a = _cr("1.0", "1e-30")
    b = _cr("1.000001", "1e-30")
    assert cert.compare(a, b) == -1
    assert cert.compare(b, a) == 1


def test_compare_raises_on_overlap():
    a = _cr("1.0", "1e-3")
    b = _cr("1.0005", "1e-3")
    with pytest.raises(UndecidedComparison):
        cert.compare(a, b)


def test_compare_decides_tiny_gap_beyond_double_precision():
    # gap far below 2^-53 relative: must still decide at the value's precision
    base = cert.from_rational(Fraction(1, 3), 192)
    shifted = cert.shift(base, Fraction(1, 10**40))
    assert cert.compare(base, shifted) == -1


def test_compare_rational():
    a = _cr("0.25", "1e-20")
    assert cert.compare_rational(a, Fraction(1, 2)) == -1
    assert cert.compare_rational(a, Fraction(1, 8)) == 1
    with pytest.raises(UndecidedComparison):
        cert.compare_rational(a, Fraction(1, 4))


def test_floor_certified():
    assert cert.floor_certified(_cr("1.5", "0.1")) == 1
    assert cert.floor_certified(_cr("-0.25", "0.1")) == -1
    with pytest.raises(UndecidedComparison):
        cert.floor_certified(_cr("2.0", "0.1"))


def test_decide_with_escalation_retries():
    calls = []

    def check(pb):
        calls.append(pb)
        if pb < 512:
            raise UndecidedComparison("not yet")
        return "done"

    result, pb, escalations = cert.decide_with_escalation(check, 128)
    assert result == "done" and pb == 512 and escalations == 2
    assert calls == [128, 256, 512]


def test_decide_with_escalation_caps():
    def check(pb):
        raise UndecidedComparison("never")

    with pytest.raises(PrecisionError):
        cert.decide_with_escalation(check, 128, max_bits=1024)


def test_half_power():
    h = cert.half_power(3, 128)
    with mp.workprec(200):
        true = mpf(2) ** (mpf(-3) / 2)
    assert h.lower <= true <= h.upper


def test_log_of_int_handles_huge_arguments():
    big = 7**4000
    c = cert.log_of_int(big, 128)
    with mp.workprec(200):
        true = 4000 * mp.log(7)
    assert c.lower <= true <= c.upper


def test_accepted_budget():
    assert _cr("1.0", "1e-25", 128).accepted
    assert not _cr("1.0", "1e-10", 128).accepted
