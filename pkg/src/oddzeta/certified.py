"""Certified real values: a high-precision midpoint paired with a rigorous
absolute error bound.

All midpoints are mpmath floats computed at precision_bits + 32 guard bits;
every operation propagates the error bound outward (a generous per-operation
rounding allowance of 2**(8 - working_prec) relative is folded in, which
dominates mpmath's 0.5 ulp round-to-nearest by a wide margin). Comparisons
between certified values are decided only when the intervals separate;
otherwise the caller escalates precision or reports the claim undecided.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import fneg, mp, mpf

GUARD_BITS = 32

# Relative rounding allowance per derived quantity, in units of 2**-wp.
# Covers chains of a couple hundred rounded mpf operations.
_ROUND_SLOP_BITS = 8


class PrecisionError(RuntimeError):
    """A certified comparison stayed undecided at the configured precision cap."""


class UndecidedComparison(Exception):
    """Intervals overlap; the comparison cannot be decided at this precision."""


def working_prec(precision_bits: int) -> int:
    return precision_bits + GUARD_BITS


def _round_slop(value: mpf, wp: int) -> mpf:
    return abs(value) * mpf(2) ** (_ROUND_SLOP_BITS - wp)


@dataclass(frozen=True)
class CertifiedReal:
    """An enclosure: the true quantity lies in [value - abs_error, value + abs_error]."""

    value: mpf
    abs_error: mpf
    precision_bits: int

    def __post_init__(self) -> None:
        if self.abs_error < 0:
            raise ValueError("abs_error must be non-negative")
        if self.precision_bits < 1:
            raise ValueError("precision_bits must be positive")

    @property
    def lower(self) -> mpf:
        # endpoint arithmetic at the value's own working precision, padded
        # outward so rounding can never shrink the enclosure
        wp = working_prec(self.precision_bits) + 16
        with mp.workprec(wp):
            pad = (abs(self.value) + self.abs_error) * mpf(2) ** (8 - wp)
            return self.value - self.abs_error - pad

    @property
    def upper(self) -> mpf:
        wp = working_prec(self.precision_bits) + 16
        with mp.workprec(wp):
            pad = (abs(self.value) + self.abs_error) * mpf(2) ** (8 - wp)
            return self.value + self.abs_error + pad

    @property
    def accepted(self) -> bool:
        """Whether the bound meets the accepted-result budget 2**(-precision_bits/2)."""
        with mp.workprec(working_prec(self.precision_bits)):
            return self.abs_error <= mpf(2) ** (-self.precision_bits // 2)

    def contains(self, other: CertifiedReal) -> bool:
        return self.lower <= other.lower and other.upper <= self.upper

    def __repr__(self) -> str:
        return f"CertifiedReal({self.value!r} +/- {self.abs_error!r}, bits={self.precision_bits})"


def from_rational(q: Fraction | int, precision_bits: int) -> CertifiedReal:
    """Enclose an exact rational at the given precision."""
    wp = working_prec(precision_bits)
    with mp.workprec(wp):
        q = Fraction(q)
        v = mpf(q.numerator) / q.denominator
        err = _round_slop(v, wp)
    return CertifiedReal(v, err, precision_bits)


def add(a: CertifiedReal, b: CertifiedReal) -> CertifiedReal:
    pb = min(a.precision_bits, b.precision_bits)
    wp = working_prec(pb)
    with mp.workprec(wp):
        v = a.value + b.value
        err = a.abs_error + b.abs_error + _round_slop(v, wp)
    return CertifiedReal(v, err, pb)


def sub(a: CertifiedReal, b: CertifiedReal) -> CertifiedReal:
    return add(a, neg(b))


def neg(a: CertifiedReal) -> CertifiedReal:
    # mpf negation rounds at the ambient precision; fneg(exact=True) does not
    return CertifiedReal(fneg(a.value, exact=True), a.abs_error, a.precision_bits)


def mul(a: CertifiedReal, b: CertifiedReal) -> CertifiedReal:
    pb = min(a.precision_bits, b.precision_bits)
    wp = working_prec(pb)
    with mp.workprec(wp):
        v = a.value * b.value
        err = (
            abs(a.value) * b.abs_error
            + abs(b.value) * a.abs_error
            + a.abs_error * b.abs_error
            + _round_slop(v, wp)
        )
    return CertifiedReal(v, err, pb)


def scale(a: CertifiedReal, q: Fraction | int) -> CertifiedReal:
    """Multiply by an exact rational."""
    q = Fraction(q)
    wp = working_prec(a.precision_bits)
    with mp.workprec(wp):
        qv = mpf(q.numerator) / q.denominator
        v = a.value * qv
        err = abs(qv) * a.abs_error + _round_slop(v, wp)
    return CertifiedReal(v, err, a.precision_bits)


def shift(a: CertifiedReal, q: Fraction | int) -> CertifiedReal:
    """Add an exact rational."""
    q = Fraction(q)
    wp = working_prec(a.precision_bits)
    with mp.workprec(wp):
        v = a.value + mpf(q.numerator) / q.denominator
        err = a.abs_error + _round_slop(v, wp)
    return CertifiedReal(v, err, a.precision_bits)


def half_power(n: int, precision_bits: int) -> CertifiedReal:
    """Certified 2**(-n/2)."""
    wp = working_prec(precision_bits)
    with mp.workprec(wp):
        v = mpf(2) ** (mpf(-n) / 2)
        err = abs(v) * mpf(2) ** (_ROUND_SLOP_BITS - wp)
    return CertifiedReal(v, err, precision_bits)


def log_of_int(n: int, precision_bits: int) -> CertifiedReal:
    """Certified natural log of a positive integer (n may be arbitrarily large)."""
    if n < 1:
        raise ValueError("log_of_int requires n >= 1")
    wp = working_prec(precision_bits)
    with mp.workprec(wp):
        v = mp.log(mpf(n))
        # conversion of n plus the log evaluation, both within the slop allowance
        err = (1 + abs(v)) * mpf(2) ** (_ROUND_SLOP_BITS - wp)
    return CertifiedReal(v, err, precision_bits)


def compare(a: CertifiedReal, b: CertifiedReal) -> int:
    """-1 if a < b certainly, +1 if a > b certainly; raises UndecidedComparison
    when the enclosures overlap."""
    if a.upper < b.lower:
        return -1
    if a.lower > b.upper:
        return 1
    raise UndecidedComparison(
        f"intervals overlap: [{a.lower}, {a.upper}] vs [{b.lower}, {b.upper}]"
    )


def compare_rational(a: CertifiedReal, q: Fraction | int) -> int:
    """Certified comparison against an exact rational (same contract as compare)."""
    q = Fraction(q)
    wp = working_prec(a.precision_bits)
    with mp.workprec(wp):
        qv = mpf(q.numerator) / q.denominator
        pad = _round_slop(qv, wp)
        lo = qv - pad
        hi = qv + pad
    if a.upper < lo:
        return -1
    if a.lower > hi:
        return 1
    raise UndecidedComparison(f"interval [{a.lower}, {a.upper}] overlaps {q}")


def floor_certified(a: CertifiedReal) -> int:
    """Exact floor of the enclosed value; raises UndecidedComparison if the
    enclosure straddles an integer (callers escalate precision, never guess)."""
    import math as _math

    lo = _math.floor(a.lower)
    hi = _math.floor(a.upper)
    if lo != hi:
        raise UndecidedComparison(
            f"enclosure [{a.lower}, {a.upper}] straddles an integer"
        )
    return lo


def decide_with_escalation(check, precision_bits: int, max_bits: int = 4096):
    """Run check(pb) -> T, retrying with doubled precision on UndecidedComparison.

    Returns (result, precision_used, escalations). Raises PrecisionError once
    the cap is exceeded.
    """
    pb = precision_bits
    escalations = 0
    while True:
        try:
            return check(pb), pb, escalations
        except UndecidedComparison:
            if 2 * pb > max_bits:
                raise PrecisionError(
                    f"undecided at precision cap ({max_bits} bits)"
                ) from None
            pb *= 2
            escalations += 1
