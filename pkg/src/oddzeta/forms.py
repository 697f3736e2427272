"""Exact closed forms for the log-kernel integrals and certified zeta values.

The integral I(n, m) over the unit square with kernel (-log xy)^(2m-1)/(1+xy)
and bell factor (xy(1-xy))^n has the exact affine representation

    I(n, m) = alpha * zeta(2m+1) + beta,
    alpha   = (-1)^n (2^(2m) - 1) 2^(n-2m),
    beta    = (-1)^(n+1) * sum_{s=0..n} C(n, s) * A(n+s, m),

where A(M, m) is the alternating partial sum of 1/k^(2m+1). alpha and beta are
exact rationals; only zeta(2m+1) is transcendental. This module provides the
rational side exactly and zeta(2m+1) as a certified enclosure.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp, mpf

from .certified import (
    CertifiedReal,
    decide_with_escalation,
    floor_certified,
    working_prec,
)
from .exact import binomial

_eta_partial_lock = threading.Lock()
_eta_partial_cache: dict[int, list[Fraction]] = {}

_zeta_lock = threading.Lock()
_zeta_cache: dict[tuple[int, int, str], CertifiedReal] = {}

# Direct-summation refusal threshold; beyond this the integral-test tail
# cannot reach the requested tolerance in reasonable time.
DIRECT_SUM_TERM_CAP = 2_000_000


def eta_partial(M: int, m: int) -> Fraction:
    """Exact alternating partial sum  sum_{k=1..M} (-1)^(k-1) / k^(2m+1)."""
    if M < 0:
        raise ValueError(f"eta_partial requires M >= 0, got {M}")
    if m < 2:
        raise ValueError(f"eta_partial requires m >= 2, got {m}")
    s = 2 * m + 1
    with _eta_partial_lock:
        partials = _eta_partial_cache.setdefault(m, [Fraction(0)])
        while len(partials) <= M:
            k = len(partials)
            sign = 1 if k % 2 == 1 else -1
            partials.append(partials[-1] + Fraction(sign, k**s))
        return partials[M]


def eta_zeta_factor(m: int) -> Fraction:
    """The exact factor (1 - 2^(-2m)) linking the alternating and plain series."""
    if m < 2:
        raise ValueError(f"eta_zeta_factor requires m >= 2, got {m}")
    return 1 - Fraction(1, 2 ** (2 * m))


@dataclass(frozen=True)
class ZetaAffine:
    """Exact value alpha * zeta(2m+1) + beta with rational alpha, beta."""

    m: int
    alpha: Fraction
    beta: Fraction

    def evaluate(self, precision_bits: int) -> CertifiedReal:
        """Certified enclosure of alpha*zeta(2m+1) + beta.

        zeta is computed with enough extra bits to absorb the cancellation
        between alpha*zeta and beta (their difference can be smaller than
        either term by a factor ~8^n).
        """
        boost = (
            self.alpha.numerator.bit_length()
            + self.alpha.denominator.bit_length()
            + 32
        )
        z = zeta_value(self.m, precision_bits + boost)
        wp = working_prec(z.precision_bits)
        with mp.workprec(wp):
            av = mpf(self.alpha.numerator) / self.alpha.denominator
            bv = mpf(self.beta.numerator) / self.beta.denominator
            v = av * z.value + bv
            err = abs(av) * z.abs_error + (abs(v) + abs(bv)) * mpf(2) ** (8 - wp)
        return CertifiedReal(v, err, precision_bits)


def closed_form_I(n: int, m: int) -> ZetaAffine:
    """Exact affine-in-zeta representation of I(n, m)."""
    if n < 1:
        raise ValueError(f"closed_form_I requires n >= 1, got {n}")
    if m < 2:
        raise ValueError(f"closed_form_I requires m >= 2, got {m}")
    sign = -1 if n % 2 else 1
    alpha = sign * (2 ** (2 * m) - 1) * Fraction(2) ** (n - 2 * m)
    acc = Fraction(0)
    for s in range(n + 1):
        acc += binomial(n, s) * eta_partial(n + s, m)
    beta = -sign * acc
    return ZetaAffine(m, alpha, beta)


def p_star(n: int, m: int) -> Fraction:
    """The exact rational  (1/((2^(2m)-1) 2^(2n-2m))) * sum_{s=0..2n} C(2n,s) A(2n+s, m).

    Satisfies I(2n, m) = alpha_2n * (zeta(2m+1) - p_star(n, m)) with
    alpha_2n = (2^(2m)-1) 2^(2n-2m); its floor is taken exactly.
    """
    if n < 1:
        raise ValueError(f"p_star requires n >= 1, got {n}")
    if m < 2:
        raise ValueError(f"p_star requires m >= 2, got {m}")
    acc = Fraction(0)
    for s in range(2 * n + 1):
        acc += binomial(2 * n, s) * eta_partial(2 * n + s, m)
    return acc / ((2 ** (2 * m) - 1) * Fraction(2) ** (2 * n - 2 * m))


def _zeta_euler_maclaurin(s: int, precision_bits: int) -> CertifiedReal:
    """zeta(s) for integer s >= 2 by Euler-Maclaurin with a rigorous remainder.

    All even derivatives of x^(-s) are positive, so the remainder after the
    j = J correction term is bounded in magnitude by the first omitted term.
    """
    wp = working_prec(precision_bits) + 16
    K = max(12, wp // 4)
    J = max(12, wp // 4)
    with mp.workprec(wp):
        while True:
            # first omitted term, exact rational scaled into mpf
            p, q = mpmath.bernfrac(2 * J + 2)
            prod = 1
            for i in range(2 * J + 1):
                prod *= s + i
            rem_frac = Fraction(abs(int(p)) * prod, int(q) * math.factorial(2 * J + 2))
            rem = mpf(rem_frac.numerator) / rem_frac.denominator * mpf(K) ** (
                -s - 2 * J - 1
            )
            if rem <= mpf(2) ** (-(precision_bits + 8)):
                break
            K *= 2
            J += J // 2
        total = mpf(0)
        for k in range(1, K):
            total += mpf(k) ** (-s)
        total += mpf(K) ** (1 - s) / (s - 1) + mpf(K) ** (-s) / 2
        for j in range(1, J + 1):
            p, q = mpmath.bernfrac(2 * j)
            prod = 1
            for i in range(2 * j - 1):
                prod *= s + i
            coeff = Fraction(int(p) * prod, int(q) * math.factorial(2 * j))
            total += (
                mpf(coeff.numerator) / coeff.denominator * mpf(K) ** (-s - 2 * j + 1)
            )
        slop = (K + 2 * J + 16) * mpf(2) ** (4 - wp) * (abs(total) + 1)
        err = rem + slop
    return CertifiedReal(total, err, precision_bits)


def _zeta_direct_sum(s: int, precision_bits: int, max_terms: int = DIRECT_SUM_TERM_CAP) -> CertifiedReal:
    """zeta(s) by direct summation to K with the integral-test tail enclosure:

        integral_{K+1}^inf x^-s dx  <=  tail  <=  (K+1)^-s + same integral.

    Refuses (ValueError) when the term count needed for the tolerance exceeds
    max_terms; use the Euler-Maclaurin path for tight tolerances.
    """
    target = Fraction(1, 2 ** (precision_bits + 2))
    K = 8
    while Fraction(1, (K + 1) ** s) > target:
        K *= 2
        if K > max_terms:
            raise ValueError(
                f"direct summation would need more than {max_terms} terms for "
                f"2^-{precision_bits}; use the euler-maclaurin method"
            )
    wp = working_prec(precision_bits)
    with mp.workprec(wp):
        total = mpf(0)
        for k in range(1, K + 1):
            total += mpf(k) ** (-s)
        f_next = mpf(K + 1) ** (-s)
        integral = mpf(K + 1) ** (1 - s) / (s - 1)
        value = total + integral + f_next / 2
        slop = (K + 16) * mpf(2) ** (4 - wp) * (abs(value) + 1)
        err = f_next / 2 + slop
    return CertifiedReal(value, err, precision_bits)


def zeta_value(m: int, precision_bits: int, method: str = "auto") -> CertifiedReal:
    """Certified zeta(2m+1) for m >= 2.

    method: "auto" (Euler-Maclaurin), "euler-maclaurin", or "direct-sum"
    (summation plus integral-test tail; refuses very tight tolerances).
    Results are cached per (m, precision_bits, method).
    """
    if m < 2:
        raise ValueError(f"zeta_value requires m >= 2, got {m}")
    if precision_bits < 64:
        raise ValueError(f"zeta_value requires precision_bits >= 64, got {precision_bits}")
    if method == "auto":
        method = "euler-maclaurin"
    if method not in ("euler-maclaurin", "direct-sum"):
        raise ValueError(f"unknown zeta method {method!r}")
    key = (m, precision_bits, method)
    with _zeta_lock:
        hit = _zeta_cache.get(key)
    if hit is not None:
        return hit
    s = 2 * m + 1
    if method == "euler-maclaurin":
        result = _zeta_euler_maclaurin(s, precision_bits)
    else:
        result = _zeta_direct_sum(s, precision_bits)
    with _zeta_lock:
        _zeta_cache[key] = result
    return result


def eta_value(m: int, precision_bits: int, terms: int | None = None) -> CertifiedReal:
    """Directly summed alternating series for eta(2m+1) with the first-omitted-term
    remainder bound.

    The series converges polynomially, so the achieved error bound is limited by
    the term budget; precision_bits on the result reflects what was achieved.
    """
    if m < 2:
        raise ValueError(f"eta_value requires m >= 2, got {m}")
    s = 2 * m + 1
    K = terms if terms is not None else 10_000
    if K < 1:
        raise ValueError("terms must be >= 1")
    wp = working_prec(precision_bits)
    with mp.workprec(wp):
        total = mpf(0)
        for k in range(1, K + 1):
            term = mpf(k) ** (-s)
            total += term if k % 2 == 1 else -term
        first_omitted = mpf(K + 1) ** (-s)
        sign = 1 if (K + 1) % 2 == 1 else -1
        value = total + sign * first_omitted / 2
        slop = (K + 16) * mpf(2) ** (4 - wp) * (abs(value) + 1)
        err = first_omitted / 2 + slop
        achieved = max(1, min(precision_bits, int(-2 * mp.log(err, 2)) - 2))
    return CertifiedReal(value, err, achieved)


def zeta_floor_and_fraction(
    m: int, precision_bits: int
) -> tuple[int, CertifiedReal]:
    """Exact floor of zeta(2m+1) plus a certified enclosure of its fractional part.

    Escalates precision rather than guessing if the enclosure ever straddles
    an integer.
    """

    def attempt(pb: int) -> tuple[int, CertifiedReal]:
        z = zeta_value(m, pb)
        fl = floor_certified(z)
        wp = working_prec(pb)
        with mp.workprec(wp):
            frac = CertifiedReal(z.value - fl, z.abs_error, z.precision_bits)
        return fl, frac

    (fl, frac), _, _ = decide_with_escalation(attempt, precision_bits)
    return fl, frac
