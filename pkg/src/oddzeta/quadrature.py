"""Independent numerical oracles for the log-kernel integrals.

The double integral over the unit square depends on (x, y) only through
t = x*y, and for any integrable F

    int_0^1 int_0^1 F(x*y) dx dy  =  int_0^1 F(z) * (-log z) dz,

so I(n, m) reduces to a one-dimensional integral with a (-log z)^(2m) endpoint
singularity at z = 0. That reduced integral is evaluated with tanh-sinh
(double-exponential) quadrature, which the substitution renders spectrally
convergent; the reduction identity itself is checked numerically against a
direct two-dimensional product rule (see quad_unit_square).

A second, independent oracle sums the alternating series

    I(n, m) = sum_{s=0..n} (-1)^s C(n, s) sum_{k>=0} (-1)^k / (n+k+s+1)^(2m+1)

with the first-omitted-term remainder bound on each inner sum.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from mpmath import mp, mpf

from .certified import CertifiedReal, working_prec
from .exact import binomial, factorial

BASE_LEVEL = 2
DEFAULT_MAX_LEVEL = 10

_node_lock = threading.Lock()
# (working_prec, level) -> tuple of (z, 1-z, weight-sans-h) triples.
# Level BASE_LEVEL stores all its nodes (j >= 0); deeper levels store only the
# odd-index nodes that refinement adds.
_node_cache: dict[tuple[int, int], tuple] = {}


class OracleConvergenceError(RuntimeError):
    """Quadrature failed to converge at the configured maximum level."""


@dataclass(frozen=True)
class QuadratureResult:
    estimate: CertifiedReal
    levels_used: int
    converged: bool


@dataclass(frozen=True)
class ReducedIntegrand:
    """Exponents/coefficients of the reduced 1-D integrand

        prefactor * (-log z)^log_power * (z*(1-z))^bell_power / (1+z).
    """

    log_power: int
    bell_power: int
    prefactor: Fraction

    def evaluate(self, z: mpf, one_minus_z: mpf) -> mpf:
        return (-mp.log(z)) ** self.log_power * (z * one_minus_z) ** self.bell_power / (
            1 + z
        )


def reduce_double_to_single(n: int, m: int) -> ReducedIntegrand:
    """Reduced 1-D form of I(n, m): no evaluation, just the shape."""
    if n < 1:
        raise ValueError(f"reduce_double_to_single requires n >= 1, got {n}")
    if m < 2:
        raise ValueError(f"reduce_double_to_single requires m >= 2, got {m}")
    return ReducedIntegrand(2 * m, n, Fraction(1, factorial(2 * m)))


def _tmax(wp: int) -> mpf:
    # Far enough out that the double-exponential weight underflows the
    # working precision even against (-log z)^(2m) polynomial growth.
    return mp.asinh((mpf(wp) * mp.log(2) * mpf("1.15") + 96) / mp.pi)


def _make_node(t: mpf) -> tuple[mpf, mpf, mpf]:
    # z = 1/(1+E), 1-z = E/(1+E) with E = exp(-pi*sinh t); weight excludes h.
    E = mp.exp(-mp.pi * mp.sinh(t))
    onep = 1 + E
    z = 1 / onep
    omz = E / onep
    w = mp.pi / 2 * mp.cosh(t) * 2 * E / (onep * onep)
    return (z, omz, w)


def _nodes(wp: int, level: int) -> tuple:
    key = (wp, level)
    with _node_lock:
        hit = _node_cache.get(key)
    if hit is not None:
        return hit
    with mp.workprec(wp + 16):
        tmax = _tmax(wp)
        h = mpf(2) ** (-level)
        nodes = []
        if level == BASE_LEVEL:
            j = 0
            while True:
                t = j * h
                if t > tmax:
                    break
                nodes.append(_make_node(t))
                j += 1
        else:
            j = 1
            while True:
                t = j * h
                if t > tmax:
                    break
                nodes.append(_make_node(t))
                j += 2
    result = tuple(nodes)
    with _node_lock:
        _node_cache[key] = result
    return result


def quad_unit_1d(
    f: Callable[[mpf, mpf], mpf],
    precision_bits: int,
    max_level: int = DEFAULT_MAX_LEVEL,
) -> QuadratureResult:
    """Tanh-sinh quadrature of f over (0, 1).

    f receives (z, 1-z), both computed stably near the endpoints. Refinement
    doubles the node density per level; the reported error bound is the last
    successive-level difference plus an outward rounding allowance.
    """
    wp = working_prec(precision_bits)
    eps_rel = mpf(2) ** (-precision_bits)
    with mp.workprec(wp):
        h = mpf(2) ** (-BASE_LEVEL)
        raw = mpf(0)
        abs_sum = mpf(0)
        for i, (z, omz, w) in enumerate(_nodes(wp, BASE_LEVEL)):
            fv = f(z, omz) * w
            raw += fv
            abs_sum += abs(fv)
            if i > 0:
                fv = f(omz, z) * w
                raw += fv
                abs_sum += abs(fv)
        total = raw * h
        prev = None
        level = BASE_LEVEL
        converged = False
        diff = abs(total)
        while level < max_level:
            level += 1
            h = h / 2
            for z, omz, w in _nodes(wp, level):
                fv = f(z, omz) * w
                raw += fv
                abs_sum += abs(fv)
                fv = f(omz, z) * w
                raw += fv
                abs_sum += abs(fv)
            prev = total
            total = raw * h
            diff = abs(total - prev)
            if level >= BASE_LEVEL + 2 and diff <= eps_rel * abs(total):
                converged = True
                break
        slop = (abs_sum * h + abs(total)) * mpf(2) ** (10 - wp)
        err = diff + slop
    estimate = CertifiedReal(total, err, precision_bits)
    return QuadratureResult(estimate, level, converged)


def quad_unit_square(
    F: Callable[[mpf], mpf],
    precision_bits: int,
    max_level: int = 6,
) -> QuadratureResult:
    """Product-rule tanh-sinh quadrature of int_0^1 int_0^1 F(x*y) dx dy.

    Exercises the full two-dimensional integral without using the -log z
    reduction, so it serves as an independent check of that identity.
    """
    wp = working_prec(precision_bits)
    eps_rel = mpf(2) ** (-precision_bits)
    with mp.workprec(wp):
        prev = None
        total = None
        converged = False
        diff = None
        level = BASE_LEVEL
        for level in range(BASE_LEVEL + 1, max_level + 1):
            h = mpf(2) ** (-level)
            axis: list[tuple[mpf, mpf]] = []
            for lvl in range(BASE_LEVEL, level + 1):
                for i, (z, omz, w) in enumerate(_nodes(wp, lvl)):
                    axis.append((z, w))
                    if not (lvl == BASE_LEVEL and i == 0):
                        axis.append((omz, w))
            raw = mpf(0)
            abs_sum = mpf(0)
            for za, wa in axis:
                row = mpf(0)
                row_abs = mpf(0)
                for zb, wb in axis:
                    fv = F(za * zb) * wb
                    row += fv
                    row_abs += abs(fv)
                raw += row * wa
                abs_sum += row_abs * abs(wa)
            prev = total
            total = raw * h * h
            if prev is not None:
                diff = abs(total - prev)
                if diff <= eps_rel * abs(total):
                    converged = True
                    break
        if diff is None:
            diff = abs(total)
        slop = (abs_sum * h * h + abs(total)) * mpf(2) ** (12 - wp)
        err = diff + slop
    estimate = CertifiedReal(total, err, precision_bits)
    return QuadratureResult(estimate, level, converged)


def oracle_I_quadrature(
    n: int,
    m: int,
    precision_bits: int = 192,
    max_level: int = DEFAULT_MAX_LEVEL,
) -> QuadratureResult:
    """Certified I(n, m) by tanh-sinh quadrature of the reduced integrand.

    Raises OracleConvergenceError instead of returning an unconverged value.
    """
    spec = reduce_double_to_single(n, m)
    if precision_bits < 64:
        raise ValueError(f"precision_bits must be >= 64, got {precision_bits}")
    result = quad_unit_1d(spec.evaluate, precision_bits, max_level)
    if not result.converged:
        raise OracleConvergenceError(
            f"I({n},{m}) quadrature did not converge at level {max_level} "
            f"(last diff {result.estimate.abs_error})"
        )
    wp = working_prec(precision_bits)
    with mp.workprec(wp):
        pref = mpf(spec.prefactor.numerator) / spec.prefactor.denominator
        est = result.estimate
        value = est.value * pref
        err = est.abs_error * pref + abs(value) * mpf(2) ** (8 - wp)
    return QuadratureResult(
        CertifiedReal(value, err, precision_bits), result.levels_used, True
    )


def oracle_I_series(
    n: int,
    m: int,
    precision_bits: int = 192,
    inner_terms: int | None = None,
) -> CertifiedReal:
    """Certified I(n, m) by the alternating double series.

    Each inner alternating sum is truncated after inner_terms terms and
    enclosed by the midpoint of its alternating-series bracket (remainder at
    most half the first omitted term); the outer binomial combination is
    exact. Convergence is polynomial, so the result's precision_bits reports
    the precision actually achieved under the term budget.
    """
    if n < 1 or m < 2:
        raise ValueError(f"oracle_I_series requires n >= 1, m >= 2, got ({n}, {m})")
    s_exp = 2 * m + 1
    if inner_terms is None:
        # enough terms for 2^(-precision_bits/2) if cheap, else capped
        want = int(2 ** ((n + precision_bits / 2) / s_exp)) + 1
        inner_terms = max(400, min(20_000, want))
    if inner_terms < 1:
        raise ValueError("inner_terms must be >= 1")
    wp = working_prec(precision_bits)
    with mp.workprec(wp):
        total = mpf(0)
        bound = mpf(0)
        for s in range(n + 1):
            c = n + s + 1
            inner = mpf(0)
            for k in range(inner_terms):
                term = mpf(c + k) ** (-s_exp)
                inner += term if k % 2 == 0 else -term
            first_omitted = mpf(c + inner_terms) ** (-s_exp)
            sign_k = 1 if inner_terms % 2 == 0 else -1
            inner += sign_k * first_omitted / 2
            coeff = binomial(n, s)
            signed = coeff * inner
            total += signed if s % 2 == 0 else -signed
            bound += coeff * first_omitted / 2
        slop = (n + 1) * (inner_terms + 8) * mpf(2) ** (4 - wp)
        err = bound + slop
        achieved = max(1, min(precision_bits, int(-2 * mp.log(err, 2)) - 2))
    return CertifiedReal(total, err, achieved)


def log_moment_integral(
    s: int,
    precision_bits: int = 192,
    max_level: int = DEFAULT_MAX_LEVEL,
) -> CertifiedReal:
    """Certified value of the unit-square integral of (-log xy)^s / (1 + xy),
    computed via its reduced form int_0^1 (-log z)^(s+1) / (1+z) dz."""
    if s < 1:
        raise ValueError(f"log_moment_integral requires s >= 1, got {s}")
    if precision_bits < 64:
        raise ValueError(f"precision_bits must be >= 64, got {precision_bits}")

    def f(z: mpf, one_minus_z: mpf) -> mpf:
        return (-mp.log(z)) ** (s + 1) / (1 + z)

    result = quad_unit_1d(f, precision_bits, max_level)
    if not result.converged:
        raise OracleConvergenceError(
            f"log-moment integral (s={s}) did not converge at level {max_level}"
        )
    return result.estimate
