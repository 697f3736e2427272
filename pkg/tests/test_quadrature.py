from fractions import Fraction

import mpmath
import pytest
from mpmath import mp, mpf

from oddzeta import certified as cert
from oddzeta.forms import closed_form_I, zeta_value
from oddzeta.quadrature import (
    OracleConvergenceError,
    log_moment_integral,
    oracle_I_quadrature,
    oracle_I_series,
    quad_unit_1d,
    quad_unit_square,
    reduce_double_to_single,
)


def test_reduced_integrand_shape():
    spec = reduce_double_to_single(1, 2)
    assert spec.log_power == 4
    assert spec.bell_power == 1
    assert spec.prefactor == Fraction(1, 24)
    spec = reduce_double_to_single(2, 2)
    assert (spec.log_power, spec.bell_power) == (4, 2)
    spec = reduce_double_to_single(1, 3)
    assert (spec.log_power, spec.bell_power) == (6, 1)
    assert spec.prefactor == Fraction(1, 720)


def test_oracle_quadrature_matches_closed_form():
    q = oracle_I_quadrature(1, 2, 192)
    assert q.converged
    ev = closed_form_I(1, 2).evaluate(192)
    gap = cert.sub(q.estimate, ev)
    with mp.workprec(260):
        assert abs(gap.value) <= gap.abs_error
        assert abs(q.estimate.value - mpf("0.0245104591061813881")) < mpf(10) ** -18


def test_oracle_quadrature_positive_and_decreasing():
    prev = None
    for n in (1, 2, 3):
        q = oracle_I_quadrature(n, 2, 128)
        assert cert.compare_rational(q.estimate, 0) == 1
        if prev is not None:
            assert cert.compare(q.estimate, prev) == -1
        prev = q.estimate


def test_oracle_quadrature_tiny_integrals_relative_accuracy():
    q = oracle_I_quadrature(60, 2, 192)
    assert cert.compare_rational(q.estimate, 0) == 1
    with mp.workprec(260):
        assert q.estimate.abs_error < abs(q.estimate.value) * mpf(2) ** -150


def test_oracle_quadrature_nonconvergence_raises():
    with pytest.raises(OracleConvergenceError):
        oracle_I_quadrature(1, 2, 192, max_level=3)


def test_oracle_quadrature_precision_doubling_nests():
    lo = oracle_I_quadrature(2, 2, 128).estimate
    hi = oracle_I_quadrature(2, 2, 256).estimate
    assert lo.lower <= hi.lower and hi.upper <= lo.upper


def test_oracle_series_agrees_with_quadrature():
    for n, m in ((1, 2), (4, 2), (2, 3)):
        ser = oracle_I_series(n, m, 192, inner_terms=3000)
        quad = oracle_I_quadrature(n, m, 192)
        gap = cert.sub(ser, quad.estimate)
        with mp.workprec(260):
            assert abs(gap.value) <= gap.abs_error


def test_oracle_series_truncation_brackets():
    # raw truncations at 1 vs 2 inner terms bracket the converged value at n=1
    one = oracle_I_series(1, 2, 128, inner_terms=1)
    two = oracle_I_series(1, 2, 128, inner_terms=2)
    converged = oracle_I_quadrature(1, 2, 128).estimate
    with mp.workprec(200):
        # undo the midpoint correction to recover the raw partial sums
        raw1 = one.value + one.abs_error  # 1 term: remainder positive
        raw2 = two.value - two.abs_error
        lo, hi = sorted([raw1, raw2])
        assert lo <= converged.value <= hi


def test_oracle_series_enclosure_contains_truth():
    for terms in (1, 2, 5, 50):
        ser = oracle_I_series(1, 2, 128, inner_terms=terms)
        truth = oracle_I_quadrature(1, 2, 192).estimate
        assert ser.lower <= truth.value <= ser.upper


def test_log_moment_instances():
    # s = 3: equals 45*zeta(5)/2
    lm = log_moment_integral(3, 192)
    z = zeta_value(2, 256)
    rhs = cert.scale(z, Fraction(45, 2))
    gap = cert.sub(lm, rhs)
    with mp.workprec(280):
        assert abs(gap.value) <= gap.abs_error
    # s = 1: Gamma(3)*eta(3) = 2*(3/4)*zeta(3)
    lm1 = log_moment_integral(1, 128)
    with mp.workprec(260):
        ref = mpf(3) / 2 * mpmath.zeta(3)
    assert lm1.lower <= ref <= lm1.upper
    # s = 5 (m=3): (63/64)*720*zeta(7)
    lm5 = log_moment_integral(5, 128)
    z7 = zeta_value(3, 192)
    rhs5 = cert.scale(z7, Fraction(63, 64) * 720)
    gap5 = cert.sub(lm5, rhs5)
    with mp.workprec(200):
        assert abs(gap5.value) <= gap5.abs_error


def test_log_moment_validates_arguments():
    with pytest.raises(ValueError):
        log_moment_integral(0, 128)
    with pytest.raises(ValueError):
        log_moment_integral(3, 32)


def test_reduction_identity_polynomials():
    # int int F(xy) = int F(z)(-log z) dz; for F = t^j both equal 1/(j+1)^2
    for j in (0, 1, 4):
        two_d = quad_unit_square(lambda t, j=j: t**j, 96, max_level=5)
        assert two_d.converged

        def f(z, omz, j=j):
            return z**j * (-mp.log(z))

        one_d = quad_unit_1d(f, 96)
        assert one_d.converged
        with mp.workprec(200):
            exact = mpf(1) / (j + 1) ** 2
        for est in (two_d.estimate, one_d.estimate):
            assert est.lower <= exact <= est.upper


def test_quadrature_independent_mpmath_reference():
    # cross-check the engine against mpmath's own tanh-sinh quadrature
    q = oracle_I_quadrature(2, 2, 128)
    with mp.workprec(200):
        ref = mpmath.quad(
            lambda z: (-mpmath.log(z)) ** 4 * (z * (1 - z)) ** 2 / (1 + z) / 24,
            [0, 1],
        )
        assert abs(q.estimate.value - ref) < mpf(10) ** -40


def test_mirror_nodes_cover_both_endpoints():
    # integrand asymmetric around 1/2; equality with reference catches mirror bugs
    def f(z, omz):
        return z * z

    r = quad_unit_1d(f, 96)
    with mp.workprec(200):
        exact = mpf(1) / 3
    assert r.estimate.lower <= exact <= r.estimate.upper


def test_concurrent_oracle_evaluations_share_node_cache():
    # sweeps across (n, m) are the intended parallel mode; the node cache must
    # stay consistent under concurrent first access
    from concurrent.futures import ThreadPoolExecutor

    from oddzeta.quadrature import _node_cache

    _node_cache.clear()
    grid = [(n, m) for n in (1, 2, 3) for m in (2, 3)]
    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(lambda nm: oracle_I_quadrature(*nm, 128), grid))
    for (n, m), res in zip(grid, results):
        ref = oracle_I_quadrature(n, m, 128)
        with mp.workprec(200):
            assert res.estimate.value == ref.estimate.value
