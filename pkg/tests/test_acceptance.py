"""Acceptance suite: every criterion at its stated tolerance, one pass/fail
line per criterion (run with -s to see the lines as they complete)."""

import contextlib
import io
import json
import math
import time
from fractions import Fraction

from mpmath import mp, mpf

from oddzeta import certified as cert
from oddzeta import cli
from oddzeta.audit import (
    check_integral_bounds,
    in_scope_keys,
    random_diophantine_sweep,
)
from oddzeta.exact import is_prime_power, lcm_table, lcm_table_direct
from oddzeta.forms import closed_form_I, p_star, zeta_floor_and_fraction, zeta_value
from oddzeta.quadrature import (
    log_moment_integral,
    oracle_I_quadrature,
    oracle_I_series,
    quad_unit_1d,
    quad_unit_square,
)

REL_TOL = mpf(10) ** -30
PREC = 192


def _line(num: int, ok: bool, text: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {text}")
    assert ok, f"criterion {num} failed: {text}"


def _lemma_sweep(m: int, n_hi: int) -> tuple[bool, mpf]:
    worst_rel = mpf(0)
    ok = True
    for n in range(1, n_hi + 1):
        ev = closed_form_I(n, m).evaluate(PREC)
        quad = oracle_I_quadrature(n, m, PREC)
        with mp.workprec(cert.working_prec(PREC)):
            combined = ev.abs_error + quad.estimate.abs_error
            ok = ok and abs(ev.value - quad.estimate.value) <= combined
            rel = combined / abs(quad.estimate.value)
            worst_rel = max(worst_rel, rel)
            ok = ok and rel <= REL_TOL
    return ok, worst_rel


def test_criterion_1_lemma_identity_m2():
    t0 = time.perf_counter()
    ok, worst = _lemma_sweep(2, 12)
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed <= 60.0
    _line(1, ok, f"closed form vs quadrature, m=2, n=1..12; worst rel err {float(worst):.2e}; {elapsed:.1f}s")


def test_criterion_2_lemma_identity_general():
    t0 = time.perf_counter()
    ok3, w3 = _lemma_sweep(3, 8)
    ok4, w4 = _lemma_sweep(4, 8)
    elapsed = time.perf_counter() - t0
    ok = ok3 and ok4 and elapsed <= 60.0
    _line(2, ok, f"m=3,4, n=1..8; worst rel err {float(max(w3, w4)):.2e}; {elapsed:.1f}s")


def test_criterion_3_log_moment_instance():
    lm = log_moment_integral(3, PREC)
    z = zeta_value(2, PREC + 64)
    rhs = cert.scale(z, Fraction(45, 2))
    gap = cert.sub(lm, rhs)
    with mp.workprec(cert.working_prec(PREC)):
        within = abs(gap.value) <= gap.abs_error
        rel = (lm.abs_error + rhs.abs_error) / abs(rhs.value)
        ok = within and rel <= REL_TOL
    _line(3, ok, f"log-moment s=3 vs 45*zeta(5)/2; rel err {float(rel):.2e}")


def test_criterion_4_dn_square_bound():
    t0 = time.perf_counter()
    table = lcm_table(10_000)
    failures = 0
    pow8 = 8
    for n in range(1, 10_001):
        if table.d(n) ** 2 >= pow8:
            failures += 1
        pow8 *= 8
    elapsed = time.perf_counter() - t0
    ok = failures == 0 and elapsed <= 30.0
    _line(4, ok, f"d_n^2 < 8^n for n <= 10000; {failures} failures; {elapsed:.1f}s")


def test_criterion_5_unit_interval_bound():
    reports = check_integral_bounds(100, 2, PREC)
    rows = [r for r in reports if r.key == "eq12"]
    ok = len(rows) == 100 and all(r.holds is True for r in rows)
    # spot-check the certified product directly against the quadrature oracle
    table = lcm_table(100)
    for n in (1, 50, 100):
        q = oracle_I_quadrature(n, 2, PREC)
        dnI = cert.scale(q.estimate, table.d(n))
        ok = ok and cert.compare_rational(dnI, 0) == 1 and cert.compare_rational(dnI, 1) == -1
    _line(5, ok, "certified d_n*I_n strictly inside (0,1) for n=1..100")


def test_criterion_6_exact_floors():
    ok = all(math.floor(p_star(n, 2)) == 1 for n in range(1, 51))
    for m in (3, 4):
        ok = ok and all(math.floor(p_star(n, m)) == 1 for n in range(1, 21))
    _line(6, ok, "exact floors of P*(n,m) equal 1 (m=2: n<=50; m=3,4: n<=20)")


def test_criterion_7_zeta_enclosures():
    ok = True
    for m in range(2, 7):
        z = zeta_value(m, PREC)
        ok = ok and cert.compare_rational(z, 1) == 1
        ok = ok and cert.compare_rational(z, 1 + Fraction(1, 2 * m)) == -1
    _, frac = zeta_floor_and_fraction(2, PREC)
    ok = ok and cert.compare_rational(frac, Fraction(1, 63)) == 1
    _line(7, ok, "zeta(2m+1) in (1, 1+1/(2m)] for m=2..6 and {zeta(5)} > 1/63")


def test_criterion_8_oracle_independence():
    ok = True
    points = 0
    for m in (2, 3, 4, 5):
        for n in range(1, 6):
            quad = oracle_I_quadrature(n, m, PREC)
            ser = oracle_I_series(n, m, PREC, inner_terms=2500)
            gap = cert.sub(quad.estimate, ser)
            with mp.workprec(cert.working_prec(PREC)):
                ok = ok and abs(gap.value) <= gap.abs_error
            points += 1
    assert points == 20
    # reduction identity for F(t) = t^j, j = 0..8, to 1e-30 relative
    for j in range(9):
        two_d = quad_unit_square(lambda t, j=j: t**j, 128, max_level=6)

        def f(z, omz, j=j):
            return z**j * (-mp.log(z))

        one_d = quad_unit_1d(f, 128)
        ok = ok and two_d.converged and one_d.converged
        with mp.workprec(cert.working_prec(128)):
            diff = abs(two_d.estimate.value - one_d.estimate.value)
            combined = two_d.estimate.abs_error + one_d.estimate.abs_error
            ok = ok and diff <= combined
            ok = ok and (diff + combined) / abs(one_d.estimate.value) <= REL_TOL
    _line(8, ok, "20-point oracle grid within summed bounds; reduction identity j=0..8 to 1e-30 rel")


def test_criterion_9_diophantine_property():
    count, mismatches = random_diophantine_sweep(200, seed=20260810, n_cap=15, b_cap=50)
    ok = count == 200 and not mismatches
    _line(9, ok, f"200 seeded random cases vs brute force; mismatches: {mismatches}")


def test_criterion_10_lcm_structure():
    incremental = lcm_table(10_000)
    direct = lcm_table_direct(10_000)
    ok = incremental.values == direct.values
    for n in range(1, 10_000):
        ratio = incremental.d(n + 1) // incremental.d(n)
        pp = is_prime_power(n + 1)
        if pp is None:
            ok = ok and ratio == 1
        else:
            ok = ok and ratio == pp.p and incremental.d(n + 1) == pp.p * incremental.d(n)
        if not ok:
            break
    _line(10, ok, "incremental d_n equals direct fold for n <= 10000 with the case dichotomy")


def test_criterion_11_audit_determinism_and_coverage():
    argv = ["audit", "--rational", "83/80", "--m", "2", "--n-max", "20", "--format", "json"]

    def run():
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = cli.main(argv)
        return code, buf.getvalue().encode("utf-8")

    code1, out1 = run()
    code2, out2 = run()
    ok = code1 == 0 and code2 == 0 and out1 == out2
    doc = json.loads(out1.decode("utf-8"))
    seen = {r["claim"] for r in doc["rows"]}
    missing = [k for k in in_scope_keys(2) if k not in seen]
    ok = ok and not missing
    _line(11, ok, f"audit run twice byte-identical ({len(out1)} bytes); missing keys: {missing}")
