import math
from fractions import Fraction as F

import numpy as np
import pytest

from bergman.domains import DomainSpec
from bergman.elements import frame_element, zero_element
from bergman.errors import InvalidParams, OutsideDomain, VolumeUnknown
from bergman.kernels import (
    KernelTerm,
    e_kernel_core,
    emit,
    eval_e,
    eval_y,
    h_jm,
    inflate,
    kernel_expr,
    mixed_partial,
    parse_expr,
    sum_poly_series,
    y_kernel_core,
)
from bergman.oracle import coeff_e_exact, coeff_y_exact, series_kernel_e
from bergman.ratpoly import RatPoly, chi_poly, pochhammer, poly_eval
from bergman.domains import invariants

DISC = DomainSpec("I", (1, 1))


def _series_value(poly, x, terms=200):
    return sum(float(poly_eval(poly, j)) * x**j for j in range(terms))


def test_sum_poly_series_examples():
    one = sum_poly_series(RatPoly((1,)))
    assert one.terms == (KernelTerm(F(1), F(0), F(0), 0, 1),)
    p = pochhammer(1, 2)  # (j+1)(j+2)
    expr = sum_poly_series(p)
    assert expr.terms == (KernelTerm(F(2), F(0), F(0), 0, 3),)
    assert expr.eval_univariate(0.3) == pytest.approx(_series_value(p, 0.3), rel=1e-12)
    expr = sum_poly_series(RatPoly((0, 1)))  # P(j) = j
    assert expr.terms == (
        KernelTerm(F(-1), F(0), F(0), 0, 1),
        KernelTerm(F(1), F(0), F(0), 0, 2),
    )
    assert expr.eval_univariate(0.3) == pytest.approx(_series_value(RatPoly((0, 1)), 0.3), rel=1e-12)


def test_y_core_disc():
    f = y_kernel_core(DISC, F(1))
    assert emit(f, "text") == "2*(1-X)^-3"
    f = y_kernel_core(DISC, F(2))
    chi = chi_poly(invariants(DISC)).expand()
    half = F(1, 2)
    poly = RatPoly((half, half)) * chi.compose_affine(half, half)
    assert f.eval_univariate(0.4) == pytest.approx(_series_value(poly, 0.4), rel=1e-10)


def test_y_core_iv3():
    spec = DomainSpec("IV", (3,))
    f = y_kernel_core(spec, F(1))
    chi = chi_poly(invariants(spec)).expand()
    poly = RatPoly((1, 1)) * chi.compose_affine(1, 1)
    assert poly.degree == 4
    for x in (0.2, 0.5, 0.7):
        assert f.eval_univariate(x) == pytest.approx(_series_value(poly, x, 400), rel=1e-10)


def test_inflate_disc_to_ball():
    base = kernel_expr(F(1), [KernelTerm(F(1), F(0), F(0), 0, 2)])
    for m in range(1, 6):
        out = inflate(base, m)
        assert out.terms == (KernelTerm(F(1), F(0), F(0), 0, m + 1),)
    assert inflate(base, 1) == base
    f2 = inflate(y_kernel_core(DISC, F(1)), 2)
    assert f2.terms == (KernelTerm(F(3), F(0), F(0), 0, 4),)


def test_h_jm():
    assert h_jm(2, 2, F(1)).terms == (KernelTerm(F(1), F(0), F(0), 0, 1),)
    h = h_jm(3, 2, F(1))  # j - m = 1
    for lam in (0.1, 0.4, 0.7):
        want = 5 * (1 - lam) ** -1 + lam * (1 - lam) ** -2
        assert h.eval_univariate(lam) == pytest.approx(want, rel=1e-12)
    h = h_jm(2, 0, F(2))
    lam = 0.5
    want = sum((0.5 * (p + 1) + 2) * (0.5 * (p + 1) + 3) * lam**p for p in range(300))
    assert h.eval_univariate(lam) == pytest.approx(want, rel=1e-10)
    with pytest.raises(InvalidParams):
        h_jm(1, 2, F(1))


def test_e_core_disc_is_ball_kernel():
    lam = e_kernel_core(DISC, F(1))
    for t1 in np.arange(0.0, 0.45, 0.1):
        for t2 in np.arange(0.0, 0.45, 0.1):
            if t1 + t2 < 1:
                want = 6 * (1 - t1 - t2) ** -4
                assert lam.eval(t1, t2) == pytest.approx(want, rel=1e-10)


def test_e_core_origin_matches_series_coefficient():
    for spec, k in ((DISC, F(1)), (DISC, F(2)), (DomainSpec("IV", (3,)), F(3, 2))):
        lam = e_kernel_core(spec, k)
        assert lam.eval(0.0, 0.0) == pytest.approx(coeff_e_exact(spec, k, 0, 0), rel=1e-12)


def test_e_core_t1_zero_slice_vs_series():
    lam = e_kernel_core(DISC, F(2))
    for t2 in (0.1, 0.3, 0.5):
        want = series_kernel_e(DISC, F(2), 0.0, math.sqrt(t2), truncation=400)
        assert lam.eval(0.0, t2) == pytest.approx(want, rel=1e-9)


def test_mixed_partial_identity_and_chain():
    lam = e_kernel_core(DISC, F(2))
    assert mixed_partial(lam, 1, 1) == lam
    # d/dt2 of (1-lam)^-1 is u^(-1/k) (1-lam)^-2
    base = kernel_expr(F(2), [KernelTerm(F(1), F(0), F(0), 0, 1)])
    out = base.d_dt2()
    assert out.terms == (KernelTerm(F(1), F(0), F(-1), 0, 2),)


def test_mixed_partial_matches_finite_differences():
    rng = np.random.default_rng(42)
    for _ in range(20):
        k = F(rng.integers(1, 4), rng.integers(1, 3))
        terms = [
            KernelTerm(
                F(int(rng.integers(-9, 10)) or 1, int(rng.integers(1, 5))),
                F(int(rng.integers(-5, 1))),
                F(int(rng.integers(-3, 1))),
                int(rng.integers(0, 3)),
                int(rng.integers(0, 4)),
            )
            for _ in range(4)
        ]
        expr = kernel_expr(k, terms)
        t1, t2 = rng.uniform(0.1, 0.4, size=2)
        h = 1e-5
        d1 = expr.d_dt1().eval(t1, t2)
        fd1 = (expr.eval(t1 + h, t2) - expr.eval(t1 - h, t2)) / (2 * h)
        assert d1 == pytest.approx(fd1, rel=1e-6, abs=1e-8)
        d2 = expr.d_dt2().eval(t1, t2)
        fd2 = (expr.eval(t1, t2 + h) - expr.eval(t1, t2 - h)) / (2 * h)
        assert d2 == pytest.approx(fd2, rel=1e-6, abs=1e-8)


def test_term_algebra_closure():
    expr = e_kernel_core(DomainSpec("IV", (3,)), F(3, 2))
    out = mixed_partial(expr, 3, 3)
    keys = set()
    for t in out.terms:
        assert isinstance(t.p, int) and t.p >= 0
        assert isinstance(t.d, int) and t.d >= 0
        assert t.c != 0
        assert t.key() not in keys
        keys.add(t.key())


def test_t2_zero_slice_commutes_with_t1_derivatives():
    # restrict-then-differentiate equals differentiate-then-restrict in t1
    expr = e_kernel_core(DomainSpec("I", (2, 2)), F(2))
    for p in (2, 3):
        derived = mixed_partial(expr, p, 1)
        at0 = derived.eval(0.23, 0.0)
        # independent pure-u reduction of the t2 = 0 restriction
        kap = expr.kappa
        acc = 0.0
        u = 1 - 0.23
        for t in expr.terms:
            if t.p:
                continue
            e = t.e0 + t.e1 * kap
            coef = t.c
            for i in range(p - 1):
                coef *= -(e - i)
            acc += float(coef) * u ** (float(e) - (p - 1))
        assert at0 == pytest.approx(acc, rel=1e-12)


def test_eval_y_examples():
    z0 = zero_element(DISC)
    assert eval_y(DISC, 1, 1, [0], z0, vol=1.0) == pytest.approx(2.0)
    got = eval_y(DISC, 1, 2, [0.3, 0], np.array([[0.4]]), vol=1.0)
    assert got == pytest.approx(3 * 0.75**-4, rel=1e-12)
    with pytest.raises(OutsideDomain):
        eval_y(DISC, 1, 1, [0.9], np.array([[0.8]]), vol=1.0)
    with pytest.raises(VolumeUnknown):
        eval_y(DomainSpec("IV", (3,)), 1, 1, [0.1], zero_element(DomainSpec("IV", (3,))))


def test_eval_e_examples():
    z0 = zero_element(DISC)
    assert eval_e(DISC, 1, 1, 1, [0], [0], z0, vol=1.0) == pytest.approx(6.0)
    got = eval_e(DISC, 1, 1, 1, [0.2], [0.3], np.array([[0.1]]), vol=1.0)
    assert got == pytest.approx(6 * (1 - 0.04 - 0.09 - 0.01) ** -4, rel=1e-12)
    with pytest.raises(OutsideDomain):
        eval_e(DISC, 1, 1, 1, [0.8], [0.7], z0, vol=1.0)


def test_center_values_match_exact_coefficients():
    for spec, k in ((DISC, F(2)), (DomainSpec("IV", (3,)), F(1)), (DomainSpec("I", (2, 2)), F(3, 2))):
        z0 = zero_element(spec)
        got = eval_y(spec, k, 1, [0], z0, vol=1.0)
        assert got == pytest.approx(float(coeff_y_exact(spec, k, 0)), rel=1e-12)
        got = eval_e(spec, k, 1, 1, [0], [0], z0, vol=1.0)
        assert got == pytest.approx(coeff_e_exact(spec, k, 0, 0), rel=1e-12)


def test_positivity_on_interior_points():
    rng = np.random.default_rng(11)
    for spec, k in ((DomainSpec("IV", (3,)), F(3, 2)), (DISC, F(1, 3))):
        z0 = zero_element(spec)
        done = 0
        while done < 1000:
            t1, t2 = rng.uniform(0, 0.9, size=2)
            if t1 + t2 ** float(k) >= 0.95:
                continue
            done += 1
            assert eval_y(spec, k, 1, [math.sqrt(t1)], z0, vol=1.0) > 0
            assert eval_e(spec, k, 1, 1, [math.sqrt(t1)], [math.sqrt(t2)], z0, vol=1.0) > 0


def test_y_kernel_factorizes_through_norm():
    # K_Y depends on Z only through N(Z,Z); equal norms, equal |W| give equal values
    spec = DomainSpec("III", (2,))
    za = frame_element(spec, [0.5, 0.3])
    zb = frame_element(spec, [0.3, 0.5])
    for w in (0.2, 0.5 + 0.1j):
        a = eval_y(spec, F(2), 1, [w], za, vol=1.0)
        b = eval_y(spec, F(2), 1, [abs(w)], zb, vol=1.0)
        assert a == pytest.approx(b, rel=1e-12)


def test_emit_and_parse():
    f = y_kernel_core(DISC, F(1))
    assert emit(f, "text") == "2*(1-X)^-3"
    lam = e_kernel_core(DISC, F(1))
    tex = emit(lam, "latex")
    assert "(1-t_1)" in tex and "\\lambda" in tex
    blob = emit(lam, "json")
    again = emit(parse_expr(blob), "json")
    assert again == blob
    lam2 = e_kernel_core(DomainSpec("IV", (3,)), F(3, 2))
    blob2 = emit(mixed_partial(lam2, 2, 2), "json")
    assert emit(parse_expr(blob2), "json") == blob2


def test_expr_eval_guards():
    lam = e_kernel_core(DISC, F(1))
    with pytest.raises(OutsideDomain):
        lam.eval(1.0, 0.0)
    with pytest.raises(OutsideDomain):
        lam.eval(0.5, 0.6)
    f = y_kernel_core(DISC, F(1))
    with pytest.raises(OutsideDomain):
        f.eval_univariate(1.0)
    with pytest.raises(InvalidParams):
        lam.eval_univariate(0.3)
