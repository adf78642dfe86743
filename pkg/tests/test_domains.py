import numpy as np
import pytest

from bergman.albert import adiag
from bergman.domains import DomainSpec, catalog, invariants, parse_domain
from bergman.elements import (
    batch_membership,
    coords_from_element,
    element_from_coords,
    frame_element,
    generic_min_poly_coeffs,
    generic_norm,
    linear_isometry,
    membership,
    membership_by_inequalities,
    n_coords,
    sample_box,
    sample_box_coords,
    zero_element,
    _faddeev_leverrier,
    _min_poly_II,
)
from bergman.errors import InvalidParams, WrongArity
from bergman.octonion import oconj, omul, onorm


def test_invariants_examples():
    inv = invariants(DomainSpec("I", (2, 3)))
    assert (inv.r, inv.a, inv.b, inv.g, inv.n) == (2, 2, 1, 5, 6)
    inv = invariants(DomainSpec("IV", (5,)))
    assert (inv.r, inv.a, inv.b, inv.g, inv.n) == (2, 3, 0, 5, 5)
    inv = invariants(DomainSpec("VI"))
    assert (inv.r, inv.a, inv.b, inv.g, inv.n) == (3, 8, 0, 18, 27)
    inv = invariants(DomainSpec("V"))
    assert (inv.r, inv.a, inv.b, inv.g, inv.n) == (2, 6, 4, 12, 16)
    assert not invariants(DomainSpec("V")).tube_type
    assert invariants(DomainSpec("III", (3,))).tube_type


def test_invalid_params():
    with pytest.raises(InvalidParams):
        DomainSpec("IV", (2,))
    with pytest.raises(InvalidParams):
        DomainSpec("I", (3, 2))
    with pytest.raises(InvalidParams):
        DomainSpec("II", (1,))
    with pytest.raises(InvalidParams):
        DomainSpec("V", (3,))
    with pytest.raises(InvalidParams):
        parse_domain("VII")
    with pytest.raises(InvalidParams):
        parse_domain("I:a,b")


def test_parse_roundtrip():
    for text in ("I:2,3", "II:4", "III:2", "IV:5", "V", "VI"):
        assert str(parse_domain(text)) == text


def test_dimension_genus_identities():
    for spec in catalog():
        inv = invariants(spec)
        assert inv.n == inv.r * (1 + inv.b) + inv.r * (inv.r - 1) * inv.a // 2
        assert inv.g == 2 + inv.a * (inv.r - 1) + inv.b
        assert inv.n == n_coords(spec)
        assert inv.a >= 0 and inv.b >= 0 and inv.r >= 1


def test_iv1_degenerate_member():
    spec = DomainSpec("IV", (1,))
    inv = invariants(spec)
    assert (inv.r, inv.a, inv.n, inv.g) == (2, -1, 1, 1)
    # dimension identity still holds with the negative multiplicity
    assert inv.n == inv.r * (1 + inv.b) + inv.r * (inv.r - 1) * inv.a // 2
    x = np.array([0.5 + 0j])
    assert abs(generic_norm(spec, x, x) - 0.5625) < 1e-15  # (1-1/4)^2
    assert membership(spec, x)
    with pytest.raises(InvalidParams):
        frame_element(spec, [0.3, 0.2])


def test_generic_norm_examples():
    disc = DomainSpec("I", (1, 1))
    assert abs(generic_norm(disc, [[0.5]], [[0.5]]) - 0.75) < 1e-15
    iv3 = DomainSpec("IV", (3,))
    x = np.array([0.5, 0, 0], dtype=complex)
    assert abs(generic_norm(iv3, x, x) - 0.5625) < 1e-15
    # cross-check: both squared singular values are 0.25
    m1, m2 = generic_min_poly_coeffs(iv3, x)
    assert abs(m1 - 0.5) < 1e-14 and abs(m2 - 0.0625) < 1e-14
    i22 = DomainSpec("I", (2, 2))
    x = np.diag([0.5, 0.3]).astype(complex)
    assert abs(generic_norm(i22, x, x) - 0.6825) < 1e-14


def test_norm_at_zero_is_one():
    for spec in catalog():
        z = zero_element(spec)
        assert abs(generic_norm(spec, z, z) - 1.0) < 1e-14


def test_min_poly_examples():
    disc = DomainSpec("I", (1, 1))
    assert generic_min_poly_coeffs(disc, [[0.6]]) == pytest.approx((0.36,))
    iii2 = DomainSpec("III", (2,))
    got = generic_min_poly_coeffs(iii2, np.diag([0.5, 0.3]).astype(complex))
    assert got == pytest.approx((0.34, 0.0225))
    lam = np.array([0.8, 0.5, 0.2])
    got = generic_min_poly_coeffs(DomainSpec("VI"), adiag(lam))
    mu = lam**2
    want = (mu.sum(), mu[0] * mu[1] + mu[0] * mu[2] + mu[1] * mu[2], mu.prod())
    assert got == pytest.approx(want, rel=1e-13)


def test_membership_examples():
    disc = DomainSpec("I", (1, 1))
    assert membership(disc, [[0.5]])
    assert not membership(disc, [[1.0]])  # boundary is outside
    assert not membership(DomainSpec("IV", (3,)), np.array([0.8, 0.8, 0.0]))
    assert membership(DomainSpec("VI"), adiag([0.9, 0.5, 0.1]))
    # the derivative-inequality route gives the same answers
    assert membership_by_inequalities(disc, [[0.5]])
    assert not membership_by_inequalities(DomainSpec("IV", (3,)), np.array([0.8, 0.8, 0.0]))
    assert membership_by_inequalities(DomainSpec("VI"), adiag([0.9, 0.5, 0.1]))


def test_membership_agreement_on_box_samples():
    rng = np.random.default_rng(20240809)
    for spec in catalog():
        coords = sample_box_coords(spec, rng, 10_000)
        typed = batch_membership(spec, coords, "typed")
        ineq = batch_membership(spec, coords, "inequalities")
        assert np.array_equal(typed, ineq), str(spec)


def test_frame_examples():
    for spec in catalog():
        r = invariants(spec).r
        z = frame_element(spec, np.zeros(r))
        assert abs(generic_norm(spec, z, z) - 1.0) < 1e-15
    iii2 = DomainSpec("III", (2,))
    x = frame_element(iii2, [0.5, 0.3])
    assert abs(generic_norm(iii2, x, x) - 0.6825) < 1e-14
    iv4 = DomainSpec("IV", (4,))
    x = frame_element(iv4, [0.7, 0.2])
    assert abs(generic_norm(iv4, x, x) - 0.4896) < 1e-14


def test_frame_spectral_identity():
    rng = np.random.default_rng(77)
    for spec in catalog():
        r = invariants(spec).r
        for _ in range(5):
            lam = rng.uniform(0.02, 0.98, size=r)
            x = frame_element(spec, lam)
            want = np.prod(1 - lam**2)
            got = generic_norm(spec, x, x).real
            assert abs(got - want) <= 1e-12 * abs(want), str(spec)
            assert membership(spec, x)
        out = lam.copy()
        out[0] = 1.5
        assert not membership(spec, frame_element(spec, out))


def test_frame_wrong_arity():
    with pytest.raises(WrongArity):
        frame_element(DomainSpec("I", (2, 2)), [0.5])
    with pytest.raises(WrongArity):
        frame_element(DomainSpec("VI"), [0.5, 0.5])


def test_hermitian_symmetry():
    rng = np.random.default_rng(13)
    for spec in [
        DomainSpec("I", (2, 3)),
        DomainSpec("III", (3,)),
        DomainSpec("IV", (4,)),
        DomainSpec("V"),
        DomainSpec("VI"),
    ]:
        for _ in range(20):
            x = sample_box(spec, rng)
            y = sample_box(spec, rng)
            nxy = generic_norm(spec, x, y)
            nyx = generic_norm(spec, y, x)
            assert abs(nxy - np.conj(nyx)) <= 1e-12 * max(1.0, abs(nxy)), str(spec)


def test_octonion_laws():
    rng = np.random.default_rng(5)
    u = rng.normal(size=(1000, 8)) + 1j * rng.normal(size=(1000, 8))
    v = rng.normal(size=(1000, 8)) + 1j * rng.normal(size=(1000, 8))
    scale = 1e-12 * np.maximum(1.0, np.abs(onorm(u) * onorm(v)))
    # alternativity
    assert np.abs(omul(u, omul(u, v)) - omul(omul(u, u), v)).max() < 1e-11
    assert np.abs(omul(omul(v, u), u) - omul(v, omul(u, u))).max() < 1e-11
    # anti-involution
    assert np.abs(oconj(omul(u, v)) - omul(oconj(v), oconj(u))).max() < 1e-12
    # norm composition
    assert (np.abs(onorm(omul(u, v)) - onorm(u) * onorm(v)) < scale).all()


def test_type_ii_square_consistency():
    rng = np.random.default_rng(8)
    for n in (4, 5, 6):
        spec = DomainSpec("II", (n,))
        p = n // 2
        for _ in range(10):
            x = element_from_coords(spec, sample_box_coords(spec, rng, 1))[0]
            m = _min_poly_II(x, x)
            q = _faddeev_leverrier(-(x @ np.conj(x)))
            sq = np.convolve(m, m)
            if n % 2 == 1:
                sq = np.append(sq, 0.0)
            assert np.abs(sq - q).max() < 1e-10 * max(1.0, np.abs(q).max())
            # diagonal values are real and match the eigenvalue route
            mu = generic_min_poly_coeffs(spec, x)
            assert np.abs(np.array(mu) - np.array([(-1) ** (i + 1) * m[i + 1] for i in range(p)]).real).max() < 1e-9


def test_linear_isometries_preserve_norm():
    rng = np.random.default_rng(21)
    for spec in [
        DomainSpec("I", (2, 2)),
        DomainSpec("II", (4,)),
        DomainSpec("III", (3,)),
        DomainSpec("IV", (3,)),
        DomainSpec("V"),
        DomainSpec("VI"),
    ]:
        for _ in range(100):
            phi = linear_isometry(spec, rng)
            x = sample_box(spec, rng)
            n0 = generic_norm(spec, x, x).real
            n1 = generic_norm(spec, phi(x), phi(x)).real
            assert abs(n1 - n0) <= 1e-12 * max(1.0, abs(n0)), str(spec)
            assert membership(spec, x) == membership(spec, phi(x))


def test_type_ii_degenerate_input_raises():
    from bergman.errors import NumericalDegeneracy

    spec = DomainSpec("II", (4,))
    bad = element_from_coords(spec, np.full(6, np.nan + 0j))
    with pytest.raises(NumericalDegeneracy):
        generic_norm(spec, bad, bad)


def test_identity_isometry_trivially_ok():
    spec = DomainSpec("IV", (3,))
    x = np.array([0.1, 0.2, 0.3], dtype=complex)
    n0 = generic_norm(spec, x, x)
    assert abs(generic_norm(spec, 1.0 * x, 1.0 * x) - n0) == 0.0


def test_iv_phase_rotation_invariance():
    spec = DomainSpec("IV", (3,))
    x = np.array([0.3, 0.1 - 0.2j, 0.05], dtype=complex)
    n0 = generic_norm(spec, x, x)
    y = 1j * x  # theta = pi/2, O = I
    assert abs(generic_norm(spec, y, y) - n0) < 1e-14


def test_sample_box_structure():
    rng = np.random.default_rng(3)
    x = sample_box(DomainSpec("II", (4,)), rng)
    assert np.abs(x + x.T).max() == 0.0
    x = sample_box(DomainSpec("III", (3,)), rng)
    assert np.abs(x - x.T).max() == 0.0
    x = sample_box(DomainSpec("VI"), rng)
    assert x.diag.shape == (3,) and x.off.shape == (3, 8)
    for spec in catalog():
        c = sample_box_coords(spec, rng, 64)
        assert c.shape == (64, n_coords(spec))
        assert np.abs(c.real).max() <= 1.0 and np.abs(c.imag).max() <= 1.0


def test_coords_roundtrip():
    rng = np.random.default_rng(4)
    for spec in catalog():
        c = sample_box_coords(spec, rng, 3)
        back = coords_from_element(spec, element_from_coords(spec, c))
        assert np.abs(back - c).max() == 0.0
