"""Points of the six ambient spaces: construction, generic norms and minimal
polynomials, domain membership, frames, box sampling and linear isometries.

Element representations by kind:

* ``I``   -- complex ``(m, n)`` matrix;
* ``II``  -- complex ``(n, n)`` alternating matrix (``x.T == -x``);
* ``III`` -- complex ``(n, n)`` symmetric matrix;
* ``IV``  -- complex ``(n,)`` vector;
* ``V``   -- complex ``(2, 8)`` array, a pair of complexified octonions;
* ``VI``  -- :class:`~bergman.albert.AlbertElement`.

Every element also has a flat complex coordinate vector of length ``n`` (the
complex dimension): the free entries in a fixed order.  Batch helpers operate
on stacked coordinate arrays of shape ``(batch, n)`` and are what the Monte
Carlo oracles use.
"""

from __future__ import annotations

import math

import numpy as np

from .albert import AlbertElement, amin_poly, apair, asharp, embed_pair
from .domains import DomainSpec, invariants
from .errors import InvalidParams, NumericalDegeneracy, WrongArity

_SYM_TOL = 1e-12


# ---------------------------------------------------------------------------
# coordinate codecs


def n_coords(spec: DomainSpec) -> int:
    return invariants(spec).n


def coord_weights(spec: DomainSpec) -> np.ndarray:
    """Weights w_i of the inner product m1(x,x) = sum w_i |x_i|^2 in flat
    coordinates.  They enter the normalisation of the volume form."""
    if spec.kind == "I":
        return np.ones(n_coords(spec))
    if spec.kind == "II":
        return np.ones(n_coords(spec))
    if spec.kind == "III":
        (n,) = spec.params
        w = []
        for i in range(n):
            for j in range(i, n):
                w.append(1.0 if i == j else 2.0)
        return np.array(w)
    if spec.kind == "IV":
        return 2.0 * np.ones(n_coords(spec))
    if spec.kind == "V":
        return 2.0 * np.ones(16)
    return np.concatenate([np.ones(3), 2.0 * np.ones(24)])


def element_from_coords(spec: DomainSpec, coords: np.ndarray):
    """Build an element (or a batch of them) from flat coordinates."""
    c = np.asarray(coords, dtype=complex)
    if c.shape[-1] != n_coords(spec):
        raise InvalidParams(
            f"{spec} needs {n_coords(spec)} complex coordinates, got {c.shape[-1]}"
        )
    batch = c.shape[:-1]
    if spec.kind == "I":
        m, n = spec.params
        return c.reshape(batch + (m, n))
    if spec.kind == "II":
        (n,) = spec.params
        x = np.zeros(batch + (n, n), dtype=complex)
        k = 0
        for i in range(n):
            for j in range(i + 1, n):
                x[..., i, j] = c[..., k]
                x[..., j, i] = -c[..., k]
                k += 1
        return x
    if spec.kind == "III":
        (n,) = spec.params
        x = np.zeros(batch + (n, n), dtype=complex)
        k = 0
        for i in range(n):
            for j in range(i, n):
                x[..., i, j] = c[..., k]
                x[..., j, i] = c[..., k]
                k += 1
        return x
    if spec.kind == "IV":
        return c
    if spec.kind == "V":
        return c.reshape(batch + (2, 8))
    return AlbertElement(c[..., :3], c[..., 3:].reshape(batch + (3, 8)))


def coords_from_element(spec: DomainSpec, x) -> np.ndarray:
    x = validate_element(spec, x)
    if spec.kind == "I":
        return x.reshape(x.shape[:-2] + (-1,))
    if spec.kind == "II":
        (n,) = spec.params
        idx = [(i, j) for i in range(n) for j in range(i + 1, n)]
        return np.stack([x[..., i, j] for i, j in idx], axis=-1)
    if spec.kind == "III":
        (n,) = spec.params
        idx = [(i, j) for i in range(n) for j in range(i, n)]
        return np.stack([x[..., i, j] for i, j in idx], axis=-1)
    if spec.kind == "IV":
        return x
    if spec.kind == "V":
        return x.reshape(x.shape[:-2] + (16,))
    return np.concatenate(
        [x.diag, x.off.reshape(x.off.shape[:-2] + (24,))], axis=-1
    )


def zero_element(spec: DomainSpec):
    return element_from_coords(spec, np.zeros(n_coords(spec), dtype=complex))


def validate_element(spec: DomainSpec, x):
    """Coerce to the canonical representation, checking shape and symmetry."""
    if spec.kind == "VI":
        if not isinstance(x, AlbertElement):
            raise InvalidParams("type VI elements must be AlbertElement values")
        return x
    x = np.asarray(x, dtype=complex)
    if spec.kind == "I":
        m, n = spec.params
        if x.shape[-2:] != (m, n):
            raise InvalidParams(f"type I element must have shape ({m},{n})")
    elif spec.kind in ("II", "III"):
        (n,) = spec.params
        if x.shape[-2:] != (n, n):
            raise InvalidParams(f"type {spec.kind} element must have shape ({n},{n})")
        sign = -1.0 if spec.kind == "II" else 1.0
        scale = max(1.0, float(np.abs(x).max(initial=0.0)))
        if np.abs(x.swapaxes(-1, -2) - sign * x).max(initial=0.0) > _SYM_TOL * scale:
            word = "alternating" if spec.kind == "II" else "symmetric"
            raise InvalidParams(f"type {spec.kind} element must be {word}")
    elif spec.kind == "IV":
        (n,) = spec.params
        if x.shape[-1:] != (n,):
            raise InvalidParams(f"type IV element must have shape ({n},)")
    else:  # V
        if x.shape[-2:] != (2, 8):
            raise InvalidParams("type V element must have shape (2,8)")
    return x


# ---------------------------------------------------------------------------
# generic norm and minimal polynomial


def _faddeev_leverrier(a: np.ndarray) -> np.ndarray:
    """Descending coefficients of det(T I - a) for a square complex matrix."""
    n = a.shape[0]
    coeffs = [1.0 + 0j]
    m = np.eye(n, dtype=complex)
    for k in range(1, n + 1):
        am = a @ m
        ck = -np.trace(am) / k
        coeffs.append(ck)
        m = am + ck * np.eye(n, dtype=complex)
    return np.array(coeffs)


def _poly_sqrt(q: np.ndarray, p: int) -> np.ndarray:
    """Monic degree-p square root of a monic degree-2p polynomial (descending
    coefficients).  Solved top-down; the unused low-order coefficients of q
    serve as a consistency residual."""
    m = np.zeros(p + 1, dtype=complex)
    m[0] = 1.0
    for i in range(1, p + 1):
        acc = q[i] - sum(m[l] * m[i - l] for l in range(1, i))
        m[i] = acc / 2.0
    check = np.convolve(m, m)
    scale = max(1.0, float(np.abs(q).max()))
    if not np.abs(check - q).max() <= 1e-8 * scale:
        raise NumericalDegeneracy("even characteristic polynomial is not a square")
    return m


def _min_poly_II(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Descending coefficients of m(T,x,y) for alternating matrices, from the
    square root of det(T I + x conj(y))."""
    n = x.shape[0]
    p = n // 2
    q = _faddeev_leverrier(-(x @ np.conj(y)))
    if not np.isfinite(q).all():
        raise NumericalDegeneracy("non-finite characteristic polynomial coefficients")
    if n % 2 == 1:
        scale = max(1.0, float(np.abs(q).max()))
        if abs(q[-1]) > 1e-8 * scale:
            raise NumericalDegeneracy("odd-size characteristic polynomial lacks its T factor")
        q = q[:-1]
    return _poly_sqrt(q, p)


def _quad_q(x: np.ndarray) -> np.ndarray:
    return (x * x).sum(axis=-1)


def generic_norm(spec: DomainSpec, x, y) -> complex:
    """Generic norm N(x, y) = m(1, x, y); N(0,0) = 1, N(x,y) = conj(N(y,x))."""
    x = validate_element(spec, x)
    y = validate_element(spec, y)
    if spec.kind == "I":
        m = spec.params[0]
        return complex(np.linalg.det(np.eye(m) - x @ np.conj(y).T))
    if spec.kind == "II":
        return complex(_min_poly_II(x, y).sum())
    if spec.kind == "III":
        n = spec.params[0]
        return complex(np.linalg.det(np.eye(n) - x @ np.conj(y)))
    if spec.kind == "IV":
        return complex(1 - 2 * (x * np.conj(y)).sum() + _quad_q(x) * np.conj(_quad_q(y)))
    if spec.kind == "V":
        xe = embed_pair(x[0], x[1])
        ye = embed_pair(y[0], y[1])
        m1 = apair(xe, ye)
        m2 = apair(asharp(xe), asharp(ye))
        return complex(1 - m1 + m2)
    m1, m2, m3 = amin_poly(x, y)
    return complex(1 - m1 + m2 - m3)


def _pair_eigs(eig_desc: np.ndarray, p: int) -> np.ndarray:
    """Representatives of doubled singular values of an alternating matrix."""
    return eig_desc[..., 0::2][..., :p]


def _squared_singulars(spec: DomainSpec, x) -> np.ndarray:
    """Eigenvalue-route squared singular values on the diagonal (x against x)."""
    if spec.kind == "I":
        gram = x @ np.conj(x).swapaxes(-1, -2)
        return np.linalg.eigvalsh(gram)[..., ::-1]
    if spec.kind == "II":
        p = spec.params[0] // 2
        gram = x @ np.conj(x).swapaxes(-1, -2)
        eig = np.linalg.eigvalsh(gram)[..., ::-1]
        return _pair_eigs(eig, p)
    if spec.kind == "III":
        return np.linalg.eigvalsh(x @ np.conj(x))[..., ::-1]
    raise InvalidParams(f"no eigenvalue route for kind {spec.kind}")


def generic_min_poly_coeffs(spec: DomainSpec, x) -> tuple:
    """Coefficients (m_1, ..., m_r) of m(T,x,x) = T^r - m_1 T^{r-1} + ...;
    for regular x these are the elementary symmetric functions of the squared
    singular values."""
    x = validate_element(spec, x)
    if spec.kind in ("I", "II", "III"):
        mu = _squared_singulars(spec, x)
        coeffs = _elem_sym(np.atleast_2d(mu))[0]
        return tuple(float(c) for c in coeffs[1:])
    if spec.kind == "IV":
        m1 = 2 * float((x * np.conj(x)).sum().real)
        m2 = float(abs(_quad_q(x)) ** 2)
        return (m1, m2)
    if spec.kind == "V":
        xe = embed_pair(x[0], x[1])
        return (float(apair(xe, xe).real), float(apair(asharp(xe), asharp(xe)).real))
    m1, m2, m3 = amin_poly(x, x)
    return (float(m1.real), float(m2.real), float(m3.real))


def _elem_sym(values: np.ndarray) -> np.ndarray:
    """Elementary symmetric functions e_0..e_r of each row, shape (B, r+1)."""
    b, r = values.shape
    out = np.zeros((b, r + 1))
    out[:, 0] = 1.0
    for i in range(r):
        v = values[:, i].real
        out[:, 1 : i + 2] = out[:, 1 : i + 2] + v[:, None] * out[:, 0 : i + 1].copy()
    return out


# ---------------------------------------------------------------------------
# membership


def _min_poly_batch(spec: DomainSpec, coords: np.ndarray) -> np.ndarray:
    """Batched (m_1, ..., m_r) on the diagonal, shape (B, r)."""
    x = element_from_coords(spec, coords)
    if spec.kind in ("I", "II", "III"):
        mu = _squared_singulars(spec, x)
        return _elem_sym(mu)[:, 1:]
    if spec.kind == "IV":
        m1 = 2 * (coords * np.conj(coords)).sum(axis=-1).real
        m2 = np.abs(_quad_q(x)) ** 2
        return np.stack([m1, m2], axis=-1)
    if spec.kind == "V":
        xe = embed_pair(x[..., 0, :], x[..., 1, :])
        m1 = apair(xe, xe).real
        m2 = apair(asharp(xe), asharp(xe)).real
        return np.stack([m1, m2], axis=-1)
    m1, m2, m3 = amin_poly(x, x)
    return np.stack([m1.real, m2.real, m3.real], axis=-1)


def _derivative_conditions(spec: DomainSpec, coords: np.ndarray) -> np.ndarray:
    """Membership via the derivative inequalities of the minimal polynomial
    at T = 1: with m(T,x,x) = prod (T - mu_i), demand that every elementary
    symmetric function of (1 - mu_i) is positive."""
    r = invariants(spec).r
    if spec.kind in ("I", "II", "III"):
        mu = _squared_singulars(spec, element_from_coords(spec, coords))
        es = _elem_sym(1.0 - mu)
        return np.all(es[:, 1:] > 0, axis=1)
    m = _min_poly_batch(spec, coords)
    if r == 2:
        c0 = 1 - m[:, 0] + m[:, 1]
        c1 = 2 - m[:, 0]
        return (c0 > 0) & (c1 > 0)
    c0 = 1 - m[:, 0] + m[:, 1] - m[:, 2]
    c1 = 3 - 2 * m[:, 0] + m[:, 1]
    c2 = 3 - m[:, 0]
    return (c0 > 0) & (c1 > 0) & (c2 > 0)


def _typed_conditions(spec: DomainSpec, coords: np.ndarray) -> np.ndarray:
    """Membership via the per-kind definiteness / inequality rules."""
    x = element_from_coords(spec, coords)
    if spec.kind in ("I", "II", "III"):
        if spec.kind == "III":
            gram = x @ np.conj(x)
        else:
            gram = x @ np.conj(x).swapaxes(-1, -2)
        eig = np.linalg.eigvalsh(gram)
        return eig[..., -1] < 1
    if spec.kind == "IV":
        m1 = 2 * (coords * np.conj(coords)).sum(axis=-1).real
        m2 = np.abs(_quad_q(x)) ** 2
        return (1 - m1 + m2 > 0) & (2 - m1 > 0)
    if spec.kind == "V":
        xe = embed_pair(x[..., 0, :], x[..., 1, :])
        m1 = apair(xe, xe).real
        m2 = apair(asharp(xe), asharp(xe)).real
        return (1 - m1 + m2 > 0) & (2 - m1 > 0)
    m1, m2, m3 = amin_poly(x, x)
    m1, m2, m3 = m1.real, m2.real, m3.real
    return (1 - m1 + m2 - m3 > 0) & (3 - 2 * m1 + m2 > 0) & (3 - m1 > 0)


def membership(spec: DomainSpec, x) -> bool:
    """Strict domain membership (boundary points are outside)."""
    coords = np.atleast_2d(coords_from_element(spec, x))
    return bool(_typed_conditions(spec, coords)[0])


def membership_by_inequalities(spec: DomainSpec, x) -> bool:
    """Membership from the derivative inequalities of m(T,x,x) at T = 1."""
    coords = np.atleast_2d(coords_from_element(spec, x))
    return bool(_derivative_conditions(spec, coords)[0])


def batch_membership(spec: DomainSpec, coords: np.ndarray, route: str = "typed"):
    if route == "typed":
        return _typed_conditions(spec, coords)
    if route == "inequalities":
        return _derivative_conditions(spec, coords)
    raise InvalidParams(f"unknown membership route {route!r}")


def batch_norm_membership(spec: DomainSpec, coords: np.ndarray):
    """(N(x,x), member) for a batch of flat coordinates, shape (B, n)."""
    x = element_from_coords(spec, coords)
    if spec.kind in ("I", "III"):
        if spec.kind == "III":
            gram = x @ np.conj(x)
        else:
            gram = x @ np.conj(x).swapaxes(-1, -2)
        eig = np.linalg.eigvalsh(gram)
        return np.prod(1 - eig, axis=-1), eig[..., -1] < 1
    if spec.kind == "II":
        p = spec.params[0] // 2
        gram = x @ np.conj(x).swapaxes(-1, -2)
        eig = np.linalg.eigvalsh(gram)
        reps = _pair_eigs(eig[..., ::-1], p)
        return np.prod(1 - reps, axis=-1), eig[..., -1] < 1
    if spec.kind == "IV":
        m1 = 2 * (coords * np.conj(coords)).sum(axis=-1).real
        m2 = np.abs(_quad_q(x)) ** 2
        return 1 - m1 + m2, (1 - m1 + m2 > 0) & (2 - m1 > 0)
    if spec.kind == "V":
        xe = embed_pair(x[..., 0, :], x[..., 1, :])
        m1 = apair(xe, xe).real
        m2 = apair(asharp(xe), asharp(xe)).real
        return 1 - m1 + m2, (1 - m1 + m2 > 0) & (2 - m1 > 0)
    m1, m2, m3 = amin_poly(x, x)
    m1, m2, m3 = m1.real, m2.real, m3.real
    n = 1 - m1 + m2 - m3
    return n, (n > 0) & (3 - 2 * m1 + m2 > 0) & (3 - m1 > 0)


# ---------------------------------------------------------------------------
# frames and sampling


def frame_element(spec: DomainSpec, lambdas):
    """Element with spectral decomposition sum(lambda_j c_j) for a fixed frame
    (c_1, ..., c_r); then N(x,x) = prod(1 - lambda_j^2)."""
    inv = invariants(spec)
    lam = np.asarray(lambdas, dtype=float)
    if lam.shape != (inv.r,):
        raise WrongArity(f"{spec} has rank {inv.r}, got {lam.shape} lambdas")
    if spec.kind == "I":
        m, n = spec.params
        x = np.zeros((m, n), dtype=complex)
        x[np.arange(m), np.arange(m)] = lam
        return x
    if spec.kind == "II":
        (n,) = spec.params
        x = np.zeros((n, n), dtype=complex)
        for j, v in enumerate(lam):
            x[2 * j, 2 * j + 1] = v
            x[2 * j + 1, 2 * j] = -v
        return x
    if spec.kind == "III":
        return np.diag(lam).astype(complex)
    if spec.kind == "IV":
        (n,) = spec.params
        if n < 2:
            raise InvalidParams("IV:1 is degenerate and has no rank-2 frame")
        x = np.zeros(n, dtype=complex)
        x[0] = (lam[0] + lam[1]) / 2
        x[1] = 1j * (lam[0] - lam[1]) / 2
        return x
    if spec.kind == "V":
        # two null-octonion idempotents (e0 +- i e1)/2 in the second slot
        x = np.zeros((2, 8), dtype=complex)
        x[1, 0] = (lam[0] + lam[1]) / 2
        x[1, 1] = 1j * (lam[0] - lam[1]) / 2
        return x
    return AlbertElement(lam.astype(complex), np.zeros((3, 8), dtype=complex))


def sample_box_coords(
    spec: DomainSpec, rng: np.random.Generator, size: int
) -> np.ndarray:
    """Uniform flat coordinates in the per-coordinate square [-1,1]^2; the
    domain is contained in this box (spectral norm < 1 bounds every
    coordinate)."""
    n = n_coords(spec)
    parts = rng.uniform(-1.0, 1.0, size=(size, n, 2))
    return parts[..., 0] + 1j * parts[..., 1]


def sample_box(spec: DomainSpec, rng: np.random.Generator):
    """One uniform sample from the bounding box (see sample_box_coords)."""
    return element_from_coords(spec, sample_box_coords(spec, rng, 1)[0])


# ---------------------------------------------------------------------------
# linear isometries


def _haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def _haar_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * np.sign(np.diagonal(r))


def linear_isometry(spec: DomainSpec, rng: np.random.Generator):
    """A random linear automorphism fixing 0; preserves membership and the
    generic norm on the diagonal.  For the exceptional kinds only coordinate
    torus phases are exposed."""
    if spec.kind == "I":
        m, n = spec.params
        u = _haar_unitary(m, rng)
        v = _haar_unitary(n, rng)
        return lambda x: u @ x @ v
    if spec.kind in ("II", "III"):
        (n,) = spec.params
        u = _haar_unitary(n, rng)
        return lambda x: u @ x @ u.T
    if spec.kind == "IV":
        (n,) = spec.params
        phase = np.exp(1j * rng.uniform(0, 2 * math.pi))
        o = _haar_orthogonal(n, rng)
        return lambda x: phase * (o @ x)
    if spec.kind == "V":
        phases = np.exp(1j * rng.uniform(0, 2 * math.pi, size=2))
        return lambda x: x * phases[:, None]
    phases = np.exp(1j * rng.uniform(0, 2 * math.pi, size=3))
    dphase = phases[0] * phases[1] * phases[2] / phases**2

    def apply(x: AlbertElement) -> AlbertElement:
        return AlbertElement(x.diag * dphase, x.off * phases[:, None])

    return apply
