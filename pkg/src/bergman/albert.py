"""The complexified Albert algebra: 3x3 octonion matrices Hermitian under
Cayley conjugation.

An element is stored by its free coordinates: three complex diagonal entries
``diag`` and three octonion off-diagonal slots ``off`` (slot ``i`` sits at
matrix position ``(i+1, i+2)`` cyclically, its Cayley conjugate fills the
mirror position).  That is 3 + 3*8 = 27 complex coordinates.

The three fundamental forms are the Hermitian trace pairing ``pair``, the
adjoint ``sharp`` (so that sharp(sharp(x)) = det(x) x) and the cubic
determinant ``det``.  All functions broadcast over leading axes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .octonion import oconj, omul, onorm, opair


@dataclass(frozen=True, eq=False)
class AlbertElement:
    """diag: (..., 3) complex; off: (..., 3, 8) complex octonion slots."""

    diag: np.ndarray
    off: np.ndarray

    def __post_init__(self):
        diag = np.asarray(self.diag, dtype=complex)
        off = np.asarray(self.off, dtype=complex)
        if diag.shape[-1] != 3 or off.shape[-2:] != (3, 8):
            raise ValueError("Albert element needs diag (...,3) and off (...,3,8)")
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "off", off)


def azero(batch_shape: tuple = ()) -> AlbertElement:
    return AlbertElement(
        np.zeros(batch_shape + (3,), dtype=complex),
        np.zeros(batch_shape + (3, 8), dtype=complex),
    )


def adiag(values) -> AlbertElement:
    """Diagonal element diag(v1, v2, v3)."""
    d = np.asarray(values, dtype=complex)
    return AlbertElement(d, np.zeros(d.shape + (8,), dtype=complex))


def apair(x: AlbertElement, y: AlbertElement) -> np.ndarray:
    """Hermitian trace pairing; off-diagonal slots count twice."""
    dterm = (x.diag * np.conj(y.diag)).sum(axis=-1)
    oterm = opair(x.off, y.off).sum(axis=-1)
    return dterm + 2 * oterm


def asharp(x: AlbertElement) -> AlbertElement:
    """Adjoint, satisfying sharp(sharp(x)) = det(x) x.

    Componentwise from a# = a^2 - tr(a) a + sigma(a) I: the diagonal is
    d_j d_k - n(x_i) and slot i is conj(x_j x_k) - d_i x_i (cyclic i,j,k)."""
    d, off = x.diag, x.off
    sd = np.empty_like(d)
    so = np.empty_like(off)
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        sd[..., i] = d[..., j] * d[..., k] - onorm(off[..., i, :])
        so[..., i, :] = oconj(omul(off[..., j, :], off[..., k, :])) - d[
            ..., i, None
        ] * off[..., i, :]
    return AlbertElement(sd, so)


def adet(x: AlbertElement) -> np.ndarray:
    """Cubic determinant (Freudenthal form)."""
    d, off = x.diag, x.off
    dd = d[..., 0] * d[..., 1] * d[..., 2]
    mixed = (d * onorm(off)).sum(axis=-1)
    triple = omul(omul(off[..., 0, :], off[..., 1, :]), off[..., 2, :])
    return dd - mixed + 2 * triple[..., 0]


def amin_poly(x: AlbertElement, y: AlbertElement) -> tuple:
    """Coefficients (m1, m2, m3) of the rank-3 generic minimal polynomial
    T^3 - m1 T^2 + m2 T - m3 at the sesquilinear pair (x, y)."""
    m1 = apair(x, y)
    m2 = apair(asharp(x), asharp(y))
    m3 = adet(x) * np.conj(adet(y))
    return m1, m2, m3


def embed_pair(a2: np.ndarray, a3: np.ndarray) -> AlbertElement:
    """Embed a pair of octonions into slots 2 and 3 (slot 1 and diagonal zero).

    This is the 16-dimensional subspace underlying the exceptional domain of
    dimension 16.
    """
    a2 = np.asarray(a2, dtype=complex)
    a3 = np.asarray(a3, dtype=complex)
    batch = a2.shape[:-1]
    off = np.zeros(batch + (3, 8), dtype=complex)
    off[..., 1, :] = a2
    off[..., 2, :] = a3
    return AlbertElement(np.zeros(batch + (3,), dtype=complex), off)
