"""Complexified octonion arithmetic over a fixed Cayley-Dickson table.

An octonion is an array of 8 complex coordinates over the basis
``e0 = 1, e1, ..., e7``.  The multiplication table is generated once by three
Cayley-Dickson doublings with the convention ``(a,b)(c,d) = (ac - d*b, da + bc*)``
(``*`` = conjugation).  All operations broadcast over leading axes, so batches
of octonions are plain arrays of shape ``(..., 8)``.

Two distinct pairings appear:

* ``onorm(u) = sum_i u_i^2`` -- the complex-bilinear norm form (composes with
  multiplication, ``n(uv) = n(u) n(v)``);
* ``opair(u, v) = sum_i u_i conj(v_i)`` -- the Hermitian coordinate pairing.
"""

from __future__ import annotations

import numpy as np


def _cd_mul(a: list, b: list) -> list:
    n = len(a)
    if n == 1:
        return [a[0] * b[0]]
    h = n // 2
    a1, a2 = a[:h], a[h:]
    b1, b2 = b[:h], b[h:]

    def conj(v):
        return [v[0]] + [-x for x in v[1:]]

    left = [x - y for x, y in zip(_cd_mul(a1, b1), _cd_mul(conj(b2), a2))]
    right = [x + y for x, y in zip(_cd_mul(b2, a1), _cd_mul(a2, conj(b1)))]
    return left + right


def _build_table() -> np.ndarray:
    table = np.zeros((8, 8, 8))
    for i in range(8):
        for j in range(8):
            ei = [0.0] * 8
            ej = [0.0] * 8
            ei[i] = 1.0
            ej[j] = 1.0
            table[i, j, :] = _cd_mul(ei, ej)
    return table


MUL_TABLE = _build_table()
MUL_TABLE.flags.writeable = False


def omul(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Octonion product, broadcasting over leading axes."""
    return np.einsum("ijk,...i,...j->...k", MUL_TABLE, u, v)


def oconj(u: np.ndarray) -> np.ndarray:
    """Cayley conjugation: negate the seven imaginary coordinates."""
    w = np.array(u, copy=True)
    w[..., 1:] *= -1
    return w


def onorm(u: np.ndarray) -> np.ndarray:
    """Complex-bilinear norm form sum(u_i^2); satisfies n(uv) = n(u) n(v)."""
    u = np.asarray(u)
    return (u * u).sum(axis=-1)


def opair(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Hermitian coordinate pairing sum(u_i conj(v_i))."""
    return (np.asarray(u) * np.conj(v)).sum(axis=-1)


def oreal(u: np.ndarray) -> np.ndarray:
    """Scalar part: half the trace t(u) = u + conj(u) = 2 u_0."""
    return np.asarray(u)[..., 0]
