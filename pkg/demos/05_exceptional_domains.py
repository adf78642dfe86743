"""The exceptional domains of dimension 16 and 27.

Type VI lives in the Albert algebra (3x3 octonion matrices Hermitian under
Cayley conjugation, 27 complex coordinates); type V is the 16-dimensional
subspace of pairs of octonions.  Their generic norms use the octonion norm
form, the Albert adjoint and the Freudenthal determinant, and their kernel
cores come out of the same machinery as the classical types.
"""

import numpy as np
from fractions import Fraction as F

from bergman import (
    AlbertElement,
    DomainSpec,
    adet,
    apair,
    asharp,
    chi_poly,
    e_kernel_core,
    eval_y,
    frame_element,
    generic_norm,
    invariants,
    membership,
    y_kernel_core,
)
from bergman.octonion import omul, onorm, oconj

rng = np.random.default_rng(1)

print("== octonion arithmetic: alternative, composition algebra ==")
u = rng.normal(size=8) + 1j * rng.normal(size=8)
v = rng.normal(size=8) + 1j * rng.normal(size=8)
print("  |x(xy) - (xx)y|      =", np.abs(omul(u, omul(u, v)) - omul(omul(u, u), v)).max())
print("  |n(uv) - n(u)n(v)|   =", abs(onorm(omul(u, v)) - onorm(u) * onorm(v)))
print("  |conj(uv)-conj(v)conj(u)| =", np.abs(oconj(omul(u, v)) - omul(oconj(v), oconj(u))).max())

print("\n== Albert algebra: adjoint and determinant ==")
x = AlbertElement(
    rng.normal(size=3) + 1j * rng.normal(size=3),
    rng.normal(size=(3, 8)) + 1j * rng.normal(size=(3, 8)),
)
ss = asharp(asharp(x))
d = adet(x)
print("  sharp(sharp(x)) = det(x) x :", np.abs(ss.diag - d * x.diag).max() < 1e-10)

print("\n== the two exceptional domains ==")
for spec in (DomainSpec("V"), DomainSpec("VI")):
    inv = invariants(spec)
    print(f"  {spec}: r={inv.r} a={inv.a} b={inv.b} g={inv.g} n={inv.n}")
    print(f"     chi = {chi_poly(inv).text()}")

print("\n== frames certify the generic norm ==")
lam = np.array([0.8, 0.3])
fe = frame_element(DomainSpec("V"), lam)
print("  V:  N(frame(0.8,0.3)) =", generic_norm(DomainSpec("V"), fe, fe).real,
      " = (1-0.64)(1-0.09) =", (1 - 0.64) * (1 - 0.09))
lam = np.array([0.9, 0.5, 0.1])
fe = frame_element(DomainSpec("VI"), lam)
print("  VI: member(diag(0.9,0.5,0.1)) =", membership(DomainSpec("VI"), fe))

print("\n== kernel cores over the exceptional domains are still exact ==")
core = y_kernel_core(DomainSpec("V"), F(1))
print(f"  Y-core over V, k=1: {len(core.terms)} exact pole terms, top order "
      f"{max(t.d for t in core.terms)}")
lam = e_kernel_core(DomainSpec("VI"), F(2))
print(f"  egg core over VI, k=2: {len(lam.terms)} canonical terms")
print("  kernel of Y(1, V; 1) at the centre (vol normalised to 1):",
      eval_y(DomainSpec("V"), 1, 1, [0], frame_element(DomainSpec("V"), [0, 0]), vol=1.0))
