"""Tour of the six families of irreducible bounded symmetric domains.

Each domain is the unit ball of the spectral norm on its ambient space; the
generic norm N(x,x) generalises det(I - x x*) and vanishes exactly on the
boundary.  This script prints the numerical invariants, evaluates generic
norms, and demonstrates frames and membership tests.
"""

import numpy as np

from bergman import (
    DomainSpec,
    catalog,
    frame_element,
    generic_min_poly_coeffs,
    generic_norm,
    invariants,
    membership,
    membership_by_inequalities,
    sample_box,
)

print("== invariants of every catalog domain ==")
print(f"{'domain':>8} {'r':>3} {'a':>3} {'b':>3} {'g':>4} {'n':>4}  tube?")
for spec in catalog():
    inv = invariants(spec)
    print(
        f"{str(spec):>8} {inv.r:>3} {inv.a:>3} {inv.b:>3} {inv.g:>4} {inv.n:>4}"
        f"  {'yes' if inv.tube_type else 'no'}"
    )

print("\n== generic norms at simple points ==")
disc = DomainSpec("I", (1, 1))
print("disc, x = 0.5:        N =", generic_norm(disc, [[0.5]], [[0.5]]).real)
i22 = DomainSpec("I", (2, 2))
x = np.diag([0.5, 0.3]).astype(complex)
print("I:2,2, diag(.5,.3):   N =", generic_norm(i22, x, x).real, "= (1-.25)(1-.09)")

print("\n== frames: spectral parameters in, product formula out ==")
for spec in (DomainSpec("III", (2,)), DomainSpec("IV", (4,)), DomainSpec("VI")):
    r = invariants(spec).r
    lam = np.linspace(0.2, 0.7, r)
    fe = frame_element(spec, lam)
    print(
        f"{spec}: lambdas={np.round(lam,3)}  N={generic_norm(spec, fe, fe).real:.12f}"
        f"  prod(1-l^2)={np.prod(1-lam**2):.12f}"
    )

print("\n== membership: definiteness rules agree with derivative inequalities ==")
rng = np.random.default_rng(0)
spec = DomainSpec("IV", (3,))
for scale in (0.3, 0.5, 0.7, 0.9, 1.0):
    x = scale * np.asarray(sample_box(spec, rng))
    a = membership(spec, x)
    b = membership_by_inequalities(spec, x)
    m = generic_min_poly_coeffs(spec, x)
    print(f"  in domain: {a!s:>5} (routes agree: {a == b}),  m(T,x,x) coeffs {np.round(m,3)}")
