"""Bergman kernels of the Hartogs-type domains Y(q, Omega; k).

Y(q, Omega; k) = { (W, Z) in C^q x Omega : ||W||^{2k} < N(Z,Z) }.  The kernel
is k/(chi(0) vol) * F(X) * N^{-q/k-g} with X = ||W||^2/N^{1/k}, where the
core F is an exact rational function obtained by summing a power series with
polynomial coefficients.  Inflation (replacing a disc variable by a ball
variable) is a normalised derivative, so everything stays closed form.
"""

import numpy as np

from bergman import (
    DomainSpec,
    emit,
    eval_y,
    inflate,
    kernel_expr,
    KernelTerm,
    series_kernel_y,
    y_kernel_core,
    zero_element,
)
from fractions import Fraction as F

disc = DomainSpec("I", (1, 1))

print("== the disc core sums to an exact rational function ==")
core = y_kernel_core(disc, F(1))
print("  F(X) =", emit(core, "text"), "   (over the disc, k = 1)")
print("  F(X) =", emit(y_kernel_core(disc, F(2)), "text"), "   (k = 2)")
print("  F(X) =", emit(y_kernel_core(DomainSpec("IV", (3,)), F(1)), "text"), " (Lie ball IV:3)")

print("\n== inflation: disc kernel to ball kernel ==")
base = kernel_expr(F(1), [KernelTerm(F(1), F(0), F(0), 0, 2)])  # (1-r)^-2
for m in (1, 2, 3, 5):
    print(f"  C^{m}:", emit(inflate(base, m), "text"))

print("\n== Y(q, disc; 1) is the unit ball of C^(q+1) ==")
for q in (1, 2, 3):
    z = np.array([[0.4 + 0j]])
    w = np.zeros(q, dtype=complex)
    w[0] = 0.3
    got = eval_y(disc, 1, q, w, z, vol=1.0)
    want = (q + 1) * (1 - 0.16 - 0.09) ** -(q + 2)
    print(f"  q={q}: kernel={got:.10f}   ball formula={want:.10f}")

print("\n== closed form vs the orthonormal-series oracle ==")
spec, k = DomainSpec("I", (2, 2)), F(3, 2)
z0 = zero_element(spec)
for t in (0.1, 0.3, 0.5, 0.7):
    w = np.sqrt(t)
    closed = eval_y(spec, k, 1, [w], z0, vol=1.0)
    series = series_kernel_y(spec, k, w, truncation=200)
    print(f"  I:2,2 k=3/2 |W|^2={t}:  closed={closed:.10e}  series={series:.10e}")
