"""Symbolic closed forms for the Bergman kernels of the Hartogs-type domains

    Y(q, Omega; k) = { (W, Z) : ||W||^{2k} < N(Z,Z) },
    E(p, q, Omega; k) = { (W1, W2, Z) : ||W1||^2 + ||W2||^{2k} < N(Z,Z) },

built over any of the six bounded symmetric domain families.

The term algebra
----------------
Every expression is a finite sum of canonical terms

    c * u^(e0 + e1/k) * lam^p * (1 - lam)^(-d)

with exact rational ``c, e0, e1`` and integer ``p, d >= 0``, where
``u = 1 - t1`` and ``lam = t2 * u^(-1/k)``.  This family is closed under
d/dt1 and d/dt2 (chain rules ``du/dt1 = -1``, ``dlam/dt1 = (lam/k) u^{-1}``,
``dlam/dt2 = u^{-1/k}``), which makes repeated inflation a terminating
rewrite.  Univariate cores (functions of a single argument ``X``) are the
special case ``e0 = e1 = 0`` with ``lam`` read as ``X``.

Scaling conventions: cores built by :func:`y_kernel_core` are bare series
sums; cores built by :func:`e_kernel_core` absorb the exact rational
prefactor ``k/chi(0)``.  The single remaining symbolic prefactor is
``1/vol(Omega)``, injected at evaluation time.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .domains import DomainSpec, invariants
from .elements import generic_norm, membership
from .errors import InvalidParams, OutsideDomain, VolumeUnknown
from .ratpoly import RatPoly, chi_poly, to_binom_basis, to_shifted_pochhammer_basis


@dataclass(frozen=True)
class KernelTerm:
    c: Fraction
    e0: Fraction
    e1: Fraction
    p: int
    d: int

    def key(self):
        return (self.e0, self.e1, self.p, self.d)


def _merge(terms) -> tuple[KernelTerm, ...]:
    acc: dict = {}
    for t in terms:
        acc[t.key()] = acc.get(t.key(), Fraction(0)) + t.c
    out = [
        KernelTerm(c, e0, e1, p, d)
        for (e0, e1, p, d), c in acc.items()
        if c != 0
    ]
    out.sort(key=lambda t: t.key())
    return tuple(out)


@dataclass(frozen=True)
class KernelExpr:
    """Canonical term list bound to a fixed rational parameter k."""

    k: Fraction
    terms: tuple[KernelTerm, ...]

    def __post_init__(self):
        if self.k <= 0:
            raise InvalidParams("parameter k must be positive")

    @property
    def kappa(self) -> Fraction:
        return 1 / self.k

    @property
    def is_univariate(self) -> bool:
        return all(t.e0 == 0 and t.e1 == 0 for t in self.terms)

    # -- evaluation ---------------------------------------------------------

    def eval(self, t1: float, t2: float) -> float:
        """Value at (t1, t2) with t1 in [0,1) and lam = t2 (1-t1)^(-1/k) < 1."""
        kf = float(self.kappa)
        u = 1.0 - t1
        if u <= 0:
            raise OutsideDomain("t1 must lie in [0, 1)")
        lam = t2 * u ** (-kf)
        if lam >= 1:
            raise OutsideDomain("t2 (1-t1)^(-1/k) must lie in [0, 1)")
        acc = 0.0
        for t in self.terms:
            val = float(t.c) * u ** (float(t.e0) + float(t.e1) * kf)
            if t.p:
                val *= lam**t.p
            if t.d:
                val *= (1.0 - lam) ** (-t.d)
            acc += val
        return acc

    def eval_univariate(self, x: float) -> float:
        if not self.is_univariate:
            raise InvalidParams("expression depends on u; use eval(t1, t2)")
        if x >= 1:
            raise OutsideDomain("argument must lie in [0, 1)")
        acc = 0.0
        for t in self.terms:
            val = float(t.c)
            if t.p:
                val *= x**t.p
            if t.d:
                val *= (1.0 - x) ** (-t.d)
            acc += val
        return acc

    # -- differentiation ----------------------------------------------------

    def d_dt1(self) -> "KernelExpr":
        kap = self.kappa
        out = []
        for t in self.terms:
            e = t.e0 + t.e1 * kap
            c1 = t.c * (t.p * kap - e)
            if c1 != 0:
                out.append(KernelTerm(c1, t.e0 - 1, t.e1, t.p, t.d))
            if t.d:
                out.append(KernelTerm(t.c * t.d * kap, t.e0 - 1, t.e1, t.p + 1, t.d + 1))
        return KernelExpr(self.k, _merge(out))

    def d_dt2(self) -> "KernelExpr":
        out = []
        for t in self.terms:
            if t.p:
                out.append(KernelTerm(t.c * t.p, t.e0, t.e1 - 1, t.p - 1, t.d))
            if t.d:
                out.append(KernelTerm(t.c * t.d, t.e0, t.e1 - 1, t.p, t.d + 1))
        return KernelExpr(self.k, _merge(out))

    def d_dx(self) -> "KernelExpr":
        """Plain derivative of a univariate core in its argument."""
        if not self.is_univariate:
            raise InvalidParams("d_dx applies to univariate cores only")
        out = []
        for t in self.terms:
            if t.p:
                out.append(KernelTerm(t.c * t.p, t.e0, t.e1, t.p - 1, t.d))
            if t.d:
                out.append(KernelTerm(t.c * t.d, t.e0, t.e1, t.p, t.d + 1))
        return KernelExpr(self.k, _merge(out))

    def scaled(self, factor) -> "KernelExpr":
        f = Fraction(factor)
        return KernelExpr(self.k, _merge(KernelTerm(t.c * f, t.e0, t.e1, t.p, t.d) for t in self.terms))


def kernel_expr(k, terms) -> KernelExpr:
    return KernelExpr(Fraction(k), _merge(terms))


# ---------------------------------------------------------------------------
# series summation


def sum_poly_series(poly: RatPoly, k=Fraction(1)) -> KernelExpr:
    """Closed form of sum_{j>=0} P(j) X^j as a combination of
    (1-X)^(-(d+1)), via the binomial-coefficient basis of P."""
    terms = []
    for d, c in enumerate(to_binom_basis(poly)):
        if c != 0:
            terms.append(KernelTerm(c, Fraction(0), Fraction(0), 0, d + 1))
    return kernel_expr(k, terms)


@lru_cache(maxsize=None)
def y_kernel_core(spec: DomainSpec, k: Fraction) -> KernelExpr:
    """The univariate core F with F(X) = sum ((j+1)/k) chi((j+1)/k) X^j.

    The assembled kernel of Y(q, Omega; k) is
    (1/q!) * k/(chi(0) vol) * F^{(q-1)}(||W||^2 / N^{1/k}) * N^{-q/k-g}.
    """
    k = Fraction(k)
    if k <= 0:
        raise InvalidParams("k must be positive")
    chi = chi_poly(invariants(spec)).expand()
    kap = 1 / k
    poly = RatPoly((kap, kap)) * chi.compose_affine(kap, kap)
    return sum_poly_series(poly, k)


def inflate(expr: KernelExpr, m: int) -> KernelExpr:
    """Replace a one-dimensional circular variable by an m-dimensional one:
    (1/m!) times the (m-1)-th derivative of the univariate core."""
    if m < 1:
        raise InvalidParams("inflation order must be a positive integer")
    out = expr
    for _ in range(m - 1):
        out = out.d_dx()
    return out.scaled(Fraction(1, math.factorial(m)))


def mixed_partial(expr: KernelExpr, p: int, q: int) -> KernelExpr:
    """Exact symbolic d^{p-1}/dt1^{p-1} d^{q-1}/dt2^{q-1} of a bivariate core."""
    if p < 1 or q < 1:
        raise InvalidParams("inflation orders must be positive integers")
    out = expr
    for _ in range(p - 1):
        out = out.d_dt1()
    for _ in range(q - 1):
        out = out.d_dt2()
    return out


# ---------------------------------------------------------------------------
# the egg-domain core


def _poch_int(a: int, m: int) -> int:
    out = 1
    for t in range(m):
        out *= a + t
    return out


def _h_poly(j: int, m: int, k: Fraction) -> RatPoly:
    """((p+1)/k + 2 + m)_{j-m} as a polynomial in the summation index p."""
    kap = 1 / Fraction(k)
    out = RatPoly.const(1)
    for i in range(j - m):
        out = out * RatPoly((kap + 2 + m + i, kap))
    return out


def h_jm(j: int, m: int, k) -> KernelExpr:
    """Closed form of H_{jm}(lam) = sum_p ((p+1)/k + 2 + m)_{j-m} lam^p."""
    if not 0 <= m <= j:
        raise InvalidParams("h_jm needs 0 <= m <= j")
    k = Fraction(k)
    return sum_poly_series(_h_poly(j, m, k), k)


@lru_cache(maxsize=None)
def e_kernel_core(spec: DomainSpec, k: Fraction) -> KernelExpr:
    """The bivariate core Lam(t1, t2) of E(1, 1, Omega; k), including the
    exact rational prefactor k/chi(0); only 1/vol stays symbolic.

    The assembled kernel of E(p, q, Omega; k) is
    (1/(p! q!)) * (1/vol) * Lam^{(p-1,q-1)}(||W1||^2/N, ||W2||^2/N^{1/k})
    * N^{-p-q/k-g}.
    """
    k = Fraction(k)
    if k <= 0:
        raise InvalidParams("k must be positive")
    inv = invariants(spec)
    chi = chi_poly(inv).expand()
    hh = RatPoly((0, -1, 1)) * chi  # h(h-1) chi(h)
    bs = to_shifted_pochhammer_basis(hh)
    pref = k / chi_poly(inv).eval(0)
    kap = 1 / k
    terms = []
    for j, bj in enumerate(bs, start=1):
        if bj == 0:
            continue
        for m in range(j + 1):
            gamma = bj * _poch_int(-j, m) * (m + 1)
            if gamma == 0:
                continue
            pole_coeffs = to_binom_basis(_h_poly(j, m, k))
            # t1^m = (1-u)^m expanded into powers of u
            for i in range(m + 1):
                w = gamma * math.comb(m, i) * (-1) ** i
                for dd, cdd in enumerate(pole_coeffs):
                    if cdd == 0:
                        continue
                    terms.append(
                        KernelTerm(
                            pref * w * cdd,
                            Fraction(i - j),
                            Fraction(-1),
                            0,
                            dd + 1,
                        )
                    )
    return KernelExpr(k, _merge(terms))


# ---------------------------------------------------------------------------
# assembled kernel evaluation


def known_volume(spec: DomainSpec) -> float | None:
    """Exact volume where the normalisation fixes it: I:1,n is the unit ball
    of its own inner product, so its volume is exactly 1."""
    if spec.kind == "I" and spec.params[0] == 1:
        return 1.0
    return None


def _resolve_volume(spec: DomainSpec, vol) -> float:
    if vol is not None:
        if vol <= 0:
            raise InvalidParams("volume must be positive")
        return float(vol)
    v = known_volume(spec)
    if v is None:
        raise VolumeUnknown(
            f"no volume available for {spec}; pass vol= or estimate it first"
        )
    return v


@lru_cache(maxsize=None)
def _y_core_inflated(spec: DomainSpec, k: Fraction, q: int) -> KernelExpr:
    return inflate(y_kernel_core(spec, k), q)


@lru_cache(maxsize=None)
def _e_core_derived(spec: DomainSpec, k: Fraction, p: int, q: int) -> KernelExpr:
    return mixed_partial(e_kernel_core(spec, k), p, q)


def eval_y(spec: DomainSpec, k, q: int, w, z, vol=None) -> float:
    """Bergman kernel of Y(q, Omega; k) at the diagonal point (W, Z)."""
    k = Fraction(k)
    vol = _resolve_volume(spec, vol)
    w = np.atleast_1d(np.asarray(w, dtype=complex))
    if w.shape != (q,):
        raise InvalidParams(f"W must have {q} components")
    if not membership(spec, z):
        raise OutsideDomain("Z lies outside the base domain")
    n_val = generic_norm(spec, z, z).real
    w2 = float((w * np.conj(w)).sum().real)
    kf = float(k)
    if w2**kf >= n_val:
        raise OutsideDomain("||W||^{2k} >= N(Z,Z)")
    inv = invariants(spec)
    chi0 = float(chi_poly(inv).eval(0))
    core = _y_core_inflated(spec, k, q)
    x = w2 / n_val ** (1.0 / kf)
    return (
        (kf / (chi0 * vol))
        * core.eval_univariate(x)
        * n_val ** (-q / kf - inv.g)
    )


def eval_e(spec: DomainSpec, k, p: int, q: int, w1, w2, z, vol=None) -> float:
    """Bergman kernel of E(p, q, Omega; k) at the diagonal point (W1, W2, Z)."""
    k = Fraction(k)
    vol = _resolve_volume(spec, vol)
    w1 = np.atleast_1d(np.asarray(w1, dtype=complex))
    w2 = np.atleast_1d(np.asarray(w2, dtype=complex))
    if w1.shape != (p,) or w2.shape != (q,):
        raise InvalidParams(f"W1 must have {p} components and W2 {q}")
    if not membership(spec, z):
        raise OutsideDomain("Z lies outside the base domain")
    n_val = generic_norm(spec, z, z).real
    a1 = float((w1 * np.conj(w1)).sum().real)
    a2 = float((w2 * np.conj(w2)).sum().real)
    kf = float(k)
    if a1 + a2**kf >= n_val:
        raise OutsideDomain("||W1||^2 + ||W2||^{2k} >= N(Z,Z)")
    core = _e_core_derived(spec, k, p, q)
    t1 = a1 / n_val
    t2 = a2 / n_val ** (1.0 / kf)
    inv = invariants(spec)
    norm_power = n_val ** (-p - q / kf - inv.g)
    return (
        core.eval(t1, t2)
        * norm_power
        / (math.factorial(p) * math.factorial(q) * vol)
    )


# ---------------------------------------------------------------------------
# serialisation


def _fmt_exp(t: KernelTerm) -> str:
    if t.e1 == 0:
        return str(t.e0)
    sign = "+" if t.e1 > 0 else "-"
    mag = abs(t.e1)
    kpart = "1/k" if mag == 1 else f"{mag}/k"
    return f"{t.e0}{sign}{kpart}"


def _term_text(t: KernelTerm, univariate: bool) -> str:
    var = "X" if univariate else "lam"
    parts = [str(t.c)]
    if not univariate and (t.e0 != 0 or t.e1 != 0):
        parts.append(f"u^({_fmt_exp(t)})")
    if t.p:
        parts.append(f"{var}^{t.p}" if t.p > 1 else var)
    if t.d:
        parts.append(f"(1-{var})^-{t.d}")
    return "*".join(parts)


def _term_latex(t: KernelTerm, univariate: bool) -> str:
    var = "X" if univariate else "\\lambda"
    out = _latex_rat(t.c)
    if not univariate and (t.e0 != 0 or t.e1 != 0):
        e0 = _latex_rat(t.e0)
        if t.e1 == 0:
            expo = e0
        else:
            sign = "+" if t.e1 > 0 else "-"
            mag = abs(t.e1)
            frac = "\\frac{1}{k}" if mag == 1 else f"\\frac{{{_latex_rat(mag)}}}{{k}}"
            expo = f"{e0}{sign}{frac}"
        out += f"(1-t_1)^{{{expo}}}"
    if t.p:
        out += f"{var}^{{{t.p}}}" if t.p > 1 else var
    if t.d:
        out += f"(1-{var})^{{-{t.d}}}"
    return out


def _latex_rat(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def emit(expr: KernelExpr, fmt: str = "text") -> str:
    """Deterministic serialisation of an expression.

    ``text`` and ``latex`` are human readable; ``json`` is the lossless
    term-list encoding {"k": "num/den", "terms": [{c, e0, e1, p, d}, ...]}.
    """
    uni = expr.is_univariate
    if fmt == "text":
        if not expr.terms:
            return "0"
        return " + ".join(_term_text(t, uni) for t in expr.terms)
    if fmt == "latex":
        if not expr.terms:
            return "0"
        body = " + ".join(_term_latex(t, uni) for t in expr.terms)
        if uni:
            return body
        return body + "\\qquad \\lambda = t_2 (1-t_1)^{-1/k}"
    if fmt == "json":
        doc = {
            "k": str(expr.k),
            "terms": [
                {
                    "c": str(t.c),
                    "e0": str(t.e0),
                    "e1": str(t.e1),
                    "p": t.p,
                    "d": t.d,
                }
                for t in expr.terms
            ],
        }
        return json.dumps(doc, separators=(",", ":"))
    raise InvalidParams(f"unknown format {fmt!r}")


def parse_expr(text: str) -> KernelExpr:
    """Inverse of emit(..., "json")."""
    doc = json.loads(text)
    terms = [
        KernelTerm(
            Fraction(t["c"]),
            Fraction(t["e0"]),
            Fraction(t["e1"]),
            int(t["p"]),
            int(t["d"]),
        )
        for t in doc["terms"]
    ]
    return kernel_expr(Fraction(doc["k"]), terms)
