"""Exact rational polynomial algebra: Pochhammer products, the chi moment
polynomial of a bounded symmetric domain, the basis conversions used by the
kernel engine, and floating Gamma-product evaluation of the Selberg density
integral as a cross-check.

Everything here is exact over ``fractions.Fraction`` except
:func:`selberg_F`, which is a log-Gamma computation by construction.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .domains import DomainSpec, JordanInvariants, invariants
from .errors import BasisError, DomainError

Rat = Fraction


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RatPoly:
    """Dense univariate polynomial with exact Fraction coefficients
    (ascending order, trailing zeros trimmed; the zero polynomial is empty)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "RatPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RatPoly({list(self.coeffs)})"

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __neg__(self):
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RatPoly):
            if not self.coeffs or not other.coeffs:
                return RatPoly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return RatPoly(out)
        return RatPoly(tuple(c * _frac(other) for c in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, x):
        """Horner evaluation; exact for Fraction arguments."""
        acc = 0 if not isinstance(x, (float, complex)) else 0.0
        for c in reversed(self.coeffs):
            cv = c if not isinstance(x, (float, complex)) else float(c)
            acc = acc * x + cv
        return acc

    def compose_affine(self, alpha, beta) -> "RatPoly":
        """p(alpha*s + beta), exact."""
        lin = RatPoly((_frac(beta), _frac(alpha)))
        acc = RatPoly()
        for c in reversed(self.coeffs):
            acc = acc * lin + RatPoly.const(c)
        return acc

    def derivative(self) -> "RatPoly":
        return RatPoly(tuple((i + 1) * c for i, c in enumerate(self.coeffs[1:])))


def poly_eval(p: RatPoly, x) -> Fraction:
    """Exact Horner evaluation at a rational point."""
    return p(_frac(x))


def pochhammer(shift, k: int) -> RatPoly:
    """(s + shift)_k = prod_{i=0}^{k-1} (s + shift + i) as a polynomial in s."""
    if k < 0:
        raise ValueError("Pochhammer length must be non-negative")
    out = RatPoly.const(1)
    sh = _frac(shift)
    for i in range(k):
        out = out * RatPoly((sh + i, 1))
    return out


@dataclass(frozen=True)
class PochhammerFactor:
    shift: Fraction
    length: int


@dataclass(frozen=True)
class PochhammerForm:
    """A constant times a product of rising factorials (s+shift)_length."""

    factors: tuple[PochhammerFactor, ...]
    constant: Fraction = Fraction(1)

    @property
    def degree(self) -> int:
        return sum(f.length for f in self.factors)

    def expand(self) -> RatPoly:
        out = RatPoly.const(self.constant)
        for f in self.factors:
            out = out * pochhammer(f.shift, f.length)
        return out

    def eval(self, s) -> Fraction:
        """Exact evaluation without expanding."""
        acc = self.constant
        sv = _frac(s)
        for f in self.factors:
            for i in range(f.length):
                acc *= sv + f.shift + i
        return acc

    def eval_log(self, s: float) -> float:
        """log of the value at a point where every linear factor is positive."""
        acc = math.log(self.constant)
        for f in self.factors:
            acc += math.lgamma(s + float(f.shift) + f.length) - math.lgamma(
                s + float(f.shift)
            )
        return acc

    def text(self, var: str = "s") -> str:
        parts = []
        if self.constant != 1:
            parts.append(str(self.constant))
        for f in self.factors:
            base = f"({var}+{f.shift})" if f.shift >= 0 else f"({var}{f.shift})"
            parts.append(base if f.length == 1 else f"{base}_{f.length}")
        return " * ".join(parts) if parts else "1"

    def latex(self, var: str = "s") -> str:
        parts = []
        if self.constant != 1:
            parts.append(_latex_frac(self.constant))
        for f in self.factors:
            sh = _latex_frac(f.shift)
            sign = "+" if f.shift >= 0 else ""
            parts.append(f"({var}{sign}{sh})_{{{f.length}}}")
        return "".join(parts) if parts else "1"

    def to_json(self) -> str:
        return json.dumps(
            {
                "constant": str(self.constant),
                "factors": [
                    {"shift": str(f.shift), "length": f.length} for f in self.factors
                ],
            },
            separators=(",", ":"),
        )


def _latex_frac(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def chi_poly(inv: JordanInvariants) -> PochhammerForm:
    """The degree-n polynomial chi with moment law
    integral(N^s) = chi(0)/chi(s) * vol; product of r rising factorials with
    shifts 1 + (j-1) a/2 and lengths 1 + b + (r-j) a."""
    factors = []
    for j in range(1, inv.r + 1):
        shift = 1 + Fraction(j - 1) * Fraction(inv.a, 2)
        length = 1 + inv.b + (inv.r - j) * inv.a
        if length < 0:
            raise DomainError(f"negative factor length for invariants {inv}")
        if length > 0:
            factors.append(PochhammerFactor(shift, length))
    return PochhammerForm(tuple(factors))


def chi_table_form(spec: DomainSpec) -> PochhammerForm:
    """Per-kind display factorisation of chi (equal to chi_poly as a
    polynomial; types I and II admit a shorter equivalent product)."""
    inv = invariants(spec)
    if spec.kind == "I":
        m, n = spec.params
        return PochhammerForm(
            tuple(PochhammerFactor(Fraction(j), n) for j in range(1, m + 1))
        )
    if spec.kind == "II":
        (n,) = spec.params
        p = n // 2
        length = n - 1 if n % 2 == 0 else n
        return PochhammerForm(
            tuple(PochhammerFactor(Fraction(2 * j - 1), length) for j in range(1, p + 1))
        )
    return chi_poly(inv)


# ---------------------------------------------------------------------------
# basis conversions


def _binom_basis(d: int) -> RatPoly:
    """C(j+d, d) as a polynomial in j."""
    return pochhammer(1, d) * Fraction(1, math.factorial(d))


def to_binom_basis(p: RatPoly) -> tuple[Fraction, ...]:
    """Coefficients c_d with p(j) = sum_d c_d * C(j+d, d), exact.

    This is the expansion that turns polynomial-coefficient power series into
    linear combinations of derivatives of the geometric series."""
    if not p:
        return (Fraction(0),)
    work = p
    out = [Fraction(0)] * (p.degree + 1)
    for d in range(p.degree, -1, -1):
        if work.degree == d:
            c = work.lead * math.factorial(d)
            out[d] = c
            work = work - c * _binom_basis(d)
    if work:
        raise AssertionError("binomial-basis elimination left a remainder")
    return tuple(out)


def to_shifted_pochhammer_basis(p: RatPoly) -> tuple[Fraction, ...]:
    """Coefficients (b_1, ..., b_deg) with p(h) = sum_j b_j (h+1)_j, exact.

    The basis spans exactly the polynomials vanishing at h = -1; anything
    else raises BasisError."""
    if poly_eval(p, -1) != 0:
        raise BasisError("polynomial does not vanish at -1")
    if not p:
        return ()
    out = [Fraction(0)] * p.degree
    work = p
    for j in range(p.degree, 0, -1):
        if work.degree == j:
            b = work.lead
            out[j - 1] = b
            work = work - b * pochhammer(1, j)
    if work:
        raise AssertionError("shifted Pochhammer elimination left a remainder")
    return tuple(out)


# ---------------------------------------------------------------------------
# Selberg density integral


def selberg_F(inv: JordanInvariants, s: float) -> float:
    """The radial-density integral F(s) evaluated by Selberg's formula, via
    log-Gamma sums.  Only the ratio F(s)/F(0) is used in verification; it
    must agree with chi(0)/chi(s)."""
    if s <= -1:
        raise DomainError("F(s) requires s > -1")
    if inv.a < 0:
        raise DomainError("Selberg product undefined for negative multiplicity a")
    a2 = inv.a / 2.0
    acc = 0.0
    for j in range(1, inv.r + 1):
        acc += math.lgamma(inv.b + 1 + (j - 1) * a2)
        acc += math.lgamma(s + 1 + (j - 1) * a2)
        acc += math.lgamma(j * a2 + 1)
        acc -= math.lgamma(s + inv.b + 2 + (inv.r + j - 2) * a2)
        acc -= math.lgamma(a2 + 1)
    return math.exp(acc) / (2**inv.r * math.factorial(inv.r))


def selberg_F_ratio(inv: JordanInvariants, s: float) -> float:
    """F(s)/F(0) as a single Gamma-ratio product (the s-independent factors
    cancel, so this is defined even for the degenerate IV:1 member)."""
    if s <= -1:
        raise DomainError("F(s)/F(0) requires s > -1")
    a2 = inv.a / 2.0
    acc = 0.0
    for j in range(1, inv.r + 1):
        acc += math.lgamma(s + 1 + (j - 1) * a2)
        acc += math.lgamma(inv.b + 2 + (inv.r + j - 2) * a2)
        acc -= math.lgamma(1 + (j - 1) * a2)
        acc -= math.lgamma(s + inv.b + 2 + (inv.r + j - 2) * a2)
    return math.exp(acc)
