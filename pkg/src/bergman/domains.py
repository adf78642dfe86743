"""The six families of irreducible bounded symmetric domains.

A domain is identified by its Cartan kind (``I`` .. ``VI``) and integer size
parameters.  Each domain carries numerical invariants (rank ``r``,
multiplicities ``a`` and ``b``, genus ``g = 2 + a(r-1) + b`` and complex
dimension ``n``) which drive every formula in the rest of the package.

The text grammar shared with the command line is ``I:m,n | II:n | III:n |
IV:n | V | VI``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParams

_KINDS = ("I", "II", "III", "IV", "V", "VI")


@dataclass(frozen=True)
class DomainSpec:
    """One irreducible bounded symmetric domain: Cartan kind plus sizes."""

    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise InvalidParams(f"unknown domain kind {self.kind!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        p = self.params
        if self.kind == "I":
            if len(p) != 2:
                raise InvalidParams("type I takes two parameters m,n")
            m, n = p
            if not 1 <= m <= n:
                raise InvalidParams(f"type I requires 1 <= m <= n, got {m},{n}")
        elif self.kind == "II":
            if len(p) != 1 or p[0] < 2:
                raise InvalidParams("type II takes one parameter n >= 2")
        elif self.kind == "III":
            if len(p) != 1 or p[0] < 1:
                raise InvalidParams("type III takes one parameter n >= 1")
        elif self.kind == "IV":
            if len(p) != 1 or p[0] < 1 or p[0] == 2:
                raise InvalidParams("type IV takes one parameter n >= 1, n != 2")
        else:
            if p:
                raise InvalidParams(f"type {self.kind} takes no parameters")

    def __str__(self):
        if not self.params:
            return self.kind
        return f"{self.kind}:{','.join(str(v) for v in self.params)}"


@dataclass(frozen=True)
class JordanInvariants:
    """Numerical invariants of the Jordan triple system behind a domain."""

    r: int
    a: int
    b: int
    g: int
    n: int

    @property
    def tube_type(self) -> bool:
        return self.b == 0


def parse_domain(text: str) -> DomainSpec:
    """Parse the ``I:m,n | II:n | III:n | IV:n | V | VI`` grammar."""
    text = text.strip()
    if ":" in text:
        kind, _, rest = text.partition(":")
        try:
            params = tuple(int(tok) for tok in rest.split(","))
        except ValueError as exc:
            raise InvalidParams(f"bad size parameters in {text!r}") from exc
        return DomainSpec(kind.strip(), params)
    return DomainSpec(text)


def invariants(spec: DomainSpec) -> JordanInvariants:
    """Rank, multiplicities, genus and complex dimension of a domain.

    Note the degenerate member IV:1 (the unit disc presented with a doubled
    minimal polynomial): it has a = -1 and is excluded from :func:`catalog`.
    """
    if spec.kind == "I":
        m, n = spec.params
        return JordanInvariants(r=m, a=2, b=n - m, g=m + n, n=m * n)
    if spec.kind == "II":
        (n,) = spec.params
        p = n // 2
        b = 0 if n % 2 == 0 else 2
        return JordanInvariants(r=p, a=4, b=b, g=2 * (n - 1), n=n * (n - 1) // 2)
    if spec.kind == "III":
        (n,) = spec.params
        return JordanInvariants(r=n, a=1, b=0, g=n + 1, n=n * (n + 1) // 2)
    if spec.kind == "IV":
        (n,) = spec.params
        return JordanInvariants(r=2, a=n - 2, b=0, g=n, n=n)
    if spec.kind == "V":
        return JordanInvariants(r=2, a=6, b=4, g=12, n=16)
    return JordanInvariants(r=3, a=8, b=0, g=18, n=27)


def catalog() -> list[DomainSpec]:
    """The standard sweep used by structural tests.

    Covers I up to 4x4, II up to n=6, III up to n=4, IV for 3 <= n <= 8 and
    both exceptional domains.  IV:1 is constructible but degenerate (a < 0)
    and deliberately left out.
    """
    specs: list[DomainSpec] = []
    for m in range(1, 5):
        for n in range(m, 5):
            specs.append(DomainSpec("I", (m, n)))
    specs.extend(DomainSpec("II", (n,)) for n in range(2, 7))
    specs.extend(DomainSpec("III", (n,)) for n in range(1, 5))
    specs.extend(DomainSpec("IV", (n,)) for n in range(3, 9))
    specs.append(DomainSpec("V"))
    specs.append(DomainSpec("VI"))
    return specs


# Human-readable rules printed by the CLI `describe` command.
_NORM_RULES = {
    "I": "Det(I_m - x conj(y)^T) on m x n complex matrices",
    "II": "square root of Det(T I_n + x conj(y)) at T=1 (alternating matrices)",
    "III": "Det(I_n - x conj(y)) on symmetric matrices",
    "IV": "1 - q(x,conj(y)) + q(x) conj(q(y)),  q(x) = sum x_i^2",
    "V": "1 - (x|y) + (x#|y#) on pairs of complexified octonions",
    "VI": "1 - (x|y) + (x#|y#) - det(x) conj(det(y)) on Albert elements",
}

_MEMBERSHIP_RULES = {
    "I": "I_m - x conj(x)^T positive definite",
    "II": "I_n + x conj(x) positive definite",
    "III": "I_n - x conj(x) positive definite",
    "IV": "1 - q(x,conj(x)) + |q(x)|^2 > 0 and 2 - q(x,conj(x)) > 0",
    "V": "1 - (x|x) + (x#|x#) > 0 and 2 - (x|x) > 0",
    "VI": "1-(x|x)+(x#|x#)-|det x|^2 > 0, 3-2(x|x)+(x#|x#) > 0, 3-(x|x) > 0",
}


def describe(spec: DomainSpec) -> dict:
    """Structured summary of a domain (used by the CLI)."""
    inv = invariants(spec)
    return {
        "domain": str(spec),
        "r": inv.r,
        "a": inv.a,
        "b": inv.b,
        "g": inv.g,
        "n": inv.n,
        "tube_type": inv.tube_type,
        "generic_norm": _NORM_RULES[spec.kind],
        "membership": _MEMBERSHIP_RULES[spec.kind],
    }
