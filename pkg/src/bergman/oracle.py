"""Independent verification oracles: Monte-Carlo integration over the
domains (volumes, norm moments, coefficient integrals, reproducing
property) and truncated orthonormal-series kernels.

All Monte-Carlo estimates use rejection sampling in the per-coordinate
bounding box, sharded with per-shard derived seeds and reduced in fixed
order, so results are reproducible for a given seed regardless of the
worker count.  Series oracles are truncated at a fixed number of terms per
variable with a geometric tail estimate reported alongside.

Volume normalisation: the ambient measure gives volume 1 to the unit ball
of the inner product m1, i.e. it is (n!/pi^n) * prod(weights) times Lebesgue
measure in the free coordinates.
"""

from __future__ import annotations

import json
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .domains import DomainSpec, catalog, invariants
from .elements import (
    batch_membership,
    batch_norm_membership,
    coord_weights,
    n_coords,
    sample_box_coords,
)
from .errors import InvalidParams, LowAcceptanceWarning
from .kernels import known_volume
from .ratpoly import chi_poly

_SHARD = 250_000


@dataclass(frozen=True)
class McEstimate:
    value: float
    std_error: float
    samples: int
    acceptance_ratio: float
    seed: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "value": self.value,
                "std_error": self.std_error,
                "samples": self.samples,
                "acceptance_ratio": self.acceptance_ratio,
                "seed": self.seed,
            },
            separators=(",", ":"),
        )


@dataclass(frozen=True)
class VerifyReport:
    quantity: str
    oracle: float
    std_error: float
    reference: float
    rel_deviation: float
    tolerance: float
    passed: bool
    samples: int = 0
    seed: int | None = None

    def to_json(self) -> str:
        return json.dumps(
            {
                "quantity": self.quantity,
                "oracle": self.oracle,
                "std_error": self.std_error,
                "reference": self.reference,
                "rel_deviation": self.rel_deviation,
                "tolerance": self.tolerance,
                "pass": self.passed,
                "samples": self.samples,
                "seed": self.seed,
            },
            separators=(",", ":"),
        )


def make_report(
    quantity: str,
    oracle: float,
    reference: float,
    tolerance: float,
    std_error: float = 0.0,
    samples: int = 0,
    seed: int | None = None,
) -> VerifyReport:
    """Pass rule: deviation <= max(tol, 3 sigma / |ref|) when stochastic,
    deviation <= tol when deterministic.  A zero reference switches the
    deviation to absolute."""
    if reference != 0.0:
        dev = abs(oracle - reference) / abs(reference)
        sig = 3.0 * std_error / abs(reference)
    else:
        dev = abs(oracle - reference)
        sig = 3.0 * std_error
    threshold = max(tolerance, sig) if std_error > 0 else tolerance
    return VerifyReport(
        quantity=quantity,
        oracle=oracle,
        std_error=std_error,
        reference=reference,
        rel_deviation=dev,
        tolerance=tolerance,
        passed=bool(dev <= threshold),
        samples=samples,
        seed=seed,
    )


# ---------------------------------------------------------------------------
# sharded Monte-Carlo engine


def _shard_plan(samples: int, seed: int):
    sizes = []
    left = samples
    while left > 0:
        sizes.append(min(_SHARD, left))
        left -= _SHARD
    seeds = np.random.SeedSequence(seed).spawn(len(sizes))
    return list(zip(sizes, seeds))


def _run_shards(fn, samples: int, seed: int, workers: int, extra: tuple):
    plan = [(size, sseq) + extra for size, sseq in _shard_plan(samples, seed)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(fn, plan))
    else:
        results = [fn(args) for args in plan]
    # fixed-order reduction keeps results independent of the worker count
    totals = [sum(col) for col in zip(*results)]
    return totals


def _measure_density(spec: DomainSpec) -> float:
    n = n_coords(spec)
    logdens = math.lgamma(n + 1) - n * math.log(math.pi)
    logdens += float(np.log(coord_weights(spec)).sum())
    return math.exp(logdens)


def _volume_shard(args):
    size, sseq, spec = args
    rng = np.random.default_rng(sseq)
    coords = sample_box_coords(spec, rng, size)
    member = batch_membership(spec, coords)
    return (int(member.sum()),)


def mc_volume(spec: DomainSpec, samples: int, seed: int, workers: int = 1) -> McEstimate:
    """Estimate the domain volume for the normalised ambient measure by box
    rejection; for I:1,n the exact answer is 1."""
    if samples < 1000:
        raise InvalidParams("need at least 1e3 samples")
    (acc,) = _run_shards(_volume_shard, samples, seed, workers, (spec,))
    n = n_coords(spec)
    scale = _measure_density(spec) * 4.0**n
    p = acc / samples
    value = scale * p
    err = scale * math.sqrt(max(p * (1 - p), 0.0) / samples)
    if p < 1e-4:
        warnings.warn(
            f"acceptance ratio {p:.2e} for {spec}; rejection sampling is "
            "ineffective at this dimension",
            LowAcceptanceWarning,
        )
    return McEstimate(value, err, samples, p, seed)


def _moment_shard(args):
    size, sseq, spec, s_float = args
    rng = np.random.default_rng(sseq)
    coords = sample_box_coords(spec, rng, size)
    norm, member = batch_norm_membership(spec, coords)
    vals = norm[member] ** s_float
    return (int(member.sum()), float(vals.sum()), float((vals * vals).sum()))


def mc_norm_moment(
    spec: DomainSpec,
    s,
    samples: int,
    seed: int,
    workers: int = 1,
    tolerance: float = 0.02,
) -> VerifyReport:
    """Conditional Monte-Carlo mean of N(x,x)^s over the domain against the
    exact moment ratio chi(0)/chi(s) (the volume cancels)."""
    s = Fraction(s)
    if s <= -1:
        raise InvalidParams("moment requires s > -1")
    if samples < 1000:
        raise InvalidParams("need at least 1e3 samples")
    n_acc, v1, v2 = _run_shards(
        _moment_shard, samples, seed, workers, (spec, float(s))
    )
    chi = chi_poly(invariants(spec))
    reference = float(chi.eval(0) / chi.eval(s))
    if n_acc == 0:
        warnings.warn(f"no accepted samples for {spec}", LowAcceptanceWarning)
        return make_report(
            f"moment[{spec},s={s}]", math.nan, reference, tolerance, 0.0, samples, seed
        )
    mean = v1 / n_acc
    var = max(v2 / n_acc - mean * mean, 0.0)
    err = math.sqrt(var / n_acc)
    return make_report(
        f"moment[{spec},s={s}]", mean, reference, tolerance, err, samples, seed
    )


# ---------------------------------------------------------------------------
# exact kernel coefficients


def coeff_y_exact(spec: DomainSpec, k, j: int) -> Fraction:
    """|a_j|^2 * vol for the Hartogs domain Y(1, Omega; k): the exact
    rational (j+1) chi((j+1)/k) / chi(0)."""
    if j < 0:
        raise InvalidParams("index must be non-negative")
    k = Fraction(k)
    chi = chi_poly(invariants(spec))
    return (j + 1) * chi.eval(Fraction(j + 1, 1) / k) / chi.eval(0)


def coeff_e_exact(spec: DomainSpec, k, j1: int, j2: int) -> float:
    """|a_{j1 j2}|^2 * vol for the egg domain E(1, 1, Omega; k):
    k Gamma(h+1) chi(h) / (chi(0) Gamma(j1+1) Gamma((j2+1)/k)) with
    h = j1 + 1 + (j2+1)/k; the Gamma ratio is evaluated by log-Gamma."""
    if j1 < 0 or j2 < 0:
        raise InvalidParams("indices must be non-negative")
    k = Fraction(k)
    chi = chi_poly(invariants(spec))
    s2 = Fraction(j2 + 1, 1) / k
    h = j1 + 1 + s2
    log_val = (
        math.log(float(k))
        + math.lgamma(float(h) + 1.0)
        - math.lgamma(j1 + 1.0)
        - math.lgamma(float(s2))
        + chi.eval_log(float(h))
        - chi.eval_log(0.0)
    )
    return math.exp(log_val)


# ---------------------------------------------------------------------------
# coefficient integrals by Monte Carlo


def _coeff_shard(args):
    size, sseq, spec, kf, family, index = args
    rng = np.random.default_rng(sseq)
    coords = sample_box_coords(spec, rng, size)
    norm, member = batch_norm_membership(spec, coords)
    if family == "y":
        (j,) = index
        w = rng.uniform(-1, 1, size=(size, 2))
        w2 = w[:, 0] ** 2 + w[:, 1] ** 2
        inside = member & (w2**kf < norm)
        vals = np.where(inside, w2**j, 0.0)
    else:
        j1, j2 = index
        wa = rng.uniform(-1, 1, size=(size, 2))
        wb = rng.uniform(-1, 1, size=(size, 2))
        a1 = wa[:, 0] ** 2 + wa[:, 1] ** 2
        a2 = wb[:, 0] ** 2 + wb[:, 1] ** 2
        inside = member & (a1 + a2**kf < norm)
        vals = np.where(inside, a1**j1 * a2**j2, 0.0)
    return (float(vals.sum()), float((vals * vals).sum()))


def coeff_mc(
    spec: DomainSpec,
    k,
    index,
    samples: int,
    seed: int,
    family: str = "y",
    vol: float | None = None,
    workers: int = 1,
    tolerance: float = 0.0,
) -> VerifyReport:
    """Monte-Carlo estimate of the monomial norm integral over Y (family
    "y", index (j,)) or E (family "e", index (j1, j2)) with one-dimensional
    fibre variables, compared against the reciprocal of the exact
    coefficient."""
    if family not in ("y", "e"):
        raise InvalidParams("family must be 'y' or 'e'")
    index = tuple(int(i) for i in (index if hasattr(index, "__len__") else (index,)))
    if len(index) != (1 if family == "y" else 2):
        raise InvalidParams(f"family {family!r} needs {1 if family == 'y' else 2} indices")
    if vol is None:
        vol = known_volume(spec)
        if vol is None:
            raise InvalidParams(f"pass vol= for {spec}")
    k = Fraction(k)
    v1, v2 = _run_shards(
        _coeff_shard, samples, seed, workers, (spec, float(k), family, index)
    )
    nfib = 1 if family == "y" else 2
    n = n_coords(spec)
    scale = _measure_density(spec) * (1 / math.pi) ** nfib * 4.0 ** (n + nfib)
    mean = v1 / samples
    var = max(v2 / samples - mean * mean, 0.0)
    est = scale * mean
    err = scale * math.sqrt(var / samples)
    if family == "y":
        reference = vol / float(coeff_y_exact(spec, k, index[0]))
    else:
        reference = vol / coeff_e_exact(spec, k, index[0], index[1])
    return make_report(
        f"coeff[{family},{spec},k={k},{index}]",
        est,
        reference,
        tolerance,
        err,
        samples,
        seed,
    )


# ---------------------------------------------------------------------------
# truncated series kernels


@lru_cache(maxsize=32)
def _y_coeff_row(spec: DomainSpec, k: Fraction, jmax: int):
    chi = chi_poly(invariants(spec))
    log0 = chi.eval_log(0.0)
    out = np.empty(jmax + 1)
    for j in range(jmax + 1):
        arg = float(Fraction(j + 1, 1) / k)
        out[j] = math.exp(math.log(j + 1) + chi.eval_log(arg) - log0)
    return out


def series_kernel_y(spec: DomainSpec, k, w, truncation: int = 200, vol: float = 1.0):
    """Partial sum of the kernel series of Y(1, Omega; k) at (W, 0)."""
    value, _ = series_kernel_y_report(spec, k, w, truncation, vol)
    return value


def series_kernel_y_report(
    spec: DomainSpec, k, w, truncation: int = 200, vol: float = 1.0
):
    if truncation < 50:
        raise InvalidParams("use at least 50 series terms")
    k = Fraction(k)
    t = float(abs(complex(w)) ** 2)
    if t ** float(k) >= 1.0:
        raise InvalidParams("|W|^{2k} must be < 1 at Z = 0")
    coeffs = _y_coeff_row(spec, k, truncation)
    powers = t ** np.arange(truncation + 1)
    value = float(coeffs @ powers) / vol
    tail = float(coeffs[-1] * powers[-1]) * t / max(1.0 - t, 1e-12) / vol
    return value, tail


@lru_cache(maxsize=32)
def _e_coeff_grid(spec: DomainSpec, k: Fraction, jmax: int):
    chi = chi_poly(invariants(spec))
    log0 = chi.eval_log(0.0)
    logk = math.log(float(k))
    kf = float(k)
    out = np.empty((jmax + 1, jmax + 1))
    for j2 in range(jmax + 1):
        s2 = (j2 + 1) / kf
        lg_s2 = math.lgamma(s2)
        for j1 in range(jmax + 1):
            h = j1 + 1 + s2
            out[j1, j2] = math.exp(
                logk
                + math.lgamma(h + 1.0)
                - math.lgamma(j1 + 1.0)
                - lg_s2
                + chi.eval_log(h)
                - log0
            )
    return out


def series_kernel_e(
    spec: DomainSpec, k, w1, w2, truncation: int = 200, vol: float = 1.0
):
    """Truncated double kernel series of E(1, 1, Omega; k) at (W1, W2, 0).

    Independent of the closed-form pipeline; this is the primary oracle for
    the egg-domain kernels."""
    value, _ = series_kernel_e_report(spec, k, w1, w2, truncation, vol)
    return value


def series_kernel_e_report(
    spec: DomainSpec, k, w1, w2, truncation: int = 200, vol: float = 1.0
):
    if truncation < 50:
        raise InvalidParams("use at least 50 series terms")
    k = Fraction(k)
    t1 = float(abs(complex(w1)) ** 2)
    t2 = float(abs(complex(w2)) ** 2)
    if t1 + t2 ** float(k) >= 1.0:
        raise InvalidParams("|W1|^2 + |W2|^{2k} must be < 1 at Z = 0")
    grid = _e_coeff_grid(spec, k, truncation)
    p1 = t1 ** np.arange(truncation + 1)
    p2 = t2 ** np.arange(truncation + 1)
    value = float(p1 @ grid @ p2) / vol
    row_tail = float(grid[-1, :] @ p2) * p1[-1] * t1 / max(1.0 - t1, 1e-12)
    col_tail = float(p1 @ grid[:, -1]) * p2[-1] * t2 / max(1.0 - t2, 1e-12)
    return value, (row_tail + col_tail) / vol


# ---------------------------------------------------------------------------
# reproducing property


def _reproducing_shard(args):
    size, sseq, spec, kf, family, exps = args
    rng = np.random.default_rng(sseq)
    coords = sample_box_coords(spec, rng, size)
    norm, member = batch_norm_membership(spec, coords)
    if family == "y":
        (e,) = exps
        w = rng.uniform(-1, 1, size=(size, 2))
        wc = w[:, 0] + 1j * w[:, 1]
        inside = member & ((np.abs(wc) ** 2) ** kf < norm)
        vals = np.where(inside, wc**e, 0.0)
    else:
        e1, e2 = exps
        wa = rng.uniform(-1, 1, size=(size, 2))
        wb = rng.uniform(-1, 1, size=(size, 2))
        w1 = wa[:, 0] + 1j * wa[:, 1]
        w2 = wb[:, 0] + 1j * wb[:, 1]
        inside = member & (np.abs(w1) ** 2 + (np.abs(w2) ** 2) ** kf < norm)
        vals = np.where(inside, w1**e1 * w2**e2, 0.0)
    return (
        float(vals.real.sum()),
        float(vals.imag.sum()),
        float((np.abs(vals) ** 2).sum()),
    )


def reproducing_check(
    spec: DomainSpec,
    k,
    family: str,
    exponents,
    samples: int,
    seed: int,
    vol: float | None = None,
    workers: int = 1,
    tolerance: float = 0.0,
) -> VerifyReport:
    """Check that integrating the polarized kernel pinned at the centre
    against a monomial f recovers f(0).

    At the centre the polarized series collapses to the constant |a_0|^2, so
    the check is |a_0|^2 * integral(f) = f(0) for each monomial."""
    if family not in ("y", "e"):
        raise InvalidParams("family must be 'y' or 'e'")
    exps = tuple(int(e) for e in (exponents if hasattr(exponents, "__len__") else (exponents,)))
    if len(exps) != (1 if family == "y" else 2):
        raise InvalidParams(f"family {family!r} needs {1 if family == 'y' else 2} exponents")
    if sum(exps) > 2:
        raise InvalidParams("monomial degree must be <= 2")
    if n_coords(spec) + (1 if family == "y" else 2) > 4:
        raise InvalidParams("reproducing check is limited to total dimension <= 4")
    if vol is None:
        vol = known_volume(spec)
        if vol is None:
            raise InvalidParams(f"pass vol= for {spec}")
    k = Fraction(k)
    re, im, sq = _run_shards(
        _reproducing_shard, samples, seed, workers, (spec, float(k), family, exps)
    )
    nfib = 1 if family == "y" else 2
    n = n_coords(spec)
    scale = _measure_density(spec) * (1 / math.pi) ** nfib * 4.0 ** (n + nfib)
    mean = complex(re / samples, im / samples)
    var = max(sq / samples - abs(mean) ** 2, 0.0)
    if family == "y":
        k0 = float(coeff_y_exact(spec, k, 0)) / vol
    else:
        k0 = coeff_e_exact(spec, k, 0, 0) / vol
    est = k0 * scale * abs(mean) if any(exps) else k0 * scale * mean.real
    err = k0 * scale * math.sqrt(var / samples)
    target = 1.0 if not any(exps) else 0.0
    return make_report(
        f"reproducing[{family},{spec},k={k},f=W^{exps}]",
        est,
        target,
        tolerance,
        err,
        samples,
        seed,
    )


def classical_specs(max_dim: int) -> list[DomainSpec]:
    """Classical catalog members with complex dimension at most max_dim."""
    return [
        s
        for s in catalog()
        if s.kind in ("I", "II", "III", "IV") and invariants(s).n <= max_dim
    ]
