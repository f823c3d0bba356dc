"""Axial wave integrals of the correction field: quadrature and asymptotics.

The correction field reduces to two line integrals along the beam axis,

    I(+/-)(rho, z) = integral_0^L dz' e^{+/- i k z'} e^{3 i k s} / s,
    s = sqrt(rho^2 + (z - z')^2),

whose integrands oscillate with phase k * w(z'), w(z') = (+/-)z' + 3 s.  The
phase is stationary at z0' = z -/+ rho/sqrt(8); when that point lies inside
(0, L) the leading stationary-phase value is

    sqrt(pi / (sqrt(2) k rho)) * exp(i ((+/-) k z + sqrt(8) k rho + pi/4)),

and the integral is negligible otherwise.  ``eval_numeric`` computes the
integral to a requested relative tolerance; ``eval_asymptotic`` returns the
closed form, gated exactly by the stationary-point support.

Numerical strategy: split [0, L] at the stationary point, partition each side
into segments whose phase increment is at most pi (using the monotonicity of
w' to bound the local rate by the endpoint values) and whose length does not
exceed the local envelope scale s, apply a fixed Gauss-Legendre rule per
segment with an embedded lower-order rule as error estimate, accumulate with
compensated summation, and bisect segments that fail the two-rule test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ConvergenceError, DomainError

_GL_HI = np.polynomial.legendre.leggauss(16)
_GL_LO = np.polynomial.legendre.leggauss(8)
_CHUNK = 131072  # segments per evaluation block
_MAX_ROUNDS = 40


@dataclass(frozen=True)
class PhaseModel:
    """Geometry of one axial integral: point (rho, z), wavenumber, length, sign."""

    rho: float
    z: float
    k: float
    L: float
    sign: int

    def __post_init__(self):
        if self.rho <= 0:
            raise DomainError("rho must be positive (the integrand is axis-singular)")
        if self.k <= 0:
            raise DomainError("k must be positive")
        if self.L < 0:
            raise DomainError("L must be non-negative")
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 or -1")


@dataclass(frozen=True)
class IntegralResult:
    value: complex
    method: str  # "numeric" | "asymptotic"
    error_estimate: float
    stationary_point: Optional[float]
    in_support: bool
    low_accuracy: bool = False


def phase_function(model: PhaseModel, zp):
    """Phase w and its first two derivatives at z' (scalar or array).

    w = sign*z' + 3 s;  w' = sign + 3 (z'-z)/s;  w'' = 3 rho^2 / s^3.
    """
    zp = np.asarray(zp, dtype=float)
    d = zp - model.z
    s = np.hypot(model.rho, d)
    w = model.sign * zp + 3.0 * s
    w1 = model.sign + 3.0 * d / s
    w2 = 3.0 * model.rho**2 / s**3
    if zp.ndim == 0:
        return float(w), float(w1), float(w2)
    return w, w1, w2


def stationary_point(model: PhaseModel) -> tuple[float, bool]:
    """Location z0' where w' vanishes, and whether 0 < z0' < L."""
    z0 = float(model.z - model.sign * model.rho / math.sqrt(8.0))
    return z0, bool(0.0 < z0 < model.L)


def fresnel_width(model: PhaseModel) -> float:
    """Transition-zone scale sqrt(rho/k) around a support boundary."""
    return math.sqrt(model.rho / model.k)


def _near_boundary(model: PhaseModel) -> bool:
    z0, _ = stationary_point(model)
    width = 3.0 * fresnel_width(model)
    return bool(abs(z0) < width or abs(z0 - model.L) < width)


def eval_asymptotic(model: PhaseModel) -> IntegralResult:
    """Leading stationary-phase closed form, exactly zero out of support."""
    z0, inside = stationary_point(model)
    krho = model.k * model.rho
    if inside:
        modulus = math.sqrt(math.pi / (math.sqrt(2.0) * krho))
        phase = model.sign * model.k * model.z + math.sqrt(8.0) * krho + math.pi / 4.0
        value = modulus * complex(math.cos(phase), math.sin(phase))
    else:
        value = 0.0 + 0.0j
    return IntegralResult(
        value=value,
        method="asymptotic",
        error_estimate=krho**-0.5,
        stationary_point=z0,
        in_support=inside,
        low_accuracy=_near_boundary(model),
    )


# pi to extended precision; the anchor phases below wrap k*w ~ 1e5..1e9 rad,
# so the modulus must be accurate well beyond double.
_TWO_PI_LD = 2.0 * np.longdouble("3.141592653589793238462643383279502884")


def _rule_values(
    model: PhaseModel,
    half: np.ndarray,
    d_a: np.ndarray,
    s_a: np.ndarray,
    nodes: np.ndarray,
    weights: np.ndarray,
) -> np.ndarray:
    """One Gauss-Legendre rule per segment, phases relative to the anchor.

    The phase difference to the segment midpoint is evaluated in the
    cancellation-free form k*dx*(sign + 3 (d_x + d_a)/(s_x + s_a)), keeping
    node phases O(pi) regardless of how many radians k*w has accumulated.
    """
    dx = half[:, None] * nodes[None, :]
    d_x = d_a[:, None] + dx
    s_x = np.hypot(model.rho, d_x)
    bracket = model.sign + 3.0 * (d_x + d_a[:, None]) / (s_x + s_a[:, None])
    vals = np.exp(1j * (model.k * dx * bracket)) / s_x
    return (vals @ weights) * half


def _allowed_length(model: PhaseModel, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    # w' is strictly increasing, so the phase rate k|w'| peaks at an endpoint.
    _, w1_lo, _ = phase_function(model, lo)
    _, w1_hi, _ = phase_function(model, hi)
    rate = model.k * np.maximum(np.abs(w1_lo), np.abs(w1_hi))
    phase_cap = math.pi / np.maximum(rate, 1e-300)
    s_lo = np.hypot(model.rho, model.z - lo)
    s_hi = np.hypot(model.rho, model.z - hi)
    envelope_cap = np.minimum(s_lo, s_hi)
    straddles = (lo < model.z) & (model.z < hi)
    envelope_cap = np.where(straddles, model.rho, envelope_cap)
    return np.minimum(phase_cap, envelope_cap)


def _build_segments(model: PhaseModel, max_segments: int) -> tuple[np.ndarray, np.ndarray, bool]:
    """Phase/envelope-bounded partition of [0, L]. Returns (lo, hi, exhausted)."""
    pts = [0.0, model.L]
    z0, inside = stationary_point(model)
    if inside:
        pts.append(z0)
    if 0.0 < model.z < model.L:
        pts.append(model.z)
    pts = sorted(set(pts))
    lo = np.asarray(pts[:-1], dtype=float)
    hi = np.asarray(pts[1:], dtype=float)
    done_lo, done_hi = [], []
    n_done = 0
    while lo.size:
        ok = (hi - lo) <= _allowed_length(model, lo, hi)
        done_lo.append(lo[ok])
        done_hi.append(hi[ok])
        n_done += int(np.count_nonzero(ok))
        lo, hi = lo[~ok], hi[~ok]
        if n_done + 2 * lo.size > max_segments:
            done_lo.append(lo)
            done_hi.append(hi)
            return np.concatenate(done_lo), np.concatenate(done_hi), True
        if lo.size:
            mid = 0.5 * (lo + hi)
            lo = np.concatenate([lo, mid])
            hi = np.concatenate([mid, hi])
    return np.concatenate(done_lo), np.concatenate(done_hi), False


def _integrate_segments(
    model: PhaseModel, lo: np.ndarray, hi: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Per-segment GL-16 values and |GL-16 - GL-8| error estimates.

    The midpoint anchor phase k*w(mid) is computed in extended precision and
    reduced mod 2 pi, so both the values and the two-rule error estimates stay
    below the double-precision phase-roundoff floor of the naive evaluation.
    """
    values = np.empty(lo.size, dtype=complex)
    errors = np.empty(lo.size, dtype=float)
    x_hi, w_hi = _GL_HI
    x_lo, w_lo = _GL_LO
    for start in range(0, lo.size, _CHUNK):
        sl = slice(start, min(start + _CHUNK, lo.size))
        mid = 0.5 * (lo[sl] + hi[sl])
        half = 0.5 * (hi[sl] - lo[sl])
        d_ld = mid.astype(np.longdouble) - np.longdouble(model.z)
        s_ld = np.sqrt(np.longdouble(model.rho) ** 2 + d_ld * d_ld)
        w_ld = np.longdouble(model.sign) * mid.astype(np.longdouble) + 3.0 * s_ld
        anchor = np.exp(1j * np.mod(np.longdouble(model.k) * w_ld, _TWO_PI_LD).astype(float))
        d_a = d_ld.astype(float)
        s_a = s_ld.astype(float)
        v_hi = _rule_values(model, half, d_a, s_a, x_hi, w_hi)
        v_lo = _rule_values(model, half, d_a, s_a, x_lo, w_lo)
        values[sl] = v_hi * anchor
        errors[sl] = np.abs(v_hi - v_lo)
    return values, errors


def _compensated_total(values: np.ndarray) -> complex:
    return complex(math.fsum(values.real), math.fsum(values.imag))


def eval_numeric(
    model: PhaseModel,
    tol: float = 1e-9,
    max_segments: int = 2_000_000,
) -> IntegralResult:
    """Adaptive phase-partitioned quadrature of the axial integral.

    ``tol`` is the requested relative tolerance of the complex value; the
    a-posteriori ``error_estimate`` is the summed two-rule segment estimate
    (absolute).  Raises :class:`ConvergenceError` carrying the best value if
    the segment budget or the refinement rounds are exhausted.
    """
    if not (1e-14 < tol < 1e-2):
        raise DomainError("tol must lie in (1e-14, 1e-2)")
    z0, inside = stationary_point(model)
    if model.L == 0.0:
        return IntegralResult(0.0 + 0.0j, "numeric", 0.0, z0, inside)

    lo, hi, exhausted = _build_segments(model, max_segments)
    values, errors = _integrate_segments(model, lo, hi)
    total = _compensated_total(values)
    err_total = math.fsum(errors)
    if exhausted:
        raise ConvergenceError(
            f"segment budget {max_segments} exhausted while partitioning",
            best_value=total,
            error_estimate=err_total,
        )

    for _ in range(_MAX_ROUNDS):
        target = tol * abs(total) if abs(total) > 0 else tol
        if err_total <= target:
            return IntegralResult(total, "numeric", err_total, z0, inside)
        bad = errors > target / max(lo.size, 1)
        if not bad.any():
            bad = errors == errors.max()
        if lo.size + int(np.count_nonzero(bad)) > max_segments:
            break
        mid = 0.5 * (lo[bad] + hi[bad])
        ref_lo = np.concatenate([lo[bad], mid])
        ref_hi = np.concatenate([mid, hi[bad]])
        ref_values, ref_errors = _integrate_segments(model, ref_lo, ref_hi)
        lo = np.concatenate([lo[~bad], ref_lo])
        hi = np.concatenate([hi[~bad], ref_hi])
        values = np.concatenate([values[~bad], ref_values])
        errors = np.concatenate([errors[~bad], ref_errors])
        total = _compensated_total(values)
        err_total = math.fsum(errors)

    raise ConvergenceError(
        f"relative tolerance {tol} not reached (estimate {err_total:.3e})",
        best_value=total,
        error_estimate=err_total,
    )
