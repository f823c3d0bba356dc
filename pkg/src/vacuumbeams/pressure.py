"""Time-averaged vacuum correction to intensity and mirror force.

Observable extraction happens here: the time-averaged Poynting magnitude from
complex amplitudes is (1/2)|E x B* + E* x B|.  The order-lambda cross terms
between background and correction oscillate at 2*omega and average away; the
first surviving contribution is order lambda^2, the product of the two
correction fields.  Integrated over the beam cross section at the far end
(z = L, where only the right-moving conical wave is in support) it gives

    (16 sqrt(2) / 3) pi^2 lambda^2 |E0|^6 |r|^2 omega^3 w0^4
        (1 - e^{-3 (R/w0)^2})^2 R,

a natural-unit power equal (with c = 1) to the force on the end mirror, to be
compared with the classical radiation-pressure force 2 P / c.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .background import BeamScenario, linear_field
from .correction import correction_at
from .errors import UnsupportedGeometryError


@dataclass(frozen=True)
class PressureReport:
    """Classical force, vacuum corrections at both ends, dimensionless factor."""

    classical_force: float  # N
    correction_end: float  # N, at z = L
    correction_origin: float  # N, at z = 0; |r|^2 * correction_end exactly
    dimensionless_factor: float


def classical_force(scenario: BeamScenario) -> float:
    """Classical radiation-pressure force 2 P / c on a mirror, in newtons."""
    return 2.0 * scenario.power_si / scenario.constants.c_si


def _support_condition(scenario: BeamScenario) -> None:
    if scenario.L <= scenario.R / math.sqrt(8.0):
        raise UnsupportedGeometryError(
            "closed form requires L > R/sqrt(8) so the whole cross section "
            "is inside the right-moving wave's support at z = L"
        )


def poynting_correction_end(scenario: BeamScenario) -> float:
    """Cross-section-integrated order-lambda^2 Poynting flux at z = L, as force (N)."""
    _support_condition(scenario)
    lam = scenario.constants.lambda_coupling
    g = 1.0 - math.exp(-3.0 * (scenario.R / scenario.w0) ** 2)
    power_natural = (
        (16.0 * math.sqrt(2.0) / 3.0)
        * math.pi**2
        * lam**2
        * scenario.amplitude**6
        * abs(scenario.r) ** 2
        * scenario.omega**3
        * scenario.w0**4
        * g**2
        * scenario.R
    )
    return scenario.units.power_to_si(power_natural) / scenario.constants.c_si


def pressure_correction_factor(scenario: BeamScenario) -> float:
    """Dimensionless vacuum correction to the radiation-pressure force.

    The bracket (64 sqrt(2) / (3 * 45^2)) |r|^2 (1 - e^{-3 (R/w0)^2})^2
    (r0/R)^4 (w0^4 / (lambda_L^3 R)) (P/P_e)^2; multiplying by 2P/c
    reproduces :func:`poynting_correction_end`.
    """
    _support_condition(scenario)
    r_m = scenario.units.length_to_si(scenario.R)
    w0_m = scenario.units.length_to_si(scenario.w0)
    lam_l_m = scenario.wavelength_si
    g = 1.0 - math.exp(-3.0 * (scenario.R / scenario.w0) ** 2)
    return (
        (64.0 * math.sqrt(2.0) / (3.0 * 45.0**2))
        * abs(scenario.r) ** 2
        * g**2
        * (scenario.constants.r0 / r_m) ** 4
        * (w0_m**4 / (lam_l_m**3 * r_m))
        * (scenario.power_si / scenario.constants.p_e) ** 2
    )


def pressure_report(scenario: BeamScenario) -> PressureReport:
    """Assemble the force report; correction_origin is |r|^2 times the end value."""
    end = poynting_correction_end(scenario)
    return PressureReport(
        classical_force=classical_force(scenario),
        correction_end=end,
        correction_origin=abs(scenario.r) ** 2 * end,
        dimensionless_factor=pressure_correction_factor(scenario),
    )


def poynting_cross_term(
    rho: float, z: float, t: float, scenario: BeamScenario, mode: str = "asymptotic"
) -> float:
    """Order-lambda Poynting cross term (z-component) at (rho, z, t).

    Re(E0x dBy* + dEx B0y*): oscillates at 2*omega, so its average over one
    optical period vanishes and it contributes nothing to the mean pressure.
    """
    sample = linear_field(rho, z, t, scenario)
    corr = correction_at(rho, z, t, scenario, mode=mode)
    e0x = complex(sample.E[0])
    b0y = complex(sample.B[1])
    return (e0x * corr.delta_by.conjugate() + corr.delta_ex * b0y.conjugate()).real
