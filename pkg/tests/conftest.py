import pytest

from vacuumbeams import BeamScenario
from vacuumbeams.units import UnitSystem, codata_constants


@pytest.fixture(scope="session")
def constants():
    return codata_constants()


@pytest.fixture(scope="session")
def natural_units(constants):
    return UnitSystem.natural(constants)


@pytest.fixture(scope="session")
def toy_scenario(constants, natural_units):
    """Collimated natural-unit beam (omega = 1, 1/(omega w0) = 5e-4)."""
    return BeamScenario(
        amplitude=1.3,
        w0=2000.0,
        R=4000.0,
        L=50000.0,
        omega=1.0,
        r=0.6 + 0.3j,
        units=natural_units,
        constants=constants,
    )


@pytest.fixture(scope="session")
def ligo_scenario():
    return BeamScenario.from_si(
        power_w=750e3, wavelength_m=1000e-9, w0_m=0.1, R_m=0.1, L_m=4000.0, r=1.0
    )
