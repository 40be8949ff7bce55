from fractions import Fraction

import pytest

from coneasym import acceptance
from coneasym.conesolve import RadialProfile
from coneasym.spectra import circle_spectrum, sphere_spectrum


@pytest.fixture(scope="session")
def corpus():
    return acceptance.corpus()


@pytest.fixture(scope="session")
def circle_half():
    return circle_spectrum(radius=Fraction(1, 2), j_max=8)


@pytest.fixture(scope="session")
def sphere2():
    return sphere_spectrum(2, 14)


@pytest.fixture(scope="session")
def sphere3():
    return sphere_spectrum(3, 14)


@pytest.fixture(scope="session")
def bump12():
    return RadialProfile("bump", 1.0, 2.0)
