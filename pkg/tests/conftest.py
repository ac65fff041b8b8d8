import math

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from container import create_container
from geometry.moebius import compose, inverse, translation
from interfaces.i_barycenter_solver import IBarycenterSolver
from interfaces.i_lipschitz_estimator import ILipschitzEstimator
from interfaces.i_lipschitz_extender import ILipschitzExtender
from interfaces.i_payload_reader import IPayloadReader
from interfaces.i_report_writer import IReportWriter
from interfaces.i_scenario_runner import IScenarioRunner
from interfaces.i_spectrum_analyzer import ISpectrumAnalyzer
from interfaces.i_triangulator import ITriangulator
from interfaces.i_word_enumerator import IWordEnumerator
from models.isometry import Isometry
from models.points import HPoint

settings.register_profile(
    "hyperstretch",
    max_examples=200,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("hyperstretch")

SEED = 20240611


def random_sl2(rng: np.random.Generator, spread: float = 2.0) -> Isometry:
    """Orientation-preserving real isometry with entries of moderate size."""
    while True:
        a, b, c, d = rng.uniform(-spread, spread, size=4)
        det = a * d - b * c
        if abs(det) < 0.1:
            continue
        if det < 0:
            a, b = -a, -b
        return Isometry.of(float(a), float(b), float(c), float(d))


def random_hyperbolic(rng: np.random.Generator, low: float = 0.5, high: float = 3.0) -> Isometry:
    """Conjugate of a translation with length drawn from [low, high]."""
    h = random_sl2(rng, 1.5)
    return compose(compose(h, translation(float(rng.uniform(low, high)))), inverse(h))


def random_point(rng: np.random.Generator, spread: float = 2.0) -> HPoint:
    return HPoint.plane(float(rng.uniform(-spread, spread)), float(math.exp(rng.uniform(-1.0, 1.0))))


@pytest.fixture(scope="session")
def container():
    return create_container()


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture
def barycenter_solver(container) -> IBarycenterSolver:
    return container.get(IBarycenterSolver)


@pytest.fixture
def enumerator(container) -> IWordEnumerator:
    return container.get(IWordEnumerator)


@pytest.fixture
def spectrum(container) -> ISpectrumAnalyzer:
    return container.get(ISpectrumAnalyzer)


@pytest.fixture
def extender(container) -> ILipschitzExtender:
    return container.get(ILipschitzExtender)


@pytest.fixture
def estimator(container) -> ILipschitzEstimator:
    return container.get(ILipschitzEstimator)


@pytest.fixture
def triangulator(container) -> ITriangulator:
    return container.get(ITriangulator)


@pytest.fixture
def scenario_runner(container) -> IScenarioRunner:
    return container.get(IScenarioRunner)


@pytest.fixture
def reader(container) -> IPayloadReader:
    return container.get(IPayloadReader)


@pytest.fixture
def writer(container) -> IReportWriter:
    return container.get(IReportWriter)
