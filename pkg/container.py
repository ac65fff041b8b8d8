"""Dependency injection container configuration."""
from typing import Optional

from injector import Injector, Module, provider, singleton
from interfaces.i_barycenter_solver import IBarycenterSolver
from interfaces.i_lipschitz_estimator import ILipschitzEstimator
from interfaces.i_lipschitz_extender import ILipschitzExtender
from interfaces.i_payload_reader import IPayloadReader
from interfaces.i_report_writer import IReportWriter
from interfaces.i_scenario_runner import IScenarioRunner
from interfaces.i_spectrum_analyzer import ISpectrumAnalyzer
from interfaces.i_triangulator import ITriangulator
from interfaces.i_word_enumerator import IWordEnumerator
from models.settings import Settings
from services.barycenter_solver import BarycenterSolver
from services.delaunay_triangulator import DelaunayTriangulator
from services.lipschitz_estimator import LipschitzEstimator
from services.lipschitz_extender import LipschitzExtender
from services.payload_reader import PayloadReader
from services.report_writer import ReportWriter
from services.scenario_runner import ScenarioRunner
from services.spectrum_analyzer import SpectrumAnalyzer
from services.word_enumerator import WordEnumerator


class HyperstretchModule(Module):
    """DI module for hyperstretch services."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings()

    @singleton
    @provider
    def provide_settings(self) -> Settings:
        """Provide the shared tolerances and caps."""
        return self.settings

    @singleton
    @provider
    def provide_barycenter_solver(self, settings: Settings) -> IBarycenterSolver:
        """Provide barycenter solver service."""
        return BarycenterSolver(settings)

    @singleton
    @provider
    def provide_word_enumerator(self, settings: Settings) -> IWordEnumerator:
        """Provide word enumerator service."""
        return WordEnumerator(settings)

    @singleton
    @provider
    def provide_spectrum_analyzer(self, enumerator: IWordEnumerator, settings: Settings) -> ISpectrumAnalyzer:
        """Provide spectrum analyzer service."""
        return SpectrumAnalyzer(enumerator, settings)

    @singleton
    @provider
    def provide_lipschitz_extender(
        self,
        barycenter_solver: IBarycenterSolver,
        settings: Settings
    ) -> ILipschitzExtender:
        """Provide one-point extension service."""
        return LipschitzExtender(barycenter_solver, settings)

    @singleton
    @provider
    def provide_lipschitz_estimator(self, settings: Settings) -> ILipschitzEstimator:
        """Provide Lipschitz estimator service."""
        return LipschitzEstimator(settings)

    @singleton
    @provider
    def provide_triangulator(self, settings: Settings) -> ITriangulator:
        """Provide Delaunay triangulator service."""
        return DelaunayTriangulator(settings)

    @singleton
    @provider
    def provide_scenario_runner(
        self,
        enumerator: IWordEnumerator,
        spectrum: ISpectrumAnalyzer,
        extender: ILipschitzExtender,
        estimator: ILipschitzEstimator,
        settings: Settings
    ) -> IScenarioRunner:
        """Provide scenario runner service."""
        return ScenarioRunner(enumerator, spectrum, extender, estimator, settings)

    @singleton
    @provider
    def provide_payload_reader(self) -> IPayloadReader:
        """Provide payload reader service."""
        return PayloadReader()

    @singleton
    @provider
    def provide_report_writer(self) -> IReportWriter:
        """Provide report writer service."""
        return ReportWriter()


def create_container(settings: Optional[Settings] = None) -> Injector:
    """Create and configure DI container."""
    return Injector([HyperstretchModule(settings)])
