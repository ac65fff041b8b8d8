"""Interface for the reproducible worked examples."""
from abc import ABC, abstractmethod
from typing import Sequence

from models.scenario import ScenarioConfig, ScenarioReport


class IScenarioRunner(ABC):
    """Protocol for scenario runs; every report lists its checks with tolerances."""

    @abstractmethod
    def run(self, config: ScenarioConfig) -> ScenarioReport:
        """
        Dispatch on ``config.scenario``.

        Args:
            config: Scenario id and parameters

        Returns:
            ScenarioReport
        """
        pass

    @abstractmethod
    def run_ex97(self, k_max: int) -> ScenarioReport:
        """
        Exact traces of j(ω_k) and the rotation construction of ρ_k(ω_k).

        Args:
            k_max: Largest k, at most the configured cap

        Returns:
            Per-k traces, translation lengths and ratio bounds
        """
        pass

    @abstractmethod
    def run_ex91(self, n: int, m: int, length: int) -> ScenarioReport:
        """
        Schottky generators α_k, β_k for k = N … N + m and their drift scan.

        Args:
            n: First index N
            m: Number of extra generators
            length: Word-ball length of the drift scan

        Returns:
            Length residuals and drift summary
        """
        pass

    @abstractmethod
    def run_ex94(self, length: int, grid: int, seed: int = 0) -> ScenarioReport:
        """
        Triangle reflection groups (π/3, π/2, π/14) and (π/3, π/2, π/7).

        Args:
            length: Word-ball length of the ratio supremum
            grid: Sampling density of the stretch map
            seed: Seed of the global Lipschitz sampler

        Returns:
            C₀, relation checks, C′_L and Lipschitz samples
        """
        pass

    @abstractmethod
    def run_ex81(self, t: float, big_t: float) -> ScenarioReport:
        """
        Three points at distance t from o sent to three points at distance T.

        Args:
            t: Source radius
            big_t: Target radius

        Returns:
            Lip(φ) and the one-point extension at o
        """
        pass

    @abstractmethod
    def run_ex98(self, k_values: Sequence[int], delta: float, length: int) -> ScenarioReport:
        """
        Once-punctured torus group against translations of length δ meeting at r_k.

        Args:
            k_values: Values of k (d(p, r_k) = d(q, r_k) = k)
            delta: Translation length of ρ_k(α) and ρ_k(β)
            length: Word-ball length of the ratio supremum

        Returns:
            Quadrilateral Q_k data and C′_L(j, ρ_k) per k
        """
        pass
