"""Interface for length-spectrum and drift scans over word balls."""
from abc import ABC, abstractmethod

from models.points import HPoint
from models.words import (CriticalExponentEstimate, DriftScanResult, RatioSupResult,
                          Representation, WordlengthBounds)


class ISpectrumAnalyzer(ABC):
    """Protocol for comparing two representations of the same group."""

    @abstractmethod
    def ratio_sup(self, j: Representation, rho: Representation, max_length: int) -> RatioSupResult:
        """
        Supremum of λ(ρ(γ))/λ(j(γ)) over classes with j(γ) hyperbolic and |γ| ≤ L.

        Args:
            j: Reference representation
            rho: Compared representation
            max_length: L

        Returns:
            RatioSupResult, explicitly empty when no j(γ) is hyperbolic
        """
        pass

    @abstractmethod
    def drift_scan(self, j: Representation, rho: Representation, max_length: int) -> DriftScanResult:
        """
        Scan μ(j(γ)) − μ(ρ(γ)) over the ball.

        Args:
            j: Reference representation
            rho: Compared representation
            max_length: L

        Returns:
            DriftScanResult with per-length minima, a heuristic verdict and a (C, D) fit
        """
        pass

    @abstractmethod
    def wordlength_distance_bounds(self, rep: Representation, p: HPoint, max_length: int) -> WordlengthBounds:
        """
        Compare d(p, γp) with 2 log(1 + wl(γ)) on a parabolic stabilizer.

        Args:
            rep: Generators that are parabolic or elliptic with a common ideal fixed point
            p: Basepoint
            max_length: L

        Returns:
            WordlengthBounds
        """
        pass

    @abstractmethod
    def critical_exponent_estimate(self, j: Representation, p: HPoint, radius: float,
                                   max_length: int) -> CriticalExponentEstimate:
        """
        (1/R) log #{orbit points of the L-ball within R of p}; biased low.

        Args:
            j: Representation
            p: Basepoint
            radius: R > 0
            max_length: L

        Returns:
            CriticalExponentEstimate
        """
        pass
