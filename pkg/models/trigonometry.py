"""Result records of the closed-form trigonometry helpers."""
from dataclasses import dataclass
from typing import List


@dataclass(frozen=True)
class TriangleSides:
    """Sides of a triangle with a right angle at B; a, b, c are opposite A, B, C."""
    a: float
    b: float
    c: float


@dataclass(frozen=True)
class HoroDecay:
    """Two points pushed a depth t towards the centre of their horocycle."""
    horocyclic: float        # e^{-t} L₀
    distance: float          # hyperbolic distance at depth t
    initial_distance: float  # hyperbolic distance at depth 0
    bound_constant: float    # D in e^{-t} d ≤ d_t ≤ D e^{-t} d


@dataclass(frozen=True)
class TwoSpikes:
    distance: float
    asymptotic: float  # L + ξ² + η²
    residual: float    # distance − asymptotic


@dataclass
class ClosingReport:
    """Comparison of a periodic broken line with the translation length of its period."""
    translation_length: float
    period_length: float
    discrepancy: float
    tolerance: float
    violation: bool
    min_segment: float
    min_angle: float
    segment_lengths: List[float]
