"""Tolerances and caps shared by all services."""
from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class Settings:
    """Numerical configuration, bound as a singleton in the DI container."""
    # Isometry classification band, relative to max(1, Frobenius norm)
    classify_eps: float = 1e-9
    # Canonical-matrix rounding used for hashing and ball deduplication
    dedup_digits: int = 9
    dedup_recheck: float = 1e-12

    # Word ball caps
    max_free_length: int = 14
    max_reflection_length: int = 16
    enumeration_workers: int = 1
    ratio_report_top: int = 10

    # Scenario caps
    max_trace_k: int = 6
    max_schottky_n: int = 200

    # Barycenter fixed-point iteration
    barycenter_max_iter: int = 200
    barycenter_step_tol: float = 1e-12

    # One-point extension (subgradient, then polish)
    extension_iterations: int = 500
    extension_polish_tol: float = 1e-12

    # Sampled Lipschitz estimators
    local_radii: Tuple[float, ...] = (1e-2, 1e-3)
    local_directions: int = 16

    # Hull predicate promotion threshold (relative to the operand scale)
    hull_promotion: float = 1e-10
    # Four lifted sites whose orientation determinant is below this fraction of
    # its permanent count as one circle, horocycle or hypercycle
    cocircular_tolerance: float = 1e-10
    certificate_slack: float = 1e-10
