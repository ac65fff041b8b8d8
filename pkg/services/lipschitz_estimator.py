"""Sampled local and global Lipschitz constants."""
import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from geometry.hgeom import dist, geodesic_point
from interfaces.i_barycenter_solver import PointMap
from interfaces.i_lipschitz_estimator import ILipschitzEstimator, Sampler
from models.errors import DomainError, HyperstretchError
from models.points import HPoint
from models.settings import Settings
from models.stretch import LipschitzEstimate

logger = logging.getLogger(__name__)

# Pairs closer than this carry no information about the ratio
MIN_SEPARATION = 1e-12


def _ratio(f_x: HPoint, f_y: HPoint, x: HPoint, y: HPoint) -> Optional[float]:
    d = dist(x, y)
    if d <= MIN_SEPARATION:
        return None
    return dist(f_x, f_y) / d


def _evaluate(f: PointMap, p: HPoint) -> Optional[HPoint]:
    try:
        return f(p)
    except DomainError:
        return None


class LipschitzEstimator(ILipschitzEstimator):
    """Max-ratio estimators; both results are lower bounds of the true constants."""

    def __init__(self, settings: Settings):
        self.settings = settings

    def local_lip_estimate(self, f: PointMap, p: HPoint,
                           radii: Optional[Sequence[float]] = None) -> LipschitzEstimate:
        """
        Max ratio d(f(x), f(y)) / d(x, y) over rings of shrinking radius around p.

        Args:
            f: Map of H² (may raise DomainError outside its domain)
            p: Centre of the rings
            radii: Ring radii; the settings' radii when omitted

        Returns:
            Estimate at the smallest radius, with the per-radius maxima
        """
        if p.dim != 2:
            raise HyperstretchError("Local estimates sample rings in H²")
        radii = sorted(radii or self.settings.local_radii, reverse=True)
        if any(r <= 0 for r in radii):
            raise DomainError(f"Radii must be positive, got {radii}")
        centre = f(p)
        n = self.settings.local_directions
        per_scale: List[Tuple[float, float]] = []
        samples = 0
        for r in radii:
            ring = [geodesic_point(p, 2 * math.pi * k / n, r) for k in range(n)]
            images = [_evaluate(f, q) for q in ring]
            pairs = [(p, centre, q, fq) for q, fq in zip(ring, images)]
            # opposite points see the derivative without the first-order curvature term
            pairs += [(ring[k], images[k], ring[k + n // 2], images[k + n // 2]) for k in range(n // 2)]
            best = 0.0
            for x, fx, y, fy in pairs:
                if fx is None or fy is None:
                    continue
                ratio = _ratio(fx, fy, x, y)
                if ratio is not None:
                    samples += 1
                    best = max(best, ratio)
            per_scale.append((r, best))
        logger.debug("Local Lipschitz estimate at %s: %s", p, per_scale)
        return LipschitzEstimate(per_scale[-1][1], per_scale, samples)

    def global_lip_estimate(self, f: PointMap, sampler: Sampler, pairs: int,
                            seed: Optional[int] = None) -> LipschitzEstimate:
        """
        Max ratio over random pairs drawn from ``sampler``.

        Args:
            f: Map to estimate
            sampler: Draws a point from a numpy Generator
            pairs: Number of pairs to draw
            seed: Seed for the generator

        Returns:
            Lower bound of the Lipschitz constant and the number of usable pairs
        """
        if pairs < 1:
            raise HyperstretchError("Need at least one pair")
        rng = np.random.default_rng(seed)
        best, samples = 0.0, 0
        for _ in range(pairs):
            x, y = sampler(rng), sampler(rng)
            fx, fy = _evaluate(f, x), _evaluate(f, y)
            if fx is None or fy is None:
                continue
            ratio = _ratio(fx, fy, x, y)
            if ratio is not None:
                samples += 1
                best = max(best, ratio)
        return LipschitzEstimate(best, [], samples)
