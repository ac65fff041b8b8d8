"""Fréchet barycenters by fixed-point iteration on the hyperboloid."""
import logging
import math
from itertools import combinations
from typing import List, Sequence

import numpy as np

from geometry import hyperboloid
from geometry.hgeom import dist
from interfaces.i_barycenter_solver import Bump, IBarycenterSolver, PointMap
from models.errors import HyperstretchError
from models.points import HPoint
from models.settings import Settings
from models.weighted import WeightedPointSet, check_weights

logger = logging.getLogger(__name__)

# Tolerance on Σ ψᵢ(x) = 1 for partitions evaluated in floating point
PARTITION_TOLERANCE = 1e-9


def _d_coth_d(d: float) -> float:
    return 1.0 if d < 1e-8 else d / math.tanh(d)


class BarycenterSolver(IBarycenterSolver):
    """Karcher iteration x ← exp_x(τ Σ αᵢ log_x pᵢ).

    Φ is strongly convex (Hessian of ½d² between 1 and d coth d), so the damped
    step τ = 2/(1 + Σ αᵢ dᵢ coth dᵢ) contracts towards the unique minimizer.
    """

    def __init__(self, settings: Settings):
        self.settings = settings

    def barycenter(self, weighted: WeightedPointSet) -> HPoint:
        """
        Weighted Fréchet barycenter, the unique minimizer of Φ(x) = Σ αᵢ d(x, pᵢ)².

        Args:
            weighted: Points of one dimension with weights summing to 1

        Returns:
            Barycenter; a point carrying all the weight is returned as is
        """
        coords = [hyperboloid.to_coords(p) for p in weighted.points]
        return hyperboloid.from_coords(self._solve(coords, weighted.weights))

    def _solve(self, coords: List[np.ndarray], weights: Sequence[float]) -> np.ndarray:
        active = [(c, w) for c, w in zip(coords, weights) if w > 0]
        if len(active) == 1:
            return active[0][0]

        x = hyperboloid.project(sum(w * c for c, w in active))
        for iteration in range(1, self.settings.barycenter_max_iter + 1):
            direction = np.zeros_like(x)
            curvature = 0.0
            for c, w in active:
                direction += w * hyperboloid.log_map(x, c)
                curvature += w * _d_coth_d(hyperboloid.distance(x, c))
            step = min(1.0, 2.0 / (1.0 + curvature))
            move = step * direction
            x = hyperboloid.exp_map(x, move)
            if hyperboloid.lorentz_norm(move) < self.settings.barycenter_step_tol:
                logger.debug("Barycenter of %d points converged after %d iterations",
                             len(active), iteration)
                return x
        logger.warning("Barycenter iteration hit the limit of %d steps",
                       self.settings.barycenter_max_iter)
        return x

    def gradient_norm(self, weighted: WeightedPointSet, x: HPoint) -> float:
        """
        Riemannian gradient norm of Φ at x.

        Args:
            weighted: Points and weights defining Φ
            x: Point at which to evaluate

        Returns:
            |∇Φ(x)|, zero exactly at the barycenter
        """
        base = hyperboloid.to_coords(x)
        grad = np.zeros_like(base)
        for p, w in zip(weighted.points, weighted.weights):
            grad -= 2 * w * hyperboloid.log_map(base, hyperboloid.to_coords(p))
        return hyperboloid.lorentz_norm(grad)

    def objective(self, weighted: WeightedPointSet, x: HPoint) -> float:
        """
        Φ(x) = Σ αᵢ d(x, pᵢ)².

        Args:
            weighted: Points and weights
            x: Point at which to evaluate

        Returns:
            Value of Φ
        """
        return sum(w * dist(x, p) ** 2 for p, w in zip(weighted.points, weighted.weights))

    def average_maps(self, maps: Sequence[PointMap], weights: Sequence[float], x: HPoint) -> HPoint:
        """
        Barycenter of the images f₁(x), …, f_k(x).

        Args:
            maps: Maps of the same dimension
            weights: One weight per map, summing to 1
            x: Point to evaluate the maps at

        Returns:
            Weighted barycenter of the images
        """
        if len(maps) != len(weights):
            raise HyperstretchError(f"{len(maps)} maps but {len(weights)} weights")
        images = [f(x) for f in maps]
        if any(y.dim != x.dim for y in images):
            raise HyperstretchError("Map images live in a different dimension")
        return self.barycenter(WeightedPointSet(images, list(weights)))

    def blend_with_partition(self, maps: Sequence[PointMap], partition: Sequence[Bump], x: HPoint) -> HPoint:
        """Average the maps at x with weights taken from the partition of unity."""
        weights = self._partition_weights(maps, partition, x)
        return self.average_maps(maps, weights, x)

    def leibniz_bound(self, maps: Sequence[PointMap], partition: Sequence[Bump],
                      map_lipschitz: Sequence[float], partition_lipschitz: Sequence[float],
                      x: HPoint) -> float:
        """
        Bound on the Lipschitz constant of the blended map at x.

        Args:
            maps: Maps being blended
            partition: Bumps of the partition of unity
            map_lipschitz: Lipschitz constant of each map
            partition_lipschitz: Lipschitz constant of each bump
            x: Point at which to evaluate the bound

        Returns:
            Σ Lip(ψᵢ) · diam{fᵢ(x)} + Σ ψᵢ(x) Lip(fᵢ)
        """
        if not (len(maps) == len(map_lipschitz) == len(partition_lipschitz)):
            raise HyperstretchError("One Lipschitz constant per map and per bump is required")
        weights = self._partition_weights(maps, partition, x)
        images = [f(x) for f in maps]
        diameter = max((dist(p, q) for p, q in combinations(images, 2)), default=0.0)
        return sum(lp * diameter + w * lf
                   for lp, w, lf in zip(partition_lipschitz, weights, map_lipschitz))

    def _partition_weights(self, maps: Sequence[PointMap], partition: Sequence[Bump], x: HPoint) -> List[float]:
        if len(maps) != len(partition):
            raise HyperstretchError(f"{len(maps)} maps but {len(partition)} bump functions")
        weights = [float(psi(x)) for psi in partition]
        check_weights(weights, PARTITION_TOLERANCE)
        total = math.fsum(weights)
        # renormalize inside the tolerance band so the point set validates
        return [w / total for w in weights]
