"""One-point Lipschitz extension by minimax over the target space."""
import logging
import math
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize

from geometry import hyperboloid
from geometry.hgeom import dist
from interfaces.i_barycenter_solver import IBarycenterSolver
from interfaces.i_lipschitz_extender import ILipschitzExtender
from models.errors import HyperstretchError, PreconditionError
from models.points import HPoint
from models.settings import Settings
from models.stretch import ExtensionResult, FiniteMapData
from models.weighted import WeightedPointSet

logger = logging.getLogger(__name__)

# Points of K closer than this are the same point
COINCIDENCE = 1e-12
# Relative gap under which a constraint counts as active
ACTIVE_SLACK = 1e-9


class _Objective:
    """C(x) = max_k w_k d(x, y_k) on hyperboloid coordinates, w_k = 1/d(p, k)."""

    def __init__(self, weights: np.ndarray, targets: List[np.ndarray]):
        self.weights = weights
        self.targets = targets

    def terms(self, x: np.ndarray) -> np.ndarray:
        return self.weights * np.array([hyperboloid.distance(x, y) for y in self.targets])

    def __call__(self, x: np.ndarray) -> float:
        return float(np.max(self.terms(x)))

    def lower_bound(self) -> float:
        """max over pairs of w_i w_j d(y_i, y_j)/(w_i + w_j); no point does better."""
        best = 0.0
        for i, j in combinations(range(len(self.targets)), 2):
            wi, wj = self.weights[i], self.weights[j]
            best = max(best, wi * wj * hyperboloid.distance(self.targets[i], self.targets[j]) / (wi + wj))
        return best


class _Chart:
    """Exponential chart at a base point: v ∈ Rⁿ -> exp_x(Σ vⱼ eⱼ)."""

    def __init__(self, base: np.ndarray):
        self.base = base
        self.basis = hyperboloid.tangent_basis(base)

    def __call__(self, v: np.ndarray) -> np.ndarray:
        tangent = sum(float(c) * e for c, e in zip(v, self.basis))
        return hyperboloid.exp_map(self.base, tangent)


class LipschitzExtender(ILipschitzExtender):
    """Minimizes C(q) = max_k d(q, φ(k))/d(p, k).

    C is a maximum of geodesically convex functions, so any local minimizer is
    global. The search starts at a weighted barycenter of the images, runs
    damped Polyak subgradient steps and then polishes in an exponential chart
    with Nelder-Mead followed by an SLSQP epigraph solve.
    """

    def __init__(self, barycenter_solver: IBarycenterSolver, settings: Settings):
        self.barycenter_solver = barycenter_solver
        self.settings = settings

    def finite_map(self, sources: Sequence[HPoint], images: Sequence[HPoint],
                   lipschitz: Optional[float] = None) -> FiniteMapData:
        """
        Validate a finite map K -> H² and compute its Lipschitz constant.

        Args:
            sources: Points of K, pairwise distinct
            images: Their images, in the same order
            lipschitz: Declared constant; computed from the pairs when omitted

        Returns:
            FiniteMapData
        """
        if not sources:
            raise HyperstretchError("The finite set K is empty")
        if len(sources) != len(images):
            raise HyperstretchError(f"{len(sources)} sources but {len(images)} images")
        if len({p.dim for p in sources}) != 1 or len({q.dim for q in images}) != 1:
            raise HyperstretchError("Points of K (and of φ(K)) must share one dimension")

        actual = 0.0
        for i, j in combinations(range(len(sources)), 2):
            d = dist(sources[i], sources[j])
            if d <= COINCIDENCE:
                raise HyperstretchError(f"Points {i} and {j} of K coincide")
            actual = max(actual, dist(images[i], images[j]) / d)
        if lipschitz is None:
            lipschitz = actual
        elif lipschitz < actual - ACTIVE_SLACK * max(1.0, actual):
            raise HyperstretchError(f"Declared constant {lipschitz} is below the pair ratio {actual}")
        return FiniteMapData(tuple(sources), tuple(images), lipschitz)

    def one_point_extension(self, data: FiniteMapData, p: HPoint) -> ExtensionResult:
        """
        Best image for a new point p: minimize max d(y, f(k)) / d(p, k) over y.

        Args:
            data: Finite map to extend
            p: New point, not in K

        Returns:
            Minimizing image, its constant and the active points of K
        """
        distances = [dist(p, k) for k in data.sources]
        nearest = int(np.argmin(distances))
        if distances[nearest] <= COINCIDENCE:
            raise PreconditionError(f"p coincides with point {nearest} of K")
        if len(data.sources) == 1:
            return ExtensionResult(data.images[0], 0.0, data.lipschitz, 0, [0])

        weights = np.array([1.0 / d for d in distances])
        objective = _Objective(weights, [hyperboloid.to_coords(y) for y in data.images])
        start_weights = weights ** 2 / float(np.sum(weights ** 2))
        start = self.barycenter_solver.barycenter(WeightedPointSet(list(data.images), list(start_weights)))

        x, iterations = self._subgradient(objective, hyperboloid.to_coords(start))
        if objective(x) > 0:
            x, polished = self._polish(objective, x)
            iterations += polished

        value = objective(x)
        terms = objective.terms(x)
        active = [i for i, t in enumerate(terms) if t >= value - ACTIVE_SLACK * max(1.0, value)]
        logger.debug("One-point extension: C = %.12g with %d active constraints (lower bound %.12g)",
                     value, len(active), objective.lower_bound())
        return ExtensionResult(hyperboloid.from_coords(x), value, data.lipschitz, iterations, active)

    def _subgradient(self, objective: _Objective, x: np.ndarray) -> Tuple[np.ndarray, int]:
        lower = objective.lower_bound()
        best, best_value = x, objective(x)
        k = 0
        for k in range(1, self.settings.extension_iterations + 1):
            terms = objective.terms(x)
            i = int(np.argmax(terms))
            gap = terms[i] - lower
            d = terms[i] / objective.weights[i]
            if gap <= 0 or d < COINCIDENCE:
                break
            # Polyak step towards the worst image, damped since the target is only a lower bound
            move = min(d, gap / objective.weights[i] / math.sqrt(k))
            direction = hyperboloid.log_map(x, objective.targets[i]) / d
            x = hyperboloid.exp_map(x, move * direction)
            value = objective(x)
            if value < best_value:
                best, best_value = x, value
        return best, k

    def _polish(self, objective: _Objective, x: np.ndarray) -> Tuple[np.ndarray, int]:
        chart = _Chart(x)
        n = len(chart.basis)
        tol = self.settings.extension_polish_tol
        in_chart = lambda v: objective(chart(v))

        scale = max(1e-6, 0.05 * objective(x) / float(np.max(objective.weights)))
        simplex = np.vstack([np.zeros(n), scale * np.eye(n)])
        res = minimize(in_chart, np.zeros(n), method='Nelder-Mead',
                       options={'xatol': tol, 'fatol': tol, 'maxiter': 400 * n, 'initial_simplex': simplex})
        v, best_value, iterations = res.x, float(res.fun), int(res.nit)

        constraints = [
            {'type': 'ineq', 'fun': (lambda z, i=i: z[-1] - objective.weights[i]
                                     * hyperboloid.distance(chart(z[:-1]), objective.targets[i]))}
            for i in range(len(objective.targets))
        ]
        res = minimize(lambda z: z[-1], np.append(v, best_value), method='SLSQP',
                       constraints=constraints, options={'ftol': 1e-15, 'maxiter': 200})
        iterations += int(res.nit)
        refined = in_chart(res.x[:-1])
        if refined < best_value:
            v, best_value = res.x[:-1], refined
        else:
            logger.debug("SLSQP epigraph solve did not improve on Nelder-Mead (%s)", res.message)
        return chart(v), iterations
