"""Hyperboloid model: embedding, Lorentz form, exponential and logarithm maps."""
import math

import numpy as np

from models.errors import DomainError
from models.points import HPoint, HyperboloidPoint


def lorentz_inner(x: np.ndarray, y: np.ndarray) -> float:
    """⟨x, y⟩ = x₁y₁ + … + x_n y_n − x_{n+1}y_{n+1}."""
    return float(np.dot(x[:-1], y[:-1]) - x[-1] * y[-1])


def lorentz_norm(v: np.ndarray) -> float:
    """Norm of a spacelike (tangent) vector."""
    return math.sqrt(max(0.0, lorentz_inner(v, v)))


def project(x: np.ndarray) -> np.ndarray:
    """Rescale onto the upper sheet; removes drift accumulated by iterations."""
    q = -lorentz_inner(x, x)
    if q <= 0 or x[-1] <= 0:
        raise DomainError(f"Vector {x} is not timelike future-pointing")
    return x / math.sqrt(q)


def distance(x: np.ndarray, y: np.ndarray) -> float:
    """arccosh(−⟨x, y⟩), evaluated as 2 arcsinh(‖x − y‖_L / 2) to keep short distances accurate."""
    diff = x - y
    return 2 * math.asinh(lorentz_norm(diff) / 2)


def exp_map(x: np.ndarray, v: np.ndarray) -> np.ndarray:
    """exp_x(v) = cosh‖v‖ x + sinh‖v‖ v/‖v‖."""
    norm = lorentz_norm(v)
    if norm < 1e-300:
        return x.copy()
    return project(math.cosh(norm) * x + math.sinh(norm) * (v / norm))


def log_map(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """log_x(y) = d / sinh d · (y + ⟨x, y⟩ x), the tangent vector at x pointing to y."""
    d = distance(x, y)
    tangent = y + lorentz_inner(x, y) * x
    if d < 1e-12:
        return tangent
    return (d / math.sinh(d)) * tangent


def to_coords(p: HPoint) -> np.ndarray:
    """Upper half-space point to hyperboloid coordinates; i (or (0, 1)) maps to (0, …, 0, 1)."""
    r2 = abs(p.a) ** 2 + p.b * p.b
    lift = [(r2 - 1) / (2 * p.b), (r2 + 1) / (2 * p.b)]
    if p.dim == 2:
        return np.array([p.a.real / p.b] + lift)
    return np.array([p.a.real / p.b, p.a.imag / p.b] + lift)


def from_coords(x: np.ndarray) -> HPoint:
    """Inverse of ``to_coords``.

    The height is 1/(x_{n+1} − x_n); when x_n > 0 the equivalent
    (x_{n+1} + x_n)/(1 + x₁² + … + x_{n−1}²) avoids the cancellation.
    """
    horizontal = x[:-2]
    s2 = float(np.dot(horizontal, horizontal))
    if x[-2] > 0:
        height = (x[-1] + x[-2]) / (1.0 + s2)
    else:
        height = 1.0 / (x[-1] - x[-2])
    if len(x) == 3:
        return HPoint.plane(float(horizontal[0]) * height, height)
    return HPoint.space(complex(float(horizontal[0]), float(horizontal[1])) * height, height)


def to_hyperboloid(p: HPoint) -> HyperboloidPoint:
    return HyperboloidPoint(to_coords(p))


def from_hyperboloid(point: HyperboloidPoint) -> HPoint:
    return from_coords(point.coords)


def klein_coords(x: np.ndarray) -> np.ndarray:
    """Projective (Klein) chart x_i / x_{n+1}; orientation-preserving on the upper sheet."""
    return x[:-1] / x[-1]


def tangent_basis(x: np.ndarray) -> list:
    """Lorentz-orthonormal basis of the tangent space at x."""
    basis = []
    for i in range(len(x) - 1):
        e = np.zeros(len(x))
        e[i] = 1.0
        v = e + lorentz_inner(x, e) * x
        for b in basis:
            v = v - lorentz_inner(v, b) * b
        basis.append(v / lorentz_norm(v))
    return basis


def from_klein(k: np.ndarray) -> np.ndarray:
    """Hyperboloid point over a point of the open Klein ball."""
    k = np.asarray(k, dtype=float)
    r2 = float(np.dot(k, k))
    if r2 >= 1:
        raise DomainError(f"Klein coordinates {k} lie outside the unit ball")
    return np.append(k, 1.0) / math.sqrt(1.0 - r2)
