"""Length-ratio suprema, Cartan drift scans and orbit statistics over word balls."""
import logging
import math
from collections import defaultdict
from typing import Dict, List, Tuple

import numpy as np

from geometry.hgeom import dist
from geometry.moebius import apply, cartan_mu, classify, fixed_boundary_points, translation_length
from interfaces.i_spectrum_analyzer import ISpectrumAnalyzer
from interfaces.i_word_enumerator import IWordEnumerator
from models.errors import DomainError, HyperstretchError, PreconditionError
from models.isometry import IsometryClass
from models.points import BoundaryPoint, HPoint
from models.settings import Settings
from models.words import (FREE, LEFT_CONSISTENT, NOT_PROPER, RIGHT_CONSISTENT,
                          CriticalExponentEstimate, DriftReport, DriftScanResult, RatioReport,
                          RatioSupResult, Representation, WordlengthBounds)

logger = logging.getLogger(__name__)

# Fraction of the scanned lengths (the longest ones) on which the verdict is read
VERDICT_TAIL = 0.5
# Orbit points closer than ORBIT_MERGE_DISTANCE count once
ORBIT_MERGE_DISTANCE = 1e-7
ORBIT_BUCKET_WIDTH = 1e-6


def _nondecreasing(values: List[float], slack: float = 1e-12) -> bool:
    return all(b >= a - slack for a, b in zip(values, values[1:]))


def _same_boundary_point(p: BoundaryPoint, q: BoundaryPoint, tol: float = 1e-9) -> bool:
    if p.is_infinite or q.is_infinite:
        return p.is_infinite and q.is_infinite
    return abs(complex(p.x) - complex(q.x)) <= tol * max(1.0, abs(p.x))


class SpectrumAnalyzer(ISpectrumAnalyzer):
    """Compares representations j, ρ of the same group over finite word balls."""

    def __init__(self, enumerator: IWordEnumerator, settings: Settings):
        self.enumerator = enumerator
        self.settings = settings

    def ratio_sup(self, j: Representation, rho: Representation, max_length: int) -> RatioSupResult:
        """
        Supremum of λ(ρ(γ)) / λ(j(γ)) over the ball of length ``max_length``.

        Args:
            j: Reference representation
            rho: Compared representation, same generator count and mode
            max_length: Ball length L

        Returns:
            RatioSupResult; empty when no j(γ) in the ball is hyperbolic
        """
        eps = self.settings.classify_eps
        ball = self.enumerator.enumerate_pair([j, rho], max_length)
        scanned = 0
        ranked = []
        for element in ball:
            word = element.word
            if word.length == 0:
                continue
            if j.mode == FREE:
                # λ is a class function: keep one cyclic word per rotation/inversion class
                if not word.is_cyclically_reduced or word.class_representative() != word:
                    continue
            scanned += 1
            lam_j = translation_length(element.images[0], eps)
            if lam_j <= 0:
                continue
            lam_rho = translation_length(element.images[1], eps)
            report = RatioReport(str(word), lam_j, lam_rho, lam_rho / lam_j, word.length)
            ranked.append((-report.ratio, word.sort_key, report))

        if not ranked:
            logger.info("No hyperbolic j(γ) among %d classes up to length %d", scanned, max_length)
            return RatioSupResult(None, True, max_length, scanned, 0, [])

        ranked.sort(key=lambda item: (item[0], item[1]))
        top = [report for _, _, report in ranked[:self.settings.ratio_report_top]]
        logger.info("C'_%d = %.12g over %d hyperbolic classes", max_length, top[0].ratio, len(ranked))
        return RatioSupResult(top[0].ratio, False, max_length, scanned, len(ranked), top)

    def drift_scan(self, j: Representation, rho: Representation, max_length: int) -> DriftScanResult:
        """
        Scan μ(j(γ)) − μ(ρ(γ)) over the ball and fit μ(ρ) against μ(j).

        Args:
            j: Reference representation
            rho: Compared representation
            max_length: Ball length L

        Returns:
            DriftScanResult with per-length minima and the verdict
        """
        if max_length < 1:
            raise HyperstretchError("drift_scan needs a word length of at least 1")
        ball = self.enumerator.enumerate_pair([j, rho], max_length)
        records: List[DriftReport] = []
        minima: Dict[int, float] = {}
        maxima: Dict[int, float] = {}
        for element in ball:
            word = element.word
            if word.length == 0:
                continue
            mu_j, mu_rho = cartan_mu(element.images[0]), cartan_mu(element.images[1])
            drift = mu_j - mu_rho
            records.append(DriftReport(str(word), mu_j, mu_rho, drift, word.length))
            minima[word.length] = min(minima.get(word.length, math.inf), drift)
            maxima[word.length] = max(maxima.get(word.length, -math.inf), drift)

        lengths = sorted(minima)
        tail = lengths[int(len(lengths) * VERDICT_TAIL):] or lengths
        tail_min = [minima[s] for s in tail]
        tail_max = [maxima[s] for s in tail]
        if all(m > 0 for m in tail_min) and _nondecreasing(tail_min):
            verdict = LEFT_CONSISTENT
        elif all(m < 0 for m in tail_max) and _nondecreasing([-m for m in tail_max]):
            verdict = RIGHT_CONSISTENT
        else:
            verdict = NOT_PROPER

        drifts = [r.drift for r in records]
        negative = [-d for d in drifts if d < 0]
        c, d = self._fit(records)
        within = sum(1 for r in records if r.mu_rho <= c * r.mu_j + d + 1e-12)
        logger.info("Drift scan up to length %d over %d elements: %s", max_length, len(records), verdict)
        return DriftScanResult(
            min_drift=min(drifts),
            violations=len(negative),
            max_violation=max(negative, default=0.0),
            per_length_minima={s: minima[s] for s in lengths},
            nondecreasing=_nondecreasing([minima[s] for s in lengths]),
            verdict=verdict,
            fit_c=c,
            fit_d=d,
            c_below_one=c < 1,
            fraction_within_fit=within / len(records),
            max_length=max_length,
            records=records,
        )

    @staticmethod
    def _fit(records: List[DriftReport]) -> Tuple[float, float]:
        """Least-squares (C, D) in μ_ρ ≈ C μ_j + D."""
        x = np.array([r.mu_j for r in records])
        y = np.array([r.mu_rho for r in records])
        if np.ptp(x) < 1e-12:
            return 0.0, float(np.max(y))
        design = np.vstack([x, np.ones_like(x)]).T
        (c, d), *_ = np.linalg.lstsq(design, y, rcond=None)
        return float(c), float(d)

    def wordlength_distance_bounds(self, rep: Representation, p: HPoint, max_length: int) -> WordlengthBounds:
        """Largest excess and deficit of d(p, γp) against 2 log(1 + |γ|) over the ball."""
        eps = self.settings.classify_eps
        common = None
        for k, g in enumerate(rep.generators, start=1):
            kind = classify(g, eps)
            if kind == IsometryClass.IDENTITY:
                continue
            if kind not in (IsometryClass.PARABOLIC, IsometryClass.ELLIPTIC):
                raise PreconditionError(f"Generator {k} is {kind.value}; expected parabolic or elliptic")
            fixed = list(fixed_boundary_points(g, eps))
            common = fixed if common is None else [
                xi for xi in common if any(_same_boundary_point(xi, eta) for eta in fixed)
            ]
        if common is not None and not common:
            raise PreconditionError("Generators do not share an ideal fixed point")

        upper, lower = 0.0, 0.0
        ball = self.enumerator.enumerate_ball(rep, max_length)
        for element in ball:
            expected = 2 * math.log1p(element.word.length)
            d = dist(p, apply(element.images[0], p))
            upper = max(upper, d - expected)
            lower = max(lower, expected - d)
        return WordlengthBounds(upper, lower, len(ball))

    def critical_exponent_estimate(self, j: Representation, p: HPoint, radius: float,
                                   max_length: int) -> CriticalExponentEstimate:
        """
        Estimate of the critical exponent from orbit points of p within ``radius``.

        Args:
            j: Representation
            p: Base point of the orbit
            radius: Orbit radius R > 0
            max_length: Word length used to collect the orbit

        Returns:
            log(count) / R with the number of distinct orbit points
        """
        if radius <= 0:
            raise DomainError(f"Radius must be positive, got {radius}")
        ball = self.enumerator.enumerate_ball(j, max_length)
        # orbit points bucketed by their distance to p; equal points land in adjacent buckets
        buckets: Dict[int, List[HPoint]] = defaultdict(list)
        count = 0
        for element in ball:
            q = apply(element.images[0], p)
            d = dist(p, q)
            if d > radius:
                continue
            key = int(d / ORBIT_BUCKET_WIDTH)
            if any(dist(q, other) <= ORBIT_MERGE_DISTANCE
                   for k in (key - 1, key, key + 1) for other in buckets.get(k, ())):
                continue
            buckets[key].append(q)
            count += 1
        value = math.log(count) / radius if count else 0.0
        return CriticalExponentEstimate(value, count, radius, max_length)
