"""End-to-end worked examples with explicit, toleranced checks."""
import logging
import math
from typing import List, Sequence

from geometry.fermi_stretch import fermi_stretch, ray_height, ray_offset
from geometry.hgeom import (circle_chord, dist, fermi_frame, fermi_to_point, geodesic_point, geodesic_through,
                            point_to_fermi, project_to_triangle, right_triangle_solve, triangle_residuals)
from geometry.moebius import (classify, compose, fixed_point, power, reflection_in, rotation_about,
                              shortest_translation_between, translation_along, translation_length)
from interfaces.i_lipschitz_estimator import ILipschitzEstimator
from interfaces.i_lipschitz_extender import ILipschitzExtender
from interfaces.i_scenario_runner import IScenarioRunner
from interfaces.i_spectrum_analyzer import ISpectrumAnalyzer
from interfaces.i_word_enumerator import IWordEnumerator
from models.errors import CapExceededError, HyperstretchError
from models.isometry import Isometry, IsometryClass
from models.points import GeodesicLine, HPoint
from models.scenario import EX81, EX91, EX94, EX97, EX98, ScenarioConfig, ScenarioReport
from models.settings import Settings
from models.stretch import EXACT_BISECT, FermiStretchMap
from models.words import FREE, REFLECTION, Representation, Word

logger = logging.getLogger(__name__)

DEFAULT_LENGTHS = {EX91: 3, EX94: 10, EX98: 6}
# Source and target triangles share Â and the right angle at B
TRIANGLE_ANGLE_A = math.pi / 3
SOURCE_ANGLE_C = math.pi / 14
TARGET_ANGLE_C = math.pi / 7
COMMUTATORS = ('abAB', 'bABa', 'ABab', 'BabA')
# ex98 commutator traces must clear 2 by this multiple of the classification band
COMMUTATOR_GAP_FACTOR = 10


def _g(s: float) -> float:
    """Side of the equilateral triangle inscribed in the circle of radius s."""
    return 2 * math.asinh(math.sqrt(0.75) * math.sinh(s))


class ScenarioRunner(IScenarioRunner):

    def __init__(self, enumerator: IWordEnumerator, spectrum: ISpectrumAnalyzer,
                 extender: ILipschitzExtender, estimator: ILipschitzEstimator, settings: Settings):
        self.enumerator = enumerator
        self.spectrum = spectrum
        self.extender = extender
        self.estimator = estimator
        self.settings = settings

    def run(self, config: ScenarioConfig) -> ScenarioReport:
        """
        Dispatch a scenario config to its runner.

        Args:
            config: Scenario id and parameters

        Returns:
            ScenarioReport with every check recorded
        """
        length = config.length or DEFAULT_LENGTHS.get(config.scenario, 0)
        logger.info("Running scenario %s", config.scenario)
        if config.scenario == EX97:
            return self.run_ex97(config.k_max)
        if config.scenario == EX91:
            return self.run_ex91(config.n, config.m, length)
        if config.scenario == EX94:
            return self.run_ex94(length, config.grid, config.seed)
        if config.scenario == EX81:
            return self.run_ex81(config.t, config.T)
        return self.run_ex98(config.k_values, config.delta, length)

    def run_ex97(self, k_max: int) -> ScenarioReport:
        """Trace family of parabolic products and its rotation construction, k = 1..k_max."""
        if not 1 <= k_max <= self.settings.max_trace_k:
            raise CapExceededError(f"k_max must lie in 1..{self.settings.max_trace_k}, got {k_max}")
        report = ScenarioReport(EX97, {'k_max': k_max})
        j_alpha, j_beta = Isometry.of(1, 3, 0, 1), Isometry.of(1, 0, -3, 1)
        rows = []
        for k in range(1, k_max + 1):
            n = 2 ** (k - 1) * k
            j_omega = compose(power(j_alpha, n), power(j_beta, n))
            trace = abs(j_omega.trace)
            expected_trace = (3 * n) ** 2 - 2
            report.check(f'trace_k{k}', trace == expected_trace, trace, expected_trace)

            lam_j = translation_length(j_omega)
            main_term = 4 * (k * math.log(2) + math.log(k))
            # 2 log|Tr| − λ > 0 and |Tr| < 9n², so the residual lies in [0, 4 log(3/2)]
            report.check(f'lambda_j_residual_k{k}', 0 <= lam_j - main_term <= 4 * math.log(1.5) + 1e-9,
                         lam_j - main_term, [0.0, 4 * math.log(1.5)], 1e-9)

            angle = 2 * math.pi / (2 ** k * k)
            rho_alpha = rotation_about(HPoint.plane(0.0, 2.0 ** k), angle)
            rho_beta = rotation_about(HPoint.plane(0.0, 2.0 ** -k), angle)
            rho_omega = compose(power(rho_alpha, n), power(rho_beta, n))
            lam_rho = translation_length(rho_omega)
            report.close_to(f'lambda_rho_k{k}', lam_rho, 4 * k * math.log(2), 1e-6)

            ratio = lam_rho / lam_j
            bound = 1 - (math.log(k) / (k * math.log(2)))
            correction = math.log(1.5) / (k * math.log(2))
            report.at_least(f'ratio_k{k}', ratio, bound - correction, 1e-12)
            rows.append({'k': k, 'n': n, 'trace': trace, 'lambda_j': lam_j, 'lambda_rho': lam_rho,
                         'ratio': ratio, 'ratio_bound': bound})
        report.data['rows'] = rows
        return report

    def _schottky_lines(self, k: int, radius: float):
        centre, shifted = float(k * k), float(k * k + k)
        first = GeodesicLine.between(centre - radius, centre + radius)
        second = GeodesicLine.between(shifted + radius, shifted - radius)
        return first, second

    def run_ex91(self, n: int, m: int, length: int) -> ScenarioReport:
        """Schottky family with generators N..N+m and a drift scan up to length L."""
        if not 2 <= n <= self.settings.max_schottky_n:
            raise CapExceededError(f"N must lie in 2..{self.settings.max_schottky_n}, got {n}")
        if m < 0:
            raise HyperstretchError(f"m must be nonnegative, got {m}")
        report = ScenarioReport(EX91, {'n': n, 'm': m, 'length': length})

        alphas, betas, rows = [], [], []
        for k in range(n, n + m + 1):
            alpha = shortest_translation_between(*self._schottky_lines(k, 1.0))
            beta = shortest_translation_between(*self._schottky_lines(k, math.log(k)))
            alphas.append(alpha)
            betas.append(beta)
            lam_a, lam_b = translation_length(alpha), translation_length(beta)
            rows.append({'k': k, 'lambda_alpha': lam_a, 'lambda_beta': lam_b,
                         'alpha_residual': lam_a - 2 * math.log(k),
                         'beta_residual': lam_b - (2 * math.log(k) - 2 * math.log(math.log(k)))})
        report.data['generators'] = rows

        for key in ('alpha_residual', 'beta_residual'):
            sizes = [abs(r[key]) for r in rows]
            report.check(f'{key}_shrinks', all(b <= a + 1e-12 for a, b in zip(sizes, sizes[1:])),
                         sizes, 'nonincreasing', 1e-12)
        alpha_100 = translation_length(shortest_translation_between(*self._schottky_lines(100, 1.0)))
        report.close_to('lambda_alpha_100', alpha_100, 2 * math.log(100), 0.1)

        j, rho = Representation(tuple(alphas), FREE), Representation(tuple(betas), FREE)
        scan = self.spectrum.drift_scan(j, rho, length)
        report.at_least('min_drift', scan.min_drift, 1.0)
        report.check('drift_minima_nondecreasing', scan.nondecreasing,
                     [scan.per_length_minima[s] for s in sorted(scan.per_length_minima)], 'nondecreasing')
        report.data['drift'] = {
            'min_drift': scan.min_drift,
            'per_length_minima': {str(s): v for s, v in sorted(scan.per_length_minima.items())},
            'verdict': scan.verdict,
            'fit_c': scan.fit_c,
            'fit_d': scan.fit_d,
            'fraction_within_fit': scan.fraction_within_fit,
            'caveat': scan.caveat,
        }
        return report

    @staticmethod
    def _triangle(angle_c: float):
        """Vertices A = i, B, C with the right angle at B and C on the left of AB."""
        sides = right_triangle_solve(TRIANGLE_ANGLE_A, angle_c)
        frame = fermi_frame(GeodesicLine.between(0.0, None), HPoint.plane(0.0, 1.0))
        a = frame.origin
        b = fermi_to_point(frame, sides.c, 0.0)
        c = fermi_to_point(frame, sides.c, sides.a)
        return sides, frame, (a, b, c)

    @staticmethod
    def _reflections(vertices) -> Representation:
        a, b, c = vertices
        return Representation((
            reflection_in(GeodesicLine.between(0.0, None)),
            reflection_in(geodesic_through(b, c)),
            reflection_in(geodesic_through(c, a)),
        ), REFLECTION)

    def run_ex94(self, length: int, grid: int, seed: int = 0) -> ScenarioReport:
        """
        Reflection triangle groups, their Fermi stretch and its Lipschitz constants.

        Args:
            length: Word-ball length for the ratio supremum
            grid: Sampling density for the Lipschitz estimates
            seed: Seed for the global estimate

        Returns:
            ScenarioReport
        """
        report = ScenarioReport(EX94, {'length': length, 'grid': grid, 'seed': seed})
        sides, frame, source = self._triangle(SOURCE_ANGLE_C)
        target_sides, _, target = self._triangle(TARGET_ANGLE_C)
        for label, angle_c, s in (('source', SOURCE_ANGLE_C, sides), ('target', TARGET_ANGLE_C, target_sides)):
            residual = max(triangle_residuals(TRIANGLE_ANGLE_A, s).values())
            report.at_most(f'{label}_triangle_residual', residual, 0.0, 1e-10)
        factor = target_sides.c / sides.c
        report.data['c0'] = factor
        report.data['sides'] = {'source': [sides.a, sides.b, sides.c],
                                'target': [target_sides.a, target_sides.b, target_sides.c]}

        j, rho = self._reflections(source), self._reflections(target)
        for label, rep in (('j', j), ('rho', rho)):
            r1, r2, r3 = rep.generators
            for name, g, order in (('r1r2', compose(r1, r2), 2), ('r2r3', compose(r2, r3), 14),
                                   ('r3r1', compose(r3, r1), 3)):
                report.check(f'{label}_{name}_order_{order}', power(g, order).is_identity(1e-8),
                             name, f'order divides {order}', 1e-8)

        sup = self.spectrum.ratio_sup(j, rho, length)
        report.data['ratio_sup'] = sup.value
        report.data['ratio_sup_margin'] = None if sup.empty else factor - sup.value
        report.check('ratio_sup_below_c0', not sup.empty and sup.value < factor, sup.value, factor)

        stretch = FermiStretchMap(frame, frame, factor, EXACT_BISECT, TRIANGLE_ANGLE_A)
        s = ray_height(0.3, TRIANGLE_ANGLE_A)
        h_img, v_img = point_to_fermi(frame, fermi_stretch(stretch, fermi_to_point(frame, s, 0.3)))
        report.close_to('exact_bisect_ray', math.tanh(v_img) / math.sinh(h_img), math.tan(TRIANGLE_ANGLE_A), 1e-9)

        def f(x: HPoint) -> HPoint:
            return project_to_triangle(fermi_stretch(stretch, x), *target)

        interior, base = [], []
        cols = max(1, grid // 2)
        for i in range(grid):
            h = sides.c * (i + 0.5) / grid
            top = ray_offset(h, TRIANGLE_ANGLE_A)
            base.append(self.estimator.local_lip_estimate(f, fermi_to_point(frame, h, 0.0)).value)
            for jj in range(cols):
                x = fermi_to_point(frame, h, top * (jj + 0.5) / cols)
                interior.append(self.estimator.local_lip_estimate(f, x).value)
        report.at_most('interior_local_lip', max(interior), factor, 1e-6)
        report.at_least('base_local_lip', min(base), factor, 1e-4)

        def sampler(rng) -> HPoint:
            h = sides.c * rng.random()
            return fermi_to_point(frame, h, ray_offset(h, TRIANGLE_ANGLE_A) * rng.random())

        overall = self.estimator.global_lip_estimate(f, sampler, 10 * grid * grid, seed)
        report.at_most('global_lip', overall.value, factor, 1e-6)
        report.data['lipschitz'] = {'interior_max': max(interior), 'base_min': min(base),
                                    'global': overall.value, 'interior_points': len(interior)}
        return report

    def run_ex81(self, t: float, big_t: float) -> ScenarioReport:
        """One-point extension for equilateral triangles of radius t and T about i."""
        report = ScenarioReport(EX81, {'t': t, 'T': big_t})
        report.close_to('g_small_slope', _g(0.01) / 0.01, math.sqrt(3), 1e-3)
        # |g(s)/s − 2| behaves like 2 log(2/√3)/s
        report.close_to('g_large_slope', _g(15.0) / 15.0, 2.0, 0.02)

        o = HPoint.plane(0.0, 1.0)
        angles = [math.pi / 2 + 2 * math.pi * i / 3 for i in range(3)]
        sources = [geodesic_point(o, a, t) for a in angles]
        images = [geodesic_point(o, a, big_t) for a in angles]
        data = self.extender.finite_map(sources, images)
        closed_form = _g(big_t) / _g(t)
        report.close_to('lip_closed_form', data.lipschitz, closed_form, 1e-9)
        report.close_to('chord_closed_form', circle_chord(t, 2 * math.pi / 3), _g(t), 1e-12)

        result = self.extender.one_point_extension(data, o)
        if t > big_t:
            report.close_to('extension_constant', result.constant, big_t / t, 1e-6)
        elif t < big_t:
            report.at_most('extension_constant', result.constant, data.lipschitz, 1e-6)
        else:
            report.close_to('extension_constant', result.constant, 1.0, 1e-6)
        report.data.update({'lipschitz': data.lipschitz, 'constant': result.constant,
                            'g_t': _g(t), 'g_T': _g(big_t), 'offset': dist(o, result.point)})
        return report

    @staticmethod
    def _apex(k: float) -> HPoint:
        """r_k at distance k from p = i and q = e·i, with pqr_k counterclockwise."""
        frame = fermi_frame(GeodesicLine.between(0.0, None), HPoint.plane(0.0, 1.0))
        offset = math.acosh(math.cosh(k) / math.cosh(0.5))
        return fermi_to_point(frame, 0.5, offset)

    def run_ex98(self, k_values: Sequence[int], delta: float, length: int) -> ScenarioReport:
        """Punctured-torus representation against the elliptic-commutator family."""
        report = ScenarioReport(EX98, {'k_values': list(k_values), 'delta': delta, 'length': length})
        j = Representation((Isometry.of(1, 1, 1, 2), Isometry.of(1, -1, -1, 2)), FREE)
        commutator = self.enumerator.evaluate(j, Word.parse('abAB'))
        report.check('j_commutator_parabolic', classify(commutator) == IsometryClass.PARABOLIC,
                     classify(commutator).value, IsometryClass.PARABOLIC.value)

        p, q = HPoint.plane(0.0, 1.0), HPoint.plane(0.0, math.e)
        rows: List[dict] = []
        for k in k_values:
            if k < 1:
                raise HyperstretchError(f"k must be at least 1, got {k}")
            # 2 − tr ρ_k([α, β]) = 4 sinh⁴(δ/2) sin²θ, θ the angle of the two axes at r_k
            angle = 2 * math.asin(math.sinh(0.5) / math.sinh(k))
            gap = 4 * math.sinh(delta / 2) ** 4 * math.sin(angle) ** 2
            if gap <= COMMUTATOR_GAP_FACTOR * self.settings.classify_eps:
                raise CapExceededError(
                    f"k = {k} with delta = {delta}: the commutator trace is within {gap:.1e} of 2, "
                    f"inside the classification band; use a smaller k or a larger delta"
                )
            r = self._apex(k)
            rho = Representation((translation_along(geodesic_through(p, r), delta),
                                  translation_along(geodesic_through(q, r), delta)), FREE)
            vertices = []
            for word in COMMUTATORS:
                g = self.enumerator.evaluate(rho, Word.parse(word))
                vertices.append(fixed_point(g) if classify(g) == IsometryClass.ELLIPTIC else None)
            elliptic = all(v is not None for v in vertices)
            report.check(f'rho_commutators_elliptic_k{k}', elliptic, elliptic, True)
            sup = self.spectrum.ratio_sup(j, rho, length)
            report.check(f'ratio_sup_below_one_k{k}', not sup.empty and sup.value < 1, sup.value, 1.0)
            row = {'k': k, 'apex_distances': [dist(p, r), dist(q, r)], 'ratio_sup': sup.value}
            if elliptic:
                row['vertices'] = vertices
                row['vertex_to_apex'] = [dist(v, r) for v in vertices]
                row['sides'] = [dist(vertices[i], vertices[(i + 1) % 4]) for i in range(4)]
            rows.append(row)
        report.data['rows'] = rows
        return report
