#!/usr/bin/env python3
"""Command-line entry point for hyperstretch."""
import argparse
import dataclasses
import json
import logging
import sys
from typing import List, Optional

import numpy as np

from container import create_container
from geometry import hyperboloid
from geometry.hgeom import dist, project_to_line
from geometry.moebius import cartan_mu, classify, translation_length
from interfaces.i_barycenter_solver import IBarycenterSolver
from interfaces.i_lipschitz_extender import ILipschitzExtender
from interfaces.i_payload_reader import IPayloadReader
from interfaces.i_report_writer import IReportWriter
from interfaces.i_scenario_runner import IScenarioRunner
from interfaces.i_spectrum_analyzer import ISpectrumAnalyzer
from interfaces.i_triangulator import ITriangulator
from models.errors import PayloadError
from models.scenario import SCENARIOS, ScenarioConfig
from models.settings import Settings
from models.triangulation import PointSet2
from models.weighted import WeightedPointSet
from models.words import FREE, REFLECTION, Representation

logger = logging.getLogger('hyperstretch')

# Klein radius of the disc sampled by `delaunay --random`
RANDOM_DISC_RADIUS = 0.9


class _Parser(argparse.ArgumentParser):
    """Usage errors are validation errors (exit 1)."""

    def error(self, message):
        raise PayloadError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='Emit a versioned JSON document')
    common.add_argument('--csv', action='store_true', help='Emit the per-word table (ratio-sup, drift)')
    common.add_argument('--seed', type=int, default=0, help='Seed for sampled inputs (default: 0)')
    common.add_argument('--out', type=str, default=None, help='Write output to this file instead of stdout')
    common.add_argument('--workers', type=int, default=1, help='Worker processes for word enumeration')
    common.add_argument('--verbose', action='store_true', help='Log progress to stderr')

    parser = _Parser(description='Isometries, length spectra and Lipschitz maps of hyperbolic space')
    commands = parser.add_subparsers(dest='command', required=True)

    for name, text in (('classify', 'Classify an isometry'), ('length', 'Translation length λ'),
                       ('mu', 'Cartan projection μ')):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument('--matrix', required=True, help='JSON [[a, b], [c, d]]')

    sub = commands.add_parser('dist', parents=[common], help='Hyperbolic distance')
    sub.add_argument('--p', required=True, help='JSON point {u, v}, {a_re, a_im, b}, [u, v] or [x, y, h]')
    other = sub.add_mutually_exclusive_group(required=True)
    other.add_argument('--q', help='JSON point')
    other.add_argument('--line', help='JSON geodesic [start, end]; endpoints {x} or "inf"')

    for name, text in (('ratio-sup', 'Supremum of λ(ρ(γ))/λ(j(γ)) over a word ball'),
                       ('drift', 'Scan of μ(j(γ)) − μ(ρ(γ)) over a word ball')):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument('--j', required=True, help='JSON list of generator matrices of j')
        sub.add_argument('--rho', required=True, help='JSON list of generator matrices of ρ')
        sub.add_argument('--length', type=int, default=6, help='Word-ball length L (default: 6)')
        sub.add_argument('--mode', choices=(FREE, REFLECTION), default=FREE, help='Relation mode')

    sub = commands.add_parser('barycenter', parents=[common], help='Weighted Fréchet barycenter')
    sub.add_argument('--points', required=True, help='JSON list of points')
    sub.add_argument('--weights', default=None, help='JSON list of weights (default: uniform)')

    sub = commands.add_parser('delaunay', parents=[common], help='Delaunay triangulation in H²')
    source = sub.add_mutually_exclusive_group(required=True)
    source.add_argument('--points', help='JSON list of half-plane points')
    source.add_argument('--random', type=int, help='Triangulate this many seeded random points')
    sub.add_argument('--off', default=None, help='Also write an OFF mesh to this file')

    sub = commands.add_parser('extend', parents=[common], help='One-point Lipschitz extension')
    sub.add_argument('--sources', required=True, help='JSON list of points of K')
    sub.add_argument('--images', required=True, help='JSON list of their images')
    sub.add_argument('--p', required=True, help='JSON point to extend to')
    sub.add_argument('--lipschitz', type=float, default=None, help='Declared Lipschitz constant')

    sub = commands.add_parser('scenario', parents=[common], help='Run a worked example')
    sub.add_argument('id', choices=SCENARIOS)
    sub.add_argument('--kmax', type=int, default=4, help='ex97: largest k (default: 4)')
    sub.add_argument('--n', type=int, default=40, help='ex91: first index N (default: 40)')
    sub.add_argument('--m', type=int, default=2, help='ex91: extra generators (default: 2)')
    sub.add_argument('--length', type=int, default=None, help='Word-ball length (scenario default)')
    sub.add_argument('--grid', type=int, default=20, help='ex94: sampling density (default: 20)')
    sub.add_argument('--t', type=float, default=2.0, help='ex81: source radius (default: 2)')
    sub.add_argument('--T', type=float, default=1.0, help='ex81: target radius (default: 1)')
    sub.add_argument('--delta', type=float, default=0.1, help='ex98: translation length (default: 0.1)')
    sub.add_argument('--k-values', default='[1, 2, 3, 4]', help='ex98: JSON list of k')
    return parser


def _random_sites(count: int, seed: int):
    rng = np.random.default_rng(seed)
    points = []
    while len(points) < count:
        k = rng.uniform(-RANDOM_DISC_RADIUS, RANDOM_DISC_RADIUS, size=2)
        if float(np.dot(k, k)) < RANDOM_DISC_RADIUS ** 2:
            points.append(hyperboloid.from_coords(hyperboloid.from_klein(k)))
    return points


class _Output:
    """Renders one result in the requested format and writes it."""

    def __init__(self, args, writer: IReportWriter):
        self.args = args
        self.writer = writer

    def emit(self, kind: str, payload, text: str, rows: Optional[List[dict]] = None) -> None:
        if self.args.csv:
            if rows is None:
                raise PayloadError(f"--csv is not available for {kind}")
            rendered = self.writer.render_csv(rows)
        elif self.args.json:
            rendered = self.writer.render_json(kind, payload)
        else:
            rendered = text if text.endswith('\n') else text + '\n'
        self.writer.write(rendered, self.args.out)


def _dispatch(args, container) -> int:
    reader = container.get(IPayloadReader)
    out = _Output(args, container.get(IReportWriter))
    command = args.command

    if command in ('classify', 'length', 'mu'):
        g = reader.matrix(args.matrix)
        if command == 'classify':
            kind = classify(g).value
            out.emit(command, {'class': kind}, kind)
        else:
            value = float(translation_length(g) if command == 'length' else cartan_mu(g))
            out.emit(command, {command: value}, repr(value))
        return 0

    if command == 'dist':
        p = reader.point(args.p)
        if args.q is not None:
            q = reader.point(args.q)
        else:
            line = reader.line(args.line)
            if p.dim != 2 or not line.is_real:
                raise PayloadError('--line needs a half-plane point and a geodesic with real endpoints')
            q = project_to_line(p, line)
        value = dist(p, q)
        out.emit(command, {'dist': value}, repr(value))
        return 0

    if command in ('ratio-sup', 'drift'):
        j = Representation(tuple(reader.matrices(args.j)), args.mode)
        rho = Representation(tuple(reader.matrices(args.rho)), args.mode)
        spectrum = container.get(ISpectrumAnalyzer)
        if command == 'ratio-sup':
            result = spectrum.ratio_sup(j, rho, args.length)
            rows = [{'word': r.word, 'lambda_j': r.lambda_j, 'lambda_rho': r.lambda_rho,
                     'ratio': r.ratio, 'len': r.length} for r in result.top]
            head = 'empty (no hyperbolic j(γ))' if result.empty else repr(result.value)
            text = '\n'.join([f"C'_{args.length} = {head}"] +
                             [f"  {r.word}: {r.ratio!r}" for r in result.top])
        else:
            result = spectrum.drift_scan(j, rho, args.length)
            rows = [{'word': r.word, 'mu_j': r.mu_j, 'mu_rho': r.mu_rho, 'drift': r.drift,
                     'len': r.length} for r in result.records]
            text = (f"min drift {result.min_drift!r}, {result.violations} violations\n"
                    f"verdict: {result.verdict} ({result.caveat})\n"
                    f"fit: mu_rho ~ {result.fit_c!r} mu_j + {result.fit_d!r}")
        out.emit(command, result, text, rows)
        return 0

    if command == 'barycenter':
        points = reader.points(args.points)
        weighted = WeightedPointSet(points, reader.weights(args.weights, len(points)))
        solver = container.get(IBarycenterSolver)
        point = solver.barycenter(weighted)
        payload = {'point': point, 'gradient_norm': solver.gradient_norm(weighted, point)}
        out.emit(command, payload, ' '.join(repr(x) for x in _coords(point)))
        return 0

    if command == 'delaunay':
        points = reader.points(args.points) if args.points else _random_sites(args.random, args.seed)
        triangulator = container.get(ITriangulator)
        triangulation = triangulator.delaunay(PointSet2(points))
        report = triangulator.empty_ball_certificate(triangulation)
        if args.off:
            out.writer.write(out.writer.render_off(triangulation), args.off)
        payload = {'vertices': triangulation.vertices, 'triangles': triangulation.triangles,
                   'boundary': triangulation.boundary, 'certificates': report}
        text = '\n'.join(f"{a} {b} {c}" for a, b, c in triangulation.triangles)
        out.emit(command, payload, text)
        if not report.all_empty:
            logger.error("Empty-ball certificate failed (min margin %.3e)", report.min_margin)
            return 2
        return 0

    if command == 'extend':
        extender = container.get(ILipschitzExtender)
        data = extender.finite_map(reader.points(args.sources), reader.points(args.images), args.lipschitz)
        result = extender.one_point_extension(data, reader.point(args.p))
        text = f"C = {result.constant!r}\nq = {' '.join(repr(x) for x in _coords(result.point))}"
        out.emit(command, result, text)
        return 0

    try:
        k_values = tuple(int(k) for k in json.loads(args.k_values))
    except (ValueError, TypeError) as e:
        raise PayloadError(f"--k-values: expected a JSON list of integers ({e})") from e
    config = ScenarioConfig(args.id, k_max=args.kmax, n=args.n, m=args.m, length=args.length,
                            grid=args.grid, t=args.t, T=args.T, delta=args.delta,
                            k_values=k_values, seed=args.seed)
    report = container.get(IScenarioRunner).run(config)
    lines = [f"{args.id}: {'PASS' if report.passed else 'FAIL'}"]
    for check in report.checks:
        status = 'ok  ' if check.passed else 'FAIL'
        lines.append(f"  {status} {check.name}: {check.value!r} vs {check.expected!r} (tol {check.tolerance:g})")
    out.emit(args.id, report, '\n'.join(lines))
    return 0 if report.passed else 2


def _coords(point) -> List[float]:
    if point.dim == 2:
        return [point.u, point.v]
    return [point.a.real, point.a.imag, point.b]


def main(argv: Optional[List[str]] = None) -> int:
    """CLI entry point; returns the process exit code."""
    try:
        args = build_parser().parse_args(argv)
    except PayloadError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    if args.workers < 1:
        print("Error: --workers must be at least 1", file=sys.stderr)
        return 1
    container = create_container(dataclasses.replace(Settings(), enumeration_workers=args.workers))

    try:
        return _dispatch(args, container)
    except AssertionError as e:
        print(f"Check failed: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
