"""Command-line front end

Every subcommand prints one JSON payload with "schema": "v1" to standard
output, or a CSV table with --csv, or writes to --out FILE.json|FILE.csv.
Exit codes: 0 success, 1 domain error or failed check, 2 usage error.
"""

import os
import sys
import json
import math
import logging
import argparse
from dataclasses import dataclass
import numpy as np
from ttstar.core.cases import CaseId
from ttstar.core.params import StokesParams, AsymptoticData
from ttstar.core.reports import IdentityReport
from ttstar.core.constants import verify_identities
from ttstar.core.stokes import (
    closed_form_coefficients, numeric_coefficients,
    monodromy_eigenvalues, verify_tilde_symmetries,
    stokes_determinant_identity)
from ttstar.core.connection import verify_connection_symmetries, verify_circle_jumps
from ttstar.algorithms.regions import (
    in_region_a, in_region_b, stokes_to_gammas, gamma_to_stokes,
    integer_points, region_grid)
from ttstar.algorithms.radial_ode import (
    OdeConfig, integrate_inward, extract_gammas, verify_limits, connection_sweep)
from ttstar.algorithms.fredholm import (
    NystromGrid, c_from_stokes, fredholm_q,
    alpha_from_params, gammas_from_alphas, w_from_q)
from ttstar.algorithms.riemann_hilbert import (
    X_MAX, jump_G2, jump_G3, y0_leading, y0_from_contour,
    verify_y0_symmetries, positivity_X, solvable_from, threshold_table)
from ttstar.tools.export_json import to_json_payload, export_report_to_json
from ttstar.tools.export_csv import (
    REGION_GRID_HEADER, TRAJECTORY_HEADER, THRESHOLD_HEADER,
    write_rows, export_rows_to_csv)
from ttstar.exceptions.validation_exceptions import (
    ValidationException,
    InvalidArgumentException,
    IdentityMismatchException)
from ttstar.exceptions.region_exceptions import RegionException
from ttstar.exceptions.integration_exceptions import IntegrationException
from ttstar.exceptions.fredholm_exceptions import FredholmException
from ttstar.exceptions.riemann_hilbert_exceptions import RiemannHilbertException
from ttstar.exceptions.wrong_file_extension_exception import (
    WrongFileExtensionException)


logger = logging.getLogger(__name__)

CASES = tuple(case.value for case in CaseId)
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')
DOMAIN_ERRORS = (
    RegionException, IntegrationException, FredholmException, RiemannHilbertException,
    IdentityMismatchException)
USAGE_ERRORS = (ValidationException, WrongFileExtensionException)


@dataclass
class CommandResult:
    """Payload of a subcommand, table rows for CSV output and exit status"""

    payload: dict
    rows: list[tuple] | None = None
    header: tuple[str, ...] | None = None
    status: int = 0


def default_threads() -> int:
    """Returns THREADS from the environment, else the number of cores"""
    value = os.environ.get('THREADS')
    if value is None:
        return os.cpu_count() or 1
    try:
        threads = int(value)
    except ValueError:
        threads = 0
    if threads < 1:
        raise InvalidArgumentException(name='THREADS', requirement='positive integer is required')
    return threads


def _merged(title: str, case: str, reports: list[IdentityReport]) -> IdentityReport:
    merged = IdentityReport(title=title, case=case)
    for report in reports:
        merged.extend(report)
    return merged


def _stokes(args: argparse.Namespace) -> StokesParams:
    return StokesParams(args.s1, args.s2, getattr(args, 'case', '4a'))


def run_verify_identities(args: argparse.Namespace) -> CommandResult:
    """Constant identities and symmetries of the factors on random draws"""
    rng = np.random.default_rng(args.seed)
    cases = CASES if args.case == 'all' else (args.case,)
    reports = []
    for case in cases:
        draws = [StokesParams(s1, s2, case) for s1, s2 in rng.uniform(-2, 2, size=(args.draws, 2))]
        reports.append(verify_identities(case))
        reports.append(_merged('Tilde symmetries', case, [verify_tilde_symmetries(s) for s in draws]))
        if case == '4a':
            reports.append(_merged(
                'Connection symmetries', case, [verify_connection_symmetries(1, s) for s in draws]))
            reports.append(_merged('Circle jumps', case, [verify_circle_jumps(s) for s in draws]))
            reports.append(_merged(
                'Stokes determinant', case, [stokes_determinant_identity(s) for s in draws]))
    passed = all(report.passed for report in reports)
    for report in reports:
        logger.info('%s', report)
    return CommandResult(
        payload={'draws': args.draws, 'seed': args.seed, 'passed': passed, 'reports': reports},
        status=0 if passed else 1)


def run_classify(args: argparse.Namespace) -> CommandResult:
    """Region (a) and region (b) verdicts of one point"""
    s = _stokes(args)
    verdict = in_region_b(s) if args.details else in_region_a(s)
    if not args.details:
        return CommandResult(payload={'in_a': verdict.in_a, 'in_b': verdict.in_b})
    return CommandResult(payload=verdict.describe())


def run_map_gamma(args: argparse.Namespace) -> CommandResult:
    """Stokes parameters to asymptotic exponents or back"""
    if args.gamma0 is not None or args.gamma1 is not None:
        if args.gamma0 is None or args.gamma1 is None:
            raise InvalidArgumentException(
                name='gamma', requirement='both --gamma0 and --gamma1 are required')
        g = AsymptoticData(args.gamma0, args.gamma1, args.case)
        return CommandResult(payload={'gammas': g, 'stokes': gamma_to_stokes(g)})
    if args.s1 is None or args.s2 is None:
        raise InvalidArgumentException(
            name='s', requirement='either --s1, --s2 or --gamma0, --gamma1 are required')
    s = _stokes(args)
    return CommandResult(payload={'stokes': s, 'gammas': stokes_to_gammas(s)})


def run_region_grid(args: argparse.Namespace) -> CommandResult:
    """Classification of a rectangular grid"""
    rows = region_grid(
        args.case, ((args.s1_min, args.s1_max), (args.s2_min, args.s2_max)),
        args.step, threads=args.threads)
    payload = {
        'case': args.case,
        'step': args.step,
        'count_a': sum(1 for row in rows if row[2]),
        'count_b': sum(1 for row in rows if row[3]),
        'rows': rows}
    return CommandResult(payload=payload, rows=rows, header=REGION_GRID_HEADER)


def run_integer_points(args: argparse.Namespace) -> CommandResult:
    """Integer points of region (a) with cyclotomic factorizations"""
    window = None
    if args.window is not None:
        s1_lo, s1_hi, s2_lo, s2_hi = args.window
        window = ((s1_lo, s1_hi), (s2_lo, s2_hi))
    points, slivers = integer_points(args.case, window)
    return CommandResult(payload={
        'case': args.case, 'count': len(points), 'points': points, 'slivers': slivers})


def _ode_config(args: argparse.Namespace) -> OdeConfig:
    return OdeConfig(x_start=args.x_start, x_min=args.x_min, init_profile=args.profile)


def run_solve_ode(args: argparse.Namespace) -> CommandResult:
    """Inward trajectory of one point, fit of the exponents when it is smooth"""
    cfg = _ode_config(args)
    sol = integrate_inward(_stokes(args), cfg)
    payload = {'config': cfg, 'solution': sol}
    status = 0
    if sol.completed:
        # both fit the exponents over the innermost decade
        if sol.x_end <= 1e-3:
            payload['fit'] = extract_gammas(sol, cfg)
            payload['limits'] = verify_limits(sol, cfg)
    else:
        logger.error('Solution blows up at x = %s', sol.blow_up)
        status = 1
    payload['rows'] = sol.rows()
    return CommandResult(payload=payload, rows=sol.rows(), header=TRAJECTORY_HEADER, status=status)


def _random_gammas(rng: np.random.Generator, count: int) -> list[AsymptoticData]:
    samples = []
    while len(samples) < count:
        theta1, theta2 = sorted(rng.uniform(0.1, math.pi - 0.1, size=2))
        if theta2 - theta1 > 0.05:
            samples.append(AsymptoticData(4 * theta1 / math.pi - 1, 4 * theta2 / math.pi - 3))
    return samples


def run_connection_check(args: argparse.Namespace) -> CommandResult:
    """gamma -> s -> trajectory -> gamma for one pair or random interior samples"""
    if args.gamma0 is not None and args.gamma1 is not None:
        samples = [AsymptoticData(args.gamma0, args.gamma1)]
    elif args.samples > 0:
        samples = _random_gammas(np.random.default_rng(args.seed), args.samples)
    else:
        raise InvalidArgumentException(
            name='gamma', requirement='--gamma0 and --gamma1 or --samples are required')
    reports = connection_sweep(samples, _ode_config(args), threads=args.threads)
    passed = all(report.passed for report in reports)
    return CommandResult(
        payload={
            'passed': passed,
            'checks': [{'gammas': g, 'report': report} for g, report in zip(samples, reports)]},
        status=0 if passed else 1)


def run_fredholm(args: argparse.Namespace) -> CommandResult:
    """q_k from Fredholm determinants at the requested radii"""
    s = _stokes(args)
    params = c_from_stokes(s, args.branch)
    results = []
    for t in args.t:
        result = fredholm_q(t, params, NystromGrid.build(t, nodes=args.nodes), check=args.check)
        w0, w1 = w_from_q(result.q, args.branch)
        results.append({**result.describe(), 'w0': w0, 'w1': w1})
    payload = {'stokes': s, 'params': params, 'results': results}
    if args.alphas:
        alphas = alpha_from_params(params)
        payload['alphas'] = alphas
        payload['gammas'] = gammas_from_alphas(alphas, args.branch)
    return CommandResult(payload=payload)


def run_rh_y0(args: argparse.Namespace) -> CommandResult:
    """Leading-order Y(0, x) and the solution read from it"""
    s = _stokes(args)
    evaluations = []
    for x in args.x:
        y = y0_leading(s, x)
        entry = {**y.describe(), 'symmetries': verify_y0_symmetries(y)}
        if args.contour_check:
            quadrature = y0_from_contour(s, x, args.contour)
            entry['contour_residual'] = float(np.max(np.abs(quadrature - y.matrix)))
        evaluations.append(entry)
    return CommandResult(payload={'stokes': s, 'evaluations': evaluations})


def run_solvable_from(args: argparse.Namespace) -> CommandResult:
    """Solvability threshold of one point or of a grid"""
    if args.s1 is not None and args.s2 is not None:
        s = _stokes(args)
        threshold = solvable_from(s, x_max=args.x_max)
        return CommandResult(
            payload={'stokes': s, 'x_threshold': threshold, 'at_zero': positivity_X(s, 0.0)},
            rows=[(s.s1, s.s2, threshold)], header=THRESHOLD_HEADER)
    if not args.step > 0:
        raise InvalidArgumentException(name='step', requirement='step must be positive')
    points = [
        StokesParams(float(s1), float(s2))
        for s1 in np.arange(args.s1_min, args.s1_max + args.step / 2, args.step)
        for s2 in np.arange(args.s2_min, args.s2_max + args.step / 2, args.step)]
    if not points:
        raise InvalidArgumentException(name='bounds', requirement='grid is empty')
    rows = threshold_table(points, threads=args.threads)
    return CommandResult(payload={'rows': rows}, rows=rows, header=THRESHOLD_HEADER)


def run_char_poly(args: argparse.Namespace) -> CommandResult:
    """Closed-form and numerical coefficients of p with its roots"""
    s = _stokes(args)
    closed = closed_form_coefficients(s)
    numeric = numeric_coefficients(s)
    eigenvalues = monodromy_eigenvalues(s)
    return CommandResult(payload={
        'stokes': s,
        'closed_form': closed,
        'numeric': numeric,
        'mismatch': float(np.max(np.abs(closed - numeric))),
        'roots': np.roots(closed),
        'monodromy_eigenvalues': eigenvalues,
        'monodromy_moduli': np.abs(eigenvalues)})


def run_rh_jumps(args: argparse.Namespace) -> CommandResult:
    """Jump matrices at zeta = k e^{i theta} on one ray"""
    s = _stokes(args)
    theta = args.theta * math.pi
    if args.contour == 'gamma3':
        jumps = [jump_G3(theta, k, args.x, s) for k in args.k]
    else:
        jumps = [jump_G2(theta, k, args.x, s, args.contour) for k in args.k]
    return CommandResult(payload={'stokes': s, 'contour': args.contour, 'jumps': jumps})


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--threads', type=int, default=None, help='worker threads, default THREADS or cores')
    common.add_argument('--seed', type=int, default=0, help='seed of randomized checks')
    common.add_argument('--out', default=None, help='write to FILE.json or FILE.csv')
    common.add_argument('--csv', action='store_true', help='print the table as CSV')
    common.add_argument('--log-level', default='WARNING', choices=LOG_LEVELS)
    return common


def _add_point(parser: argparse.ArgumentParser, required: bool = True, case: bool = False) -> None:
    parser.add_argument('--s1', type=float, required=required, default=None)
    parser.add_argument('--s2', type=float, required=required, default=None)
    if case:
        parser.add_argument('--case', choices=CASES, default='4a')


def _add_ode(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--x-start', type=float, default=6.0)
    parser.add_argument('--x-min', type=float, default=1e-8)
    parser.add_argument('--profile', choices=('bessel', 'laplace'), default='bessel')


def build_parser() -> argparse.ArgumentParser:
    """Returns parser with all subcommands"""
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog='ttstar', description='tt*-Toda radial equations: Stokes data, regions, solutions')
    commands = parser.add_subparsers(dest='command', required=True)

    def command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub = command('verify-identities', run_verify_identities, 'constant identities and factor symmetries')
    sub.add_argument('--case', choices=CASES + ('all',), default='all')
    sub.add_argument('--draws', type=int, default=100)

    sub = command('classify', run_classify, 'region (a) and (b) membership')
    _add_point(sub, case=True)
    sub.add_argument('--details', action='store_true', help='all characterizations')

    sub = command('map-gamma', run_map_gamma, 'Stokes parameters <-> asymptotic exponents')
    _add_point(sub, required=False, case=True)
    sub.add_argument('--gamma0', type=float, default=None)
    sub.add_argument('--gamma1', type=float, default=None)

    sub = command('region-grid', run_region_grid, 'classification of a grid')
    sub.add_argument('--case', choices=CASES, default='4a')
    sub.add_argument('--s1-min', type=float, default=-6.0)
    sub.add_argument('--s1-max', type=float, default=6.0)
    sub.add_argument('--s2-min', type=float, default=-9.0)
    sub.add_argument('--s2-max', type=float, default=4.0)
    sub.add_argument('--step', type=float, default=0.12)

    sub = command('integer-points', run_integer_points, 'integer points of region (a)')
    sub.add_argument('--case', choices=CASES, default='4a')
    sub.add_argument(
        '--window', type=int, nargs=4, default=None,
        metavar=('S1_MIN', 'S1_MAX', 'S2_MIN', 'S2_MAX'))

    sub = command('solve-ode', run_solve_ode, 'inward integration of the radial system')
    _add_point(sub)
    _add_ode(sub)

    sub = command('connection-check', run_connection_check, 'end-to-end connection formula check')
    sub.add_argument('--gamma0', type=float, default=None)
    sub.add_argument('--gamma1', type=float, default=None)
    sub.add_argument('--samples', type=int, default=0, help='random interior samples')
    _add_ode(sub)

    sub = command('fredholm', run_fredholm, 'q_k from Fredholm determinants')
    _add_point(sub)
    sub.add_argument('--t', type=float, nargs='+', default=[1.0, 2.0])
    sub.add_argument('--branch', choices=('I', 'II'), default='I')
    sub.add_argument('--nodes', type=int, default=200)
    sub.add_argument('--check', action='store_true', help='grid doubling check')
    sub.add_argument('--alphas', action='store_true', help='track the alpha exponents')

    sub = command('rh-y0', run_rh_y0, 'leading-order Y(0, x)')
    _add_point(sub)
    sub.add_argument('--x', type=float, nargs='+', default=[3.0, 4.0, 5.0])
    sub.add_argument('--contour-check', action='store_true', help='compare with quadrature')
    sub.add_argument('--contour', choices=('rotated', 'original'), default='rotated')

    sub = command('solvable-from', run_solvable_from, 'large-x solvability threshold')
    _add_point(sub, required=False)
    sub.add_argument('--x-max', type=float, default=X_MAX)
    sub.add_argument('--s1-min', type=float, default=-4.0)
    sub.add_argument('--s1-max', type=float, default=4.0)
    sub.add_argument('--s2-min', type=float, default=-4.0)
    sub.add_argument('--s2-max', type=float, default=4.0)
    sub.add_argument('--step', type=float, default=1.0)

    sub = command('char-poly', run_char_poly, 'characteristic polynomial of the monodromy')
    _add_point(sub, case=True)

    sub = command('rh-jumps', run_rh_jumps, 'jump matrices on a ray')
    _add_point(sub)
    sub.add_argument('--theta', type=float, required=True, help='ray angle in units of pi')
    sub.add_argument('--x', type=float, default=1.0)
    sub.add_argument('--k', type=float, nargs='+', default=[0.5, 1.0, 2.0])
    sub.add_argument('--contour', choices=('rotated', 'original', 'gamma3'), default='rotated')

    return parser


def _emit(result: CommandResult, args: argparse.Namespace) -> None:
    if args.out is not None:
        if args.out.split('.')[-1] == 'csv':
            if result.rows is None:
                raise WrongFileExtensionException(received='csv', required='json')
            export_rows_to_csv(result.rows, result.header, args.out)
        else:
            export_report_to_json(result.payload, args.out)
    elif args.csv:
        if result.rows is None:
            raise InvalidArgumentException(
                name='--csv', requirement=f'{args.command} has no tabular output')
        write_rows(result.rows, result.header, sys.stdout)
    else:
        print(json.dumps(to_json_payload(result.payload), indent=2))


def main(argv: list[str] | None = None) -> int:
    """Runs one subcommand, returns the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return 0 if error.code in (0, None) else 2

    logging.basicConfig(
        level=args.log_level, stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s')

    try:
        if args.threads is None:
            args.threads = default_threads()
        elif args.threads < 1:
            raise InvalidArgumentException(name='--threads', requirement='positive integer is required')
        result = args.handler(args)
        _emit(result, args)
    except DOMAIN_ERRORS as error:
        print(error, file=sys.stderr)
        return 1
    except USAGE_ERRORS as error:
        print(error, file=sys.stderr)
        return 2
    return result.status


if __name__ == '__main__':
    raise SystemExit(main())
