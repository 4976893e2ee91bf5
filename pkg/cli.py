"""
Command-line front-end

Usage:
    python cli.py det samples/worked3x3.trop
    python cli.py witness samples/worked3x3.trop --format json
    python cli.py check --seed 7 --samples 200

Exit codes: 0 success, 1 usage error, 2 parse error, 3 domain error,
4 internal validation failure.
"""

import json
import logging
import sys
import time
from typing import Dict, List, Sequence, Tuple

import click
from dotenv import load_dotenv

from config import Config, configure_logging
from exceptions import MatrixParseError, TropicalAlgebraError, WitnessValidationError
from matrix_io import FORMATS, digest, format_matrix, parse_matrix, parse_vector
from models import LinearSystem, RunReport
from semiring import format_scalar
from services import (
    CheckService,
    DeterminantService,
    DigraphService,
    InverseService,
    LinsysService,
    RankService,
)
from tensor import TropMatrix
from validators import MatrixValidator

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_INTERNAL = 4


class TropicalGroup(click.Group):
    """Click group mapping library errors onto exit codes"""

    def invoke(self, ctx):
        state = ctx.ensure_object(dict)
        state['started'] = time.perf_counter()
        try:
            return super().invoke(ctx)
        except MatrixParseError as e:
            self._fail(ctx, state, e.message, EXIT_PARSE, 'Parse error')
        except WitnessValidationError as e:
            self._fail(ctx, state, e.message, EXIT_INTERNAL, 'Internal error')
        except TropicalAlgebraError as e:
            self._fail(ctx, state, e.message, EXIT_DOMAIN, 'Error')

    @staticmethod
    def _fail(ctx, state: Dict, message: str, code: int, label: str) -> None:
        click.echo(f"{label}: {message}", err=True)
        report = state.get('report') or RunReport(command=ctx.invoked_subcommand or '')
        report.exit_code = code
        report.error = message
        report.wall_time = time.perf_counter() - state['started']
        state['report'] = report
        ctx.exit(code)


def matrix_command(func):
    """Shared arguments: the matrix file (or `-` for stdin) and --format"""
    func = click.option('--format', 'fmt', type=click.Choice(FORMATS), default='plain',
                        show_default=True, help='Output format')(func)
    func = click.argument('path', type=click.Path(exists=True, dir_okay=False, allow_dash=True))(func)
    return func


def method_option(func):
    return click.option('--method', type=click.Choice(MatrixValidator.METHODS), default=None,
                        help='Determinant method (default from TROPICAL_DEFAULT_METHOD)')(func)


def _load(ctx, command: str, path: str) -> TropMatrix:
    with click.open_file(path, 'r', encoding='utf-8') as handle:
        text = handle.read()
    matrix = parse_matrix(text).matrix
    ctx.obj['report'] = RunReport(command=command, inputs_digest=digest(matrix))
    return matrix


def _emit(ctx, fmt: str, payload: Dict, lines: List[str], validation: Dict[str, bool] = None) -> RunReport:
    state = ctx.obj
    report = state.get('report') or RunReport(command=ctx.command.name)
    report.payload = payload
    report.validation = validation or {}
    report.wall_time = time.perf_counter() - state['started']
    state['report'] = report
    if fmt == 'json':
        click.echo(json.dumps(report.to_dict(), indent=2))
    else:
        for line in lines:
            click.echo(line)
    return report


def _verdict(flag: bool) -> str:
    return 'OK' if flag else 'FAILED'


@click.group(cls=TropicalGroup)
def cli():
    """Supertropical matrix algebra toolkit"""


# ==================== DETERMINANT COMMANDS ====================

@cli.command()
@matrix_command
@method_option
@click.pass_context
def det(ctx, path, fmt, method):
    """Print the tropical determinant"""
    matrix = _load(ctx, 'det', path)
    method = method or Config.DEFAULT_METHOD
    value = DeterminantService.det(matrix, method)
    payload = {
        'determinant': format_scalar(value),
        'tag': DeterminantService.tag_of(value),
        'singular': DeterminantService.is_singular(matrix, method),
        'method': method
    }
    _emit(ctx, fmt, payload, [format_scalar(value)])


@cli.command()
@matrix_command
@method_option
@click.pass_context
def adjoint(ctx, path, fmt, method):
    """Print the adjoint matrix"""
    matrix = _load(ctx, 'adjoint', path)
    result = DeterminantService.adjoint(matrix, method or Config.DEFAULT_METHOD)
    _emit(ctx, fmt, {'adjoint': result.to_lists()}, [format_matrix(result).rstrip('\n')])


@cli.command()
@matrix_command
@click.pass_context
def pinv(ctx, path, fmt):
    """Print the canonical pseudo inverse and check both products"""
    matrix = _load(ctx, 'pinv', path)
    inverse = InverseService.pseudo_inverse(matrix)
    right, left = InverseService.product_reports(matrix, inverse)
    payload = {
        'pseudo_inverse': inverse.to_lists(),
        'right_product': right.to_dict(),
        'left_product': left.to_dict()
    }
    lines = [format_matrix(inverse).rstrip('\n')]
    for label, report in (('A*B', right), ('B*A', left)):
        line = f"{label} pseudo unit: {_verdict(report.verdict)}"
        if report.failures():
            line += f" ({'; '.join(report.failures())})"
        lines.append(line)
    validation = {'right_pseudo_unit': right.verdict, 'left_pseudo_unit': left.verdict}
    _emit(ctx, fmt, payload, lines, validation)


# ==================== RANK COMMANDS ====================

def _location_line(location) -> str:
    if location is None:
        return 'none'
    rows = ' '.join(str(i) for i in location.rows)
    cols = ' '.join(str(j) for j in location.cols)
    return f"rows {rows} cols {cols}"


@cli.command()
@matrix_command
@click.pass_context
def rank(ctx, path, fmt):
    """Print the tropical rank and a maximal nonsingular minor"""
    matrix = _load(ctx, 'rank', path)
    location = RankService.max_nonsingular_minor(matrix)
    value = location.size if location is not None else 0
    payload = {'rank': value, 'minor': location.to_dict() if location else None}
    _emit(ctx, fmt, payload, [str(value), _location_line(location)])


@cli.command('minor-max')
@matrix_command
@click.pass_context
def minor_max(ctx, path, fmt):
    """Print the location of a maximal nonsingular minor"""
    matrix = _load(ctx, 'minor-max', path)
    location = RankService.max_nonsingular_minor(matrix)
    payload = {'minor': location.to_dict() if location else None}
    _emit(ctx, fmt, payload, [_location_line(location)])


@cli.command()
@matrix_command
@click.pass_context
def depend(ctx, path, fmt):
    """Decide whether the rows are tropically dependent"""
    matrix = _load(ctx, 'depend', path)
    rows = matrix.row_vectors()
    if not RankService.is_dependent(rows):
        _emit(ctx, fmt, {'dependent': False, 'witness': None}, ['independent'])
        return
    witness = RankService.dependence_witness(rows)
    valid = RankService.validate_witness(rows, witness.coefficients)
    payload = {'dependent': True, 'witness': witness.to_dict()}
    lines = ['dependent', str(witness), f"validation {_verdict(valid)}"]
    _emit(ctx, fmt, payload, lines, {'witness': valid})


@cli.command()
@matrix_command
@click.pass_context
def witness(ctx, path, fmt):
    """Print validated dependence coefficients for the rows"""
    matrix = _load(ctx, 'witness', path)
    rows = matrix.row_vectors()
    if matrix.m == matrix.n:
        result = RankService.square_witness(matrix)
    else:
        result = RankService.dependence_witness(rows)
    valid = RankService.validate_witness(rows, result.coefficients)
    payload = {'dependent': True, 'witness': result.to_dict()}
    _emit(ctx, fmt, payload, [str(result), f"validation {_verdict(valid)}"], {'witness': valid})


# ==================== SYSTEMS AND GRAPHS ====================

@cli.command()
@matrix_command
@click.option('--point', default=None, help='Evaluate this point instead of constructing one, e.g. "0 -1"')
@click.pass_context
def solve(ctx, path, fmt, point):
    """Find a pure-real solution of the homogeneous system A"""
    matrix = _load(ctx, 'solve', path)
    system = LinearSystem(matrix)
    if point is not None:
        report = LinsysService.is_solution(system, parse_vector(point))
    else:
        report = LinsysService.find_pure_real_solution(system)

    if report is None:
        _emit(ctx, fmt, {'solution': None, 'reason': 'coefficient matrix is nonsingular'},
              ['no pure-real solution: coefficient matrix is nonsingular'])
        return

    lines = [
        f"point {' '.join(report.point.to_list())}",
        f"kind {report.kind}",
        f"values {' '.join(format_scalar(v) for v in report.values)}",
        f"solution {'yes' if report.is_solution else 'no'}",
    ]
    if report.diagnostic:
        lines.append(f"diagnostic {report.diagnostic}")
    _emit(ctx, fmt, {'solution': report.to_dict()}, lines, {'solution': report.is_solution})


@cli.command()
@matrix_command
@click.option('--zero', is_flag=True, help='Keep only the edges of weight 0 and 0g')
@click.pass_context
def digraph(ctx, path, fmt, zero):
    """Print the weighted digraph as an `i j weight` edge list"""
    matrix = _load(ctx, 'digraph', path)
    graph = DigraphService.digraph_of(matrix)
    if zero:
        graph = DigraphService.reduced_zero_graph(graph)
    cycle = DigraphService.find_simple_cycle(graph)
    payload = graph.to_dict()
    payload['simple_cycle'] = cycle.to_dict() if cycle else None
    _emit(ctx, fmt, payload, [DigraphService.format_edge_list(graph).rstrip('\n')])


# ==================== CHECK AND BENCH ====================

@cli.command()
@click.option('--seed', type=click.IntRange(min=0), default=0, show_default=True)
@click.option('--samples', type=click.IntRange(min=1), default=1000, show_default=True,
              help='Matrices per order in the main corpus')
@click.option('--max-n', type=click.IntRange(2, MatrixValidator.MAX_RANK_N), default=5, show_default=True)
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default='plain')
@click.pass_context
def check(ctx, seed, samples, max_n, fmt):
    """Run the seeded cross-validation suite"""
    ctx.obj['report'] = RunReport(command='check')
    results = CheckService.run(seed=seed, samples=samples, max_n=max_n)
    summary = CheckService.summary(results)
    lines = [f"{r.name:<24} passed {r.passed:>6}  failed {r.failed:>4}" for r in results]
    lines.append(f"total: {summary['passed']} passed, {summary['failed']} failed")
    for r in results:
        if r.first_failure:
            lines.append(f"first failure in {r.name}: {r.first_failure}")
    payload = {'seed': seed, 'criteria': [r.to_dict() for r in results], 'summary': summary}
    report = _emit(ctx, fmt, payload, lines, {r.name: r.ok for r in results})
    if summary['failed']:
        report.exit_code = EXIT_INTERNAL
        ctx.exit(EXIT_INTERNAL)


@cli.command()
@click.option('--seed', type=click.IntRange(min=0), default=0, show_default=True)
@click.option('--max-n', type=click.IntRange(min=2), default=None,
              help='Largest order (default from TROPICAL_BENCH_MAX_N)')
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default='plain')
@click.pass_context
def bench(ctx, seed, max_n, fmt):
    """Time brute force against the assignment method"""
    ctx.obj['report'] = RunReport(command='bench')
    rows = CheckService.bench(seed=seed, max_n=max_n or Config.BENCH_MAX_N)
    lines = [f"{'n':>3}  {'brute_s':>10}  {'fast_s':>10}  budget"]
    for row in rows:
        brute = 'guarded' if row.brute_seconds is None else f"{row.brute_seconds:.6f}"
        budget = 'ok' if row.within_budget else 'over'
        lines.append(f"{row.n:>3}  {brute:>10}  {row.fast_seconds:>10.6f}  {budget}")
    checks = {'within_budget': all(r.within_budget for r in rows)}
    report = _emit(ctx, fmt, {'rows': [r.to_dict() for r in rows]}, lines, checks)
    if not checks['within_budget']:
        report.exit_code = EXIT_INTERNAL
        ctx.exit(EXIT_INTERNAL)


# ==================== ENTRY POINTS ====================

def run_command(argv: Sequence[str]) -> Tuple[RunReport, int]:
    """
    Run one command line without exiting the interpreter

    Returns:
        (RunReport, exit code)
    """
    state: Dict = {}
    try:
        code = cli.main(args=list(argv), prog_name='tropical', standalone_mode=False, obj=state)
    except click.exceptions.Abort:
        code = EXIT_USAGE
    except click.ClickException as e:
        e.show()
        code = EXIT_USAGE
    if not isinstance(code, int):
        code = EXIT_OK

    report = state.get('report') or RunReport(command=argv[0] if argv else '')
    report.exit_code = code
    return report, code


def main() -> None:
    load_dotenv()
    Config.reload()
    configure_logging()
    _, code = run_command(sys.argv[1:])
    sys.exit(code)


if __name__ == '__main__':
    main()
