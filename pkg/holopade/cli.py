"""Command line: construct, verify, det, criterion, table, gop, growth and decay.

Every command writes one report (JSON, or Markdown for `table`) to --out or
to stdout, and exits with the code attached to the error class that stopped
it: 0 success, 1 verification failure, 2 degenerate approximant, 3 failed
hypothesis, 4 insufficient precision, 5 bad configuration.
"""
import argparse
import dataclasses
import logging
import sys
from fractions import Fraction
from typing import Callable, Optional, Sequence

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from . import __version__
from .core.numbers import to_rational
from .core.poly import Poly
from .criterion.arith import (parse_u_range, render_table_json, render_table_markdown,
                              threshold_table)
from .criterion.constants import criterion_constants
from .criterion.estimates import decay_check, denominator_growth
from .criterion.gop import g_operator_check, g_operator_from_polys
from .criterion.places import PlaceQ
from .det.lab import DetSetup, build_delta
from .errors import ConfigError, HypothesisError, VerificationError
from .holonomic.families import FAMILIES, FamilySpec, family_streams
from .pade.construct import construct_family
from .pade.oracle import kernel_dimension, oracle_contains, proportional, solve_pade_oracle
from .utils.config import FORMATS, RunConfig, load_config
from .utils.parallel import ordered_map
from .utils.serialization import dumps, envelope, write_atomic

log = logging.getLogger()

console = Console(stderr=True)

# flags whose values may start with a minus sign
EXPRESSION_FLAGS = ('--a', '--a1', '--b', '--gamma', '--delta', '--alpha', '--beta', '--eps')


@dataclasses.dataclass
class Outcome:
    result: dict
    code: int = 0
    markdown: Optional[str] = None


#region config helpers
def _range(name: str, text: str) -> list[int]:
    try:
        values = parse_u_range(text)
    except ValueError as e:
        raise ConfigError(f'{name} must look like "3", "1..4" or "1,2,5", got {text!r}') from e
    if not values:
        raise ConfigError(f'{name} = {text!r} is empty')
    return values


def _single(name: str, text: str) -> int:
    values = _range(name, text)
    if len(values) != 1:
        raise ConfigError(f'a single value of {name} is needed, got {text!r}')
    return values[0]


def _rationals(name: str, values: Sequence[str]) -> tuple[Fraction, ...]:
    try:
        return tuple(to_rational(str(x).strip()) for x in values)
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError(f'{name} must be exact rationals such as "3" or "-1/2": {e}') from e


def _poly(name: str, text: str) -> Poly:
    try:
        return Poly.parse(text)
    except ValueError as e:
        raise ConfigError(f'{name}: {e}') from e


def _need(cfg: RunConfig, name: str):
    value = getattr(cfg, name)
    if value is None or value == ():
        raise ConfigError(f'{cfg.command} needs --{name.replace("_", "-")}')
    return value


def _one_rational(cfg: RunConfig, name: str) -> Fraction:
    values = _rationals(name, _need(cfg, name))
    if len(values) != 1:
        raise ConfigError(f'{cfg.command} takes exactly one --{name}, got {len(values)}')
    return values[0]


def family_spec(cfg: RunConfig) -> FamilySpec:
    family = _need(cfg, 'family')
    if family not in FAMILIES:
        raise ConfigError(f'unknown family {family!r}; expected one of {FAMILIES}')
    gamma = _rationals('gamma', cfg.gamma)
    delta = _rationals('delta', cfg.delta)
    alpha = _rationals('alpha', cfg.alpha)
    if family == 'custom':
        spec = FamilySpec('custom',
                          a=_poly('a', _need(cfg, 'a')),
                          a1=_poly('a1', cfg.a1) if cfg.a1 is not None else None,
                          b=tuple(_poly('b', b) for b in _need(cfg, 'b')))
    else:
        spec = FamilySpec(family, u=cfg.u, gamma=gamma, delta=delta, alpha=alpha)
    if cfg.d is not None and cfg.d != spec.d:
        raise ConfigError(f'--d {cfg.d} disagrees with the {spec.d} operators given')
    return spec


def _place(cfg: RunConfig) -> PlaceQ:
    try:
        return PlaceQ.parse(cfg.place)
    except ValueError as e:
        raise ConfigError(str(e)) from e
#endregion


#region grid workers
def _verify_task(task: tuple) -> dict:
    spec, n, h, slack = task
    fam = family_streams(spec)
    system = construct_family(fam, n, h, slack=slack, strict=False)
    streams = fam.flat_streams()
    weights = [n] * len(streams)
    M = fam.M(h, n)
    dim = kernel_dimension(streams, weights, M)
    oracle_P = solve_pade_oracle(streams, weights, M, slack=slack).P if dim == 1 else None
    return {
        'n': n,
        'h': h,
        'verified': system.verified,
        'kernel_dimension': dim,
        'oracle_contains': oracle_contains(system.P, streams, weights),
        'proportional': proportional(system.P, oracle_P) if oracle_P is not None else None,
        'system': system.to_json(),
    }


def _det_task(task: tuple) -> dict:
    spec, n, dump_matrix = task
    report = build_delta(DetSetup(spec, n), keep_matrix=dump_matrix)
    return report.to_json(dump_matrix=dump_matrix)
#endregion


#region commands
def cmd_construct(cfg: RunConfig) -> Outcome:
    spec = family_spec(cfg)
    n = _single('n', cfg.n)
    h = cfg.h if cfg.h is not None else 0
    system = construct_family(family_streams(spec), n, h, slack=cfg.slack, strict=False)
    console.print(f'{spec.family} n = {n} h = {h}: deg P = {system.P.degree}, '
                  f'{"[green]verified" if system.verified else "[red]NOT verified"}')
    result = {'family': spec.to_json(), 'n': n, 'h': h, 'system': system.to_json()}
    return Outcome(result, 0 if system.verified else VerificationError.exit_code)


def cmd_verify(cfg: RunConfig) -> Outcome:
    spec = family_spec(cfg)
    W = family_streams(spec).W
    tasks = []
    for n in _range('n', cfg.n):
        hs = [cfg.h] if cfg.h is not None else range(W + 1)
        tasks += [(spec, n, h, cfg.slack) for h in hs]
    rows = ordered_map(_verify_task, tasks, workers=cfg.workers, desc='verify')
    table = Table('n', 'h', 'verified', 'kernel dim', 'in oracle', 'proportional')
    ok = True
    for r in rows:
        good = r['verified'] and r['oracle_contains'] and r['proportional'] is not False
        ok = ok and good
        table.add_row(str(r['n']), str(r['h']), str(r['verified']), str(r['kernel_dimension']),
                      str(r['oracle_contains']), str(r['proportional']))
    console.print(table)
    result = {'family': spec.to_json(), 'checks': rows, 'all_verified': ok}
    return Outcome(result, 0 if ok else VerificationError.exit_code)


def cmd_det(cfg: RunConfig) -> Outcome:
    spec = family_spec(cfg)
    tasks = [(spec, n, cfg.dump_matrix) for n in _range('n', cfg.n)]
    reports = ordered_map(_det_task, tasks, workers=cfg.workers, desc='det')
    table = Table('n', 'Delta_n', 'closed form', 'match', 'diagnosis')
    for r in reports:
        table.add_row(str(r['n']), r['delta'], r['closed_form'], str(r['match']), r['diagnosis'])
    console.print(table)
    return Outcome({'family': spec.to_json(), 'reports': reports})


def cmd_criterion(cfg: RunConfig) -> Outcome:
    u = _need(cfg, 'u')
    alpha = _one_rational(cfg, 'alpha')
    report = criterion_constants(u, alpha, _place(cfg), to_rational(cfg.eps), prec=cfg.precision)
    verdict = '[green]applicable' if report.applicable else '[yellow]V <= epsilon'
    console.print(f'u = {u}, alpha = {alpha}, place {cfg.place}: {verdict}')
    return Outcome(report.to_json())


def cmd_table(cfg: RunConfig) -> Outcome:
    rows = threshold_table(_range('us', cfg.us), prec=cfg.precision)
    table = Table('u', 'log(alpha) >')
    for r in rows:
        table.add_row(str(r.u), r.text)
    console.print(table)
    return Outcome(render_table_json(rows, cfg.digits), markdown=render_table_markdown(rows))


def cmd_gop(cfg: RunConfig) -> Outcome:
    if cfg.a is not None:
        if len(cfg.b) != 1:
            raise ConfigError('gop with --a takes exactly one --b')
        report = g_operator_from_polys(_poly('a', cfg.a), _poly('b', cfg.b[0]))
    else:
        gamma = cfg.gamma[0] if cfg.gamma else '1'
        report = g_operator_check(_need(cfg, 'alpha'), cfg.beta, gamma)
    console.print(f'residues {[str(r) for r in report.residues]}: G-operator {report.rational}')
    return Outcome(report.to_json())


def cmd_growth(cfg: RunConfig) -> Outcome:
    u = _need(cfg, 'u')
    report = denominator_growth(u, cfg.n_max)
    out = report.to_json(cfg.digits)
    out['u'] = u
    console.print(f'u = {u}: (1/n) log D_n at n = {cfg.n_max} is '
                  f'{float(report.ratio(cfg.n_max)):.4f}, bound {float(report.bound):.4f}')
    return Outcome(out)


def cmd_decay(cfg: RunConfig) -> Outcome:
    u = _need(cfg, 'u')
    alpha = _one_rational(cfg, 'alpha')
    report = decay_check(u,
                         alpha,
                         _range('N', cfg.N),
                         place=_place(cfg),
                         slack=cfg.decay_slack,
                         prec=cfg.precision)
    for f in report.fits:
        console.print(f'{f.name}: slope {f.slope:.4f}, bound {f.bound:.4f} (+{f.slack})')
    return Outcome(report.to_json())


HANDLERS: dict[str, Callable[[RunConfig], Outcome]] = {
    'construct': cmd_construct,
    'verify': cmd_verify,
    'det': cmd_det,
    'criterion': cmd_criterion,
    'table': cmd_table,
    'gop': cmd_gop,
    'growth': cmd_growth,
    'decay': cmd_decay,
}
#endregion


def render(cfg: RunConfig, outcome: Outcome) -> str:
    if cfg.format == 'markdown':
        if outcome.markdown is None:
            raise ConfigError(f'markdown output is only available for table, not {cfg.command}')
        return outcome.markdown
    return dumps(envelope(cfg.command, outcome.result, cfg.to_json()))


#region argument parsing
class _Parser(argparse.ArgumentParser):

    def error(self, message: str):
        raise ConfigError(f'{self.prog}: {message}')


def _add_common(p: argparse.ArgumentParser):
    g = p.add_argument_group('run')
    g.add_argument('--config', dest='config_path', help='TOML run file')
    g.add_argument('--precision', type=int, help='binary precision of real arithmetic')
    g.add_argument('--out', help='report path (stdout when omitted)')
    g.add_argument('--format', choices=FORMATS)
    g.add_argument('--dump-matrix', dest='dump_matrix', action='store_true')
    g.add_argument('--log-level', dest='log_level')
    g.add_argument('--workers', type=int)
    g.add_argument('--seed', type=int, help='recorded in the report')
    g.add_argument('--slack', type=int, help='extra series coefficients kept when verifying')


def _add_family(p: argparse.ArgumentParser):
    g = p.add_argument_group('family')
    g.add_argument('--family', choices=FAMILIES)
    g.add_argument('--u', type=int)
    g.add_argument('--d', type=int, help='number of operators, checked against the parameters')
    g.add_argument('--gamma', action='append')
    g.add_argument('--delta', action='append')
    g.add_argument('--alpha', action='append')
    g.add_argument('--a', help='custom family: the polynomial a(z)')
    g.add_argument('--a1', help='custom family: the factor a_1 of a')
    g.add_argument('--b', action='append', help='custom family: one b_j(z) per operator')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='holopade', description='Exact Pade approximants of holonomic series')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    def add(name: str, text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=text, argument_default=argparse.SUPPRESS)
        _add_common(p)
        return p

    p = add('construct', 'build P_{n,h} by the Rodrigues formula and verify it')
    _add_family(p)
    p.add_argument('--n')
    p.add_argument('--h', type=int)

    p = add('verify', 'construct every h and compare with the linear-algebra oracle')
    _add_family(p)
    p.add_argument('--n', help='"2" or a range "1..4"')
    p.add_argument('--h', type=int)

    p = add('det', 'evaluate Delta_n and compare with its closed form')
    _add_family(p)
    p.add_argument('--n', help='"2" or a range "1..4"')

    p = add('criterion', 'constants of the linear-independence criterion')
    p.add_argument('--u', type=int)
    p.add_argument('--alpha', action='append')
    p.add_argument('--place', help='"inf" or a prime')
    p.add_argument('--eps')

    p = add('table', 'minimal log(alpha) with V(alpha) > 0')
    p.add_argument('--u', dest='us', help='"2..15" or a list "2,5,7"')

    p = add('gop', 'rational-residue test for -a d + b')
    p.add_argument('--alpha', action='append', help='root of a')
    p.add_argument('--beta', action='append', help='root of b')
    p.add_argument('--gamma', action='append', help='leading coefficient of b over that of a')
    p.add_argument('--a', help='a(z) with rational coefficients, factored by sympy')
    p.add_argument('--b', action='append', help='b(z) with rational coefficients')

    p = add('growth', 'denominators of the Pochhammer ratios')
    p.add_argument('--u', type=int)
    p.add_argument('--n-max', dest='n_max', type=int)

    p = add('decay', 'slopes of the remainders at a place')
    p.add_argument('--u', type=int)
    p.add_argument('--alpha', action='append')
    p.add_argument('--N', help='range of N, e.g. "1..6"')
    p.add_argument('--place', help='"inf" or a prime')
    p.add_argument('--decay-slack', dest='decay_slack', type=float)
    return parser
#endregion


def _attach_values(argv: Sequence[str]) -> list[str]:
    """'--b -2z' becomes '--b=-2z', which argparse would otherwise read as an option."""
    out, i = [], 0
    while i < len(argv):
        arg = argv[i]
        if arg in EXPRESSION_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith('-'):
            out.append(f'{arg}={argv[i + 1]}')
            i += 2
        else:
            out.append(arg)
            i += 1
    return out


def run(argv: Optional[Sequence[str]] = None) -> int:
    argv = _attach_values(sys.argv[1:] if argv is None else list(argv))
    args = vars(build_parser().parse_args(argv))
    config_path = args.pop('config_path', None)
    cfg = load_config(args, config_path)
    logging.basicConfig(level=cfg.log_level, format='%(asctime)s - %(levelname)s - %(message)s')
    outcome = HANDLERS[cfg.command](cfg)
    text = render(cfg, outcome)
    if cfg.out is not None:
        write_atomic(cfg.out, text)
    else:
        sys.stdout.write(text)
    return outcome.code


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        return run(argv)
    except (ValueError, RuntimeError) as e:
        code = getattr(e, 'exit_code', None)
        if code is None:
            if isinstance(e, NotImplementedError):
                code = HypothesisError.exit_code
            elif isinstance(e, ValueError):
                code = ConfigError.exit_code
            else:
                raise
        log.debug('run failed', exc_info=True)
        console.print(f'[red]{type(e).__name__}[/red]: {escape(str(e))}')
        return code


if __name__ == '__main__':
    sys.exit(main())
