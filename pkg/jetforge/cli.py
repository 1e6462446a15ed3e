# -*- coding: utf-8 -*-

"""
jetforge.cli
~~~~~~~~~~~~

命令行入口： ::

    jetforge jetify|smooth|flatness|fiber|tangent|verify|sweep <file> [options]

`<file>` 为 `-` 时从标准输入读取问题文件。

退出码：

* smooth：0 光滑，1 奇异，2 无法判定
* flatness、sweep：0 未找到见证，1 证明了非平坦
* verify：0 所有检查通过，1 有检查失败
* 任何错误：3
"""

import sys
import logging
import argparse

from .compat import to_unicode
from .exceptions import JetError, SmoothOrigin, NoWitnessFound, InvalidArgument
from .problem import parse_problem
from .jets import jetify, fiber_over_trivial_jet, jet_scheme_dimension
from .criteria import (embedding_dimension_at_origin, jet_smoothness_report, flatness_witness, verify_witness,
                       tangent_space_report, sweep_flatness)
from .models import SMOOTH, SINGULAR, FIBER_JUMP
from . import json_utils
from . import defaults

logger = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INCONCLUSIVE = 2
EXIT_ERROR = 3

_GLOBAL_DIMENSION_NOTE = '  note: dim(X,0) is the global dimension of X, components away from the origin can raise it'


def _echo(text=''):
    sys.stdout.write(text + '\n')


def _read_source(path):
    if path == '-':
        return to_unicode(sys.stdin.read())
    with open(path, 'rb') as f:
        return to_unicode(f.read())


def _split_vector(text):
    if text is None:
        return None
    return text.replace(',', ' ').split()


def _load(args):
    problem = parse_problem(_read_source(args.file))
    ideal = problem.ideal(translate=_split_vector(args.translate))
    reduced = args.reduced or problem.reduced
    return problem, ideal, reduced


def _fmt(poly, names):
    return poly.to_string(names)


def cmd_jetify(args):
    _, ideal, _ = _load(args)
    J = jetify(ideal, args.m)

    if args.json:
        _echo(json_utils.dumps(json_utils.to_jet_ideal(J)))
        return EXIT_OK

    _echo('X_{0} of {1} over {2}, {3} jet variables'.format(J.m, ideal, ideal.field, J.nvars))
    if ideal.is_zero():
        _echo('zero ideal: X_{0} is the affine space A^{1}'.format(J.m, J.nvars))
        return EXIT_OK

    for g, f in enumerate(ideal.generators):
        _echo('generator {0}: {1}'.format(g + 1, _fmt(f, ideal.names)))
        for i in range(J.m + 1):
            F = J.get(g, i)
            if F.is_zero():
                _echo('  F[{0}] = 0'.format(i))
            else:
                _echo('  F[{0}] (weight {0}) = {1}'.format(i, _fmt(F, ideal.names)))
    return EXIT_OK


def cmd_smooth(args):
    _, ideal, _ = _load(args)
    emb = embedding_dimension_at_origin(ideal)
    report = jet_smoothness_report(emb.ideal, args.m)

    if args.json:
        obj = json_utils.to_smoothness(report)
        obj['embdim'] = emb.embdim
        obj['embedding_exact'] = emb.exact
        _echo(json_utils.dumps(obj))
    else:
        _echo('embedding dimension at the origin: {0}{1}'.format(
            emb.embdim, '' if emb.exact else ' (presentation kept)'))
        _echo('X_{0} at 0_{0}: jacobian rank {1}, codimension {2}'.format(
            report.m, report.jacobian_rank, '?' if report.codim_expected is None else report.codim_expected))
        for note in report.notes:
            _echo('  note: {0}'.format(note))
        _echo(report.verdict)

    if report.verdict == SMOOTH:
        return EXIT_OK
    if report.verdict == SINGULAR:
        return EXIT_NEGATIVE
    return EXIT_INCONCLUSIVE


def _print_witness(w):
    if w.kind == FIBER_JUMP:
        _echo('witness: fiber jump over 0_{0}, fiber = A^{1}, {2}*dim(X,0) = {3}'.format(
            w.m, w.fiber_dim, w.m_prime - w.m, (w.m_prime - w.m) * w.dim_at_origin))
        _echo(_GLOBAL_DIMENSION_NOTE)
        return
    _echo('witness: F = F[{0}] of generator {1}, d = {2}'.format(w.level_used, w.source_generator + 1, w.d))
    _echo('  F = {0}'.format(w.F))
    if w.exponent_data is not None:
        data = w.exponent_data
        _echo('  certificate: s = {0}, e = {1}, coordinate {2}'.format(data.s, data.e, data.j0))


def _print_report(report):
    for c in report.checks:
        _echo('  [{0}] {1}: {2}'.format('ok' if c.passed else 'FAIL', c.name, c.detail))


def cmd_flatness(args):
    _, ideal, reduced = _load(args)
    if args.m_prime <= args.m:
        raise InvalidArgument('m_prime', args.m_prime, 'need m < m_prime')

    try:
        w = flatness_witness(ideal, args.m, args.m_prime, reduced)
    except (SmoothOrigin, NoWitnessFound) as e:
        if args.json:
            _echo(json_utils.dumps({'verdict': 'NO WITNESS FOUND', 'reason': e.message}))
        else:
            _echo('NO WITNESS FOUND: {0}'.format(e.message))
        return EXIT_OK

    report = verify_witness(w, ideal, args.verify_bound)
    verdict = 'NOT FLAT' if report.passed else 'NO WITNESS FOUND'

    if args.witness_out:
        with open(args.witness_out, 'w') as f:
            f.write(json_utils.dumps(json_utils.to_witness(w)) + '\n')

    if args.json:
        _echo(json_utils.dumps({'verdict': verdict,
                                'witness': json_utils.to_witness(w),
                                'verification': json_utils.to_verification(report)}))
    else:
        _print_witness(w)
        _print_report(report)
        _echo(verdict)

    return EXIT_NEGATIVE if report.passed else EXIT_OK


def cmd_fiber(args):
    _, ideal, _ = _load(args)
    fiber = fiber_over_trivial_jet(ideal, args.m, args.m_prime, _split_vector(args.point))

    if args.json:
        obj = json_utils.to_fiber(fiber)
        obj['dimension'] = fiber.dimension()
        obj['jet_scheme_dimension'] = jet_scheme_dimension(ideal, args.m_prime)
        _echo(json_utils.dumps(obj))
        return EXIT_OK

    _echo('fiber of X_{0} -> X_{1} over the trivial jet, in A^{2}'.format(
        fiber.m_prime, fiber.m, fiber.ambient_dim))
    for e in fiber.entries:
        _echo('  F[{0}] of generator {1}: {2}'.format(e.level, e.generator + 1, e.poly))
    if fiber.is_free:
        _echo('fiber ideal is zero: fiber = A^{0}'.format(fiber.ambient_dim))
    else:
        _echo('fiber dimension: {0}'.format(fiber.dimension()))
    _echo('dim X_{0} = {1}'.format(fiber.m_prime, jet_scheme_dimension(ideal, args.m_prime)))
    return EXIT_OK


def cmd_tangent(args):
    _, ideal, _ = _load(args)
    report = tangent_space_report(ideal)

    if args.json:
        _echo(json_utils.dumps(json_utils.to_tangent(report)))
    else:
        _echo('dim pi_1^-1(0) = {0}'.format(report.fiber_dim))
        _echo('embdim(X,0) = {0}'.format(report.embdim))
        _echo('dim(X,0) = {0}'.format(report.dim_at_origin))
        _echo(_GLOBAL_DIMENSION_NOTE)
        _echo('singular' if report.singular else 'smooth')
    return EXIT_OK


def cmd_verify(args):
    _, ideal, _ = _load(args)
    w = json_utils.parse_witness(_read_source(args.witness))
    report = verify_witness(w, ideal, args.verify_bound)

    if args.json:
        _echo(json_utils.dumps(json_utils.to_verification(report)))
    else:
        _print_witness(w)
        _print_report(report)
        _echo('PASSED' if report.passed else 'FAILED')
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_sweep(args):
    _, ideal, reduced = _load(args)
    entries = sweep_flatness(ideal, args.max_level, reduced, args.threads, args.verify_bound)

    if args.json:
        _echo(json_utils.dumps([{'m': e.m, 'm_prime': e.m_prime,
                                 'verdict': 'NOT FLAT' if e.not_flat else 'NO WITNESS FOUND',
                                 'kind': e.witness.kind if e.witness is not None else None,
                                 'reason': e.error.message if e.error is not None else None}
                                for e in entries]))
    else:
        for e in entries:
            if e.not_flat:
                detail = e.witness.kind
            elif e.error is not None:
                detail = e.error.message
            else:
                detail = 'verification failed: {0}'.format(', '.join(c.name for c in e.report.failed()))
            _echo('{0:>3} {1:>3}  {2:<16}  {3}'.format(
                e.m, e.m_prime, 'NOT FLAT' if e.not_flat else 'NO WITNESS FOUND', detail))

    return EXIT_NEGATIVE if any(e.not_flat for e in entries) else EXIT_OK


def _make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('file', help="problem file, '-' for standard input")
    common.add_argument('--json', action='store_true', help='machine-readable output')
    common.add_argument('--translate', metavar='A,B,...', help='move this point to the origin first')
    common.add_argument('--reduced', action='store_true', help='assert that X is reduced')
    common.add_argument('--verify-bound', type=int, metavar='D', dest='verify_bound',
                        help='degree bound of the membership test (default: d + {0})'.format(
                            defaults.verify_bound_margin))

    parser = argparse.ArgumentParser(prog='jetforge', description='jet schemes, smoothness and flatness witnesses')
    parser.add_argument('-v', '--verbose', action='store_true', help='log to standard error')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('jetify', parents=[common], help='print the generators of X_m')
    p.add_argument('m', type=int)
    p.set_defaults(func=cmd_jetify)

    p = sub.add_parser('smooth', parents=[common], help='jacobian criterion for X_m at 0_m')
    p.add_argument('m', type=int)
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser('flatness', parents=[common], help='non-flatness witness for X_m\' -> X_m')
    p.add_argument('m', type=int)
    p.add_argument('m_prime', type=int)
    p.add_argument('--witness-out', metavar='PATH', dest='witness_out', help='save the witness as JSON')
    p.set_defaults(func=cmd_flatness)

    p = sub.add_parser('fiber', parents=[common], help='fiber of X_m\' -> X_m over a trivial jet')
    p.add_argument('m', type=int)
    p.add_argument('m_prime', type=int)
    p.add_argument('--point', metavar='A,B,...', help='base point of the trivial jet (default: origin)')
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser('tangent', parents=[common], help='compare dim pi_1^-1(0) with embdim and dim(X,0)')
    p.set_defaults(func=cmd_tangent)

    p = sub.add_parser('verify', parents=[common], help='re-check a stored witness')
    p.add_argument('--witness', required=True, metavar='PATH')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('sweep', parents=[common], help='witnesses for all pairs m < m\'')
    p.add_argument('--max-level', type=int, dest='max_level',
                   help='largest m\' (default: {0})'.format(defaults.sweep_max_level))
    p.add_argument('--threads', type=int, help='worker threads (default: {0})'.format(defaults.sweep_num_threads))
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None):
    args = _make_parser().parse_args(argv)

    if args.verbose:
        from . import set_stream_logger
        set_stream_logger()

    try:
        return args.func(args)
    except JetError as e:
        logger.info("command {0} failed: {1}".format(args.command, e))
        if args.json:
            _echo(json_utils.dumps({'error': e.to_dict()}))
        else:
            sys.stderr.write('error: {0}\n'.format(e))
        return EXIT_ERROR
    except (IOError, OSError) as e:
        logger.info("command {0} failed: {1}".format(args.command, e))
        sys.stderr.write('error: {0}\n'.format(e))
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
