# Command line front end.
#
# Authors: benneytoda developers
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.

import collections
import logging
import os
import random
import sys
from fractions import Fraction

import tornado.options

from . import __version__
from .common import (BenneyTodaError, InputError, SolverError, base_init,
                     bool_flags, configure_options, make_parser, release)
from .elliptic import (classify_elliptic, find_catastrophe, solve_elliptic,
                       umbilic_report)
from .flows import flow_residual
from .hodograph import (classify, compare_section3, default_unknowns,
                        SingularClass, solve_regular, solve_singular,
                        solve_singular_all, trace_locus)
from .newton import NewtonOptions
from .operators import (HALF_INTEGER_GRID, check_commutation, check_epd,
                        check_tilde_duality, index_shift_residual,
                        random_rational_xy)
from .polynomial import Polynomial
from .series import (Hierarchy, RiemannPoint, TimeVector, coeff_table,
                     invariant_form)
from .util import encode_record, write_csv, write_records

logger = logging.getLogger('benneytoda.cli')

USAGE = 'usage: benneytoda <command> [--flag=value ...]'


def parse_number(text, flag):
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return complex(text.replace('i', 'j'))
    except ValueError:
        raise InputError('--%s: not a number: %r' % (flag, text))


def parse_hierarchy(options):
    try:
        return Hierarchy(options.hier)
    except ValueError:
        raise InputError('--hier: unknown hierarchy %r' % options.hier)


def parse_times(options, flag='t'):
    """ Parse ``--t x=1,t3=1/2``; unspecified slots are exactly zero. """
    hierarchy = parse_hierarchy(options)
    eps = options.eps if hierarchy is Hierarchy.GENERAL else None
    mapping = {}
    text = getattr(options, flag)
    for item in filter(None, (s.strip() for s in text.split(','))):
        name, equals, value = item.partition('=')
        if not equals:
            raise InputError('--%s: expected name=value, got %r' %
                             (flag, item))
        name = name.strip()
        TimeVector.index_of(name, hierarchy)
        if name in mapping:
            raise InputError('--%s: slot %s given twice' % (flag, name))
        mapping[name] = parse_number(value, flag)
    return TimeVector.from_mapping(mapping, hierarchy, eps)


def parse_seed(options, required=True):
    """ ``--seed b1,b2`` for a hyperbolic pair or ``--seed U+Vj``. """
    text = options.seed.strip()
    if not text:
        if required:
            raise InputError('--seed is required')
        return None
    parts = [p for p in text.split(',') if p.strip()]
    if len(parts) == 1:
        value = complex(parse_number(parts[0], 'seed'))
        return RiemannPoint.elliptic(value)
    if len(parts) != 2:
        raise InputError('--seed: expected "b1,b2" or "U+Vj", got %r' %
                         text)
    values = [parse_number(p, 'seed') for p in parts]
    if any(isinstance(v, complex) for v in values):
        raise InputError('--seed: hyperbolic invariants must be real')
    return RiemannPoint(*values)


def parse_grid(options):
    """ ``--grid p=lo:hi:num,q=lo:hi:num`` as [(name, lo, hi, num)]. """
    axes = []
    for item in filter(None, (s.strip() for s in options.grid.split(','))):
        name, equals, spec = item.partition('=')
        fields = spec.split(':')
        if not equals or len(fields) != 3:
            raise InputError('--grid: expected name=lo:hi:num, got %r' %
                             item)
        try:
            lo, hi, num = float(fields[0]), float(fields[1]), int(fields[2])
        except ValueError:
            raise InputError('--grid: bad range %r' % item)
        if num < 1:
            raise InputError('--grid: %s needs at least one node' % name)
        axes.append((name.strip(), lo, hi, num))
    return axes


def parse_unknowns(options):
    return [u.strip() for u in options.unknowns.split(',') if u.strip()]


def parse_arguments(argv, parser=None):
    """ Split ``argv`` into the command name and a parsed OptionParser.

    Flags accept ``--name=value`` and ``--name value``. The config file is
    read first so that flags override it.
    """
    if parser is None:
        parser = make_parser()
    flags = bool_flags(parser)
    command = None
    pairs = []
    args = list(argv)
    i = 0
    while i < len(args):
        arg = args[i]
        if arg.startswith('--'):
            name = arg[2:].partition('=')[0].replace('-', '_')
            if '=' not in arg and name not in flags:
                if i + 1 >= len(args):
                    raise InputError('--%s needs a value' % name)
                arg = '--%s=%s' % (name, args[i + 1])
                i += 1
            pairs.append((name, arg))
        elif command is None:
            command = arg
        else:
            raise InputError('unexpected argument %r' % arg)
        i += 1
    if any(name == 'help' for name, _ in pairs):
        return 'help', parser
    pairs.sort(key=lambda pair: pair[0] != 'config')
    for name, arg in pairs:
        try:
            parser.parse_command_line(['benneytoda', arg], final=False)
            if name == 'config':
                configure_options(parser, parser.config)
        except (tornado.options.Error, ValueError) as e:
            raise InputError('--%s: %s' % (name, e))
    parser.run_parse_callbacks()
    if command is None:
        raise InputError(USAGE)
    return command, parser


class BaseCommand(object):
    """ One subcommand. ``run`` emits records through :meth:`emit`. """

    name = None

    def __init__(self, options, stream, summary):
        self.options = options
        self.stream = stream
        self.summary = summary
        self.records = []

    @property
    def newton_options(self):
        return NewtonOptions.from_options(self.options)

    def emit(self, record):
        record = collections.OrderedDict(record)
        record['version'] = __version__
        self.records.append(record)
        self.stream.write(encode_record(record) + '\n')

    def say(self, message):
        self.summary.write(message + '\n')

    def error(self, message):
        raise InputError(message)

    def execute(self):
        try:
            self.run()
        finally:
            if self.options.output_dir and self.records:
                write_records(os.path.join(self.options.output_dir,
                                           'records.jsonl'), self.records)

    def run(self):
        raise NotImplementedError


class SeriesCommand(BaseCommand):
    """
    .. program:: benneytoda series

        Print the coefficients C_0..C_order of (1 - 2aw + bw^2)^(-eps).

        **Example**

        .. sourcecode:: bash

            benneytoda series --eps=1/2 --order=4 --exact

        With ``--exact`` coefficients print as p/q, otherwise as floats.
        ``--invariants`` rewrites them in beta1, beta2 with a = (beta1 +
        beta2)/2 and b = beta1 beta2.
        With ``--t`` the potential W is printed in the invariants (x, y).
    """
    name = 'series'

    def run(self):
        options = self.options
        table = coeff_table(options.eps, order=options.order)
        rows = table.in_invariants(('beta1', 'beta2')) \
            if options.invariants else table
        for k, poly in enumerate(rows):
            if not options.exact:
                poly = Polynomial(dict((e, float(c)) for e, c in
                                       poly.terms()), poly.variables)
            self.emit({'k': k, 'eps': table.eps, 'C': str(poly)})
            self.say('C_%d = %s' % (k, poly))
        if options.t:
            t = parse_times(options)
            W = invariant_form(t)
            self.emit({'hierarchy': t.hierarchy.value, 'times': t.as_dict(),
                       'W': str(W)})
            self.say('W = %s' % W)


class SolveCommand(BaseCommand):
    """
    .. program:: benneytoda solve

        Solve the hodograph equations from a seed. A complex seed selects
        the elliptic equation dW/d conj(beta) = 0.

        **Example**

        .. sourcecode:: bash

            benneytoda solve --hier=benney --t=x=-1,t3=1 --seed=1,-1
    """
    name = 'solve'

    def run(self):
        t = parse_times(self.options)
        seed = parse_seed(self.options)
        if seed.is_elliptic:
            point = solve_elliptic(t, seed.beta, self.newton_options)
        else:
            point = solve_regular(t, seed, self.newton_options)
        self.emit(point.to_record())
        self.say('%s point at beta = %r' % (point.sector, point.beta))


class ClassifyCommand(BaseCommand):
    """
    .. program:: benneytoda classify

        Classify a critical point given by ``--seed``.
    """
    name = 'classify'

    def run(self):
        t = parse_times(self.options)
        point = parse_seed(self.options)
        tol = self.options.zero_tol
        if point.is_elliptic:
            sector = classify_elliptic(t, point.beta, tol)
        else:
            sector = classify(t, point, tol)
        self.emit({'hierarchy': t.hierarchy.value, 'times': t.as_dict(),
                   'beta': [point.beta1, point.beta2],
                   'sector': str(sector)})
        self.say(str(sector))


class SingularCommand(BaseCommand):
    """
    .. program:: benneytoda singular

        Solve the augmented system of a singular class. Without a seed
        every solution found by the scan is emitted.

        **Example**

        .. sourcecode:: bash

            benneytoda singular --sector=1,0 --t=t2=-1,t3=1,t4=1 \\
                --unknowns=x,beta1,beta2
    """
    name = 'singular'

    def run(self):
        t = parse_times(self.options)
        sector = SingularClass.parse(self.options.sector)
        unknowns = parse_unknowns(self.options) or \
            default_unknowns(sector, t, ())
        seed = parse_seed(self.options, required=False)
        if seed is not None:
            points = [solve_singular(t, sector, unknowns, seed,
                                     self.newton_options)]
        else:
            points = solve_singular_all(t, sector, unknowns,
                                        self.newton_options)
        if not points:
            raise SolverError('no solution of class %s found' % (sector,))
        for point in points:
            self.emit(point.to_record())
        self.say('%d solution(s) of class %s' % (len(points), sector))


class TraceLocusCommand(BaseCommand):
    """
    .. program:: benneytoda trace-locus

        Follow a singular class over a grid of two time parameters.
        ``--csv`` receives one row per node, gaps included.

        **Example**

        .. sourcecode:: bash

            benneytoda trace-locus --sector=1,0 --t=t4=1 \\
                --grid=t2=-1:-0.5:5,t3=1:2:5 --csv=locus.csv
    """
    name = 'trace-locus'

    def run(self):
        t = parse_times(self.options)
        sector = SingularClass.parse(self.options.sector)
        grid = parse_grid(self.options)
        if len(grid) != 2:
            self.error('--grid: trace-locus needs two parameters')
        params = [g[0] for g in grid]
        ranges = [list(_linspace(lo, hi, num)) for _, lo, hi, num in grid]
        unknowns = parse_unknowns(self.options) or None
        locus = trace_locus(sector, t, params, ranges, unknowns,
                            self.options.branch, self.newton_options)
        for sample in locus.converged:
            record = sample.point.to_record()
            record['params'] = dict(zip(params, sample.params))
            self.emit(record)
        if self.options.csv:
            write_csv(self.options.csv, locus.COLUMNS, locus.rows())
        self.say('%d nodes, %d gaps' % (len(locus.converged),
                                         len(locus.gaps)))


def _linspace(lo, hi, num):
    if num == 1:
        return [lo]
    return [lo + (hi - lo) * k / (num - 1) for k in range(num)]


class CompareS3Command(BaseCommand):
    """
    .. program:: benneytoda compare-s3

        Compare the closed-form catastrophe points at fixed (t2, t3, t4)
        with solver points, before and after the misprint corrections.

        **Example**

        .. sourcecode:: bash

            benneytoda compare-s3 --t=t2=-1,t3=0,t4=1
    """
    name = 'compare-s3'

    def run(self):
        t = parse_times(self.options)
        if t.hierarchy is not Hierarchy.BENNEY:
            self.error('--hier: compare-s3 is defined for benney')
        report = compare_section3(t[2], t[3], t[4], self.newton_options)
        record = report.to_record()
        record['hierarchy'] = t.hierarchy.value
        self.emit(record)
        self.say('printed items off: %s; corrected all match: %s' %
                 (report.discrepancies or 'none',
                  report.all_corrected_match()))


class EllipticCommand(BaseCommand):
    """
    .. program:: benneytoda elliptic

        ``--mode=solve`` solves dW/d conj(beta) = 0 from a complex seed,
        ``--mode=classify`` classifies a given beta, ``--mode=catastrophe``
        solves for the gradient catastrophe in two free slots (default
        x,t2) and ``--mode=report`` compares the printed restricted forms
        of W with the derived ones.

        **Example**

        .. sourcecode:: bash

            benneytoda elliptic --mode=catastrophe --t=t3=1,t5=1
    """
    name = 'elliptic'

    def run(self):
        mode = self.options.mode
        if mode == 'report':
            entries = umbilic_report()
            for entry in entries:
                self.emit(entry)
            off = [e['form'] + ':' + e['slot'] for e in entries
                   if not e['match']]
            self.say('mismatched printed forms: %s' % (off or 'none'))
            return
        t = parse_times(self.options)
        seed = parse_seed(self.options, required=mode != 'catastrophe')
        if seed is not None and not seed.is_elliptic:
            self.error('--seed: elliptic modes take a complex seed U+Vj')
        beta = seed.beta if seed is not None else None
        if mode == 'solve':
            point = solve_elliptic(t, beta, self.newton_options)
        elif mode == 'classify':
            sector = classify_elliptic(t, beta, self.options.zero_tol)
            self.emit({'hierarchy': t.hierarchy.value,
                       'times': t.as_dict(),
                       'beta': [beta, beta.conjugate()],
                       'sector': str(sector)})
            self.say(str(sector))
            return
        elif mode == 'catastrophe':
            slots = parse_unknowns(self.options) or ['x', 't2']
            point = find_catastrophe(t, slots, beta, self.newton_options)
        else:
            self.error('--mode: unknown elliptic mode %r' % mode)
        self.emit(point.to_record())
        self.say('%s point at beta = %r' % (point.sector, point.beta))


class VerifyFlowsCommand(BaseCommand):
    """
    .. program:: benneytoda verify-flows

        Finite difference residuals of the ``--n``-th flow on a patch.
        ``--grid`` names the space range first and the time range second.

        **Example**

        .. sourcecode:: bash

            benneytoda verify-flows --n=2 --t=t3=1 \\
                --grid=x=-2:-1:3,t2=0:0.2:3
    """
    name = 'verify-flows'

    def run(self):
        options = self.options
        t = parse_times(options)
        grid = parse_grid(options)
        if len(grid) not in (1, 2):
            self.error('--grid: verify-flows needs space and time ranges')
        space = grid[0]
        time = grid[1] if len(grid) == 2 else space
        seed = parse_seed(options, required=False)
        report = flow_residual(t, options.n, space[1:3], time[1:3],
                               num=space[3], step=options.step or None,
                               seed=seed, branch=options.branch,
                               options=self.newton_options,
                               jobs=options.jobs)
        self.emit(report.to_record())
        if options.csv:
            write_csv(options.csv, report.COLUMNS, report.rows())
        self.say('max residual %.3e (h), %.3e (h/2), order %s' %
                 (report.max_residual, report.max_residual_half,
                  report.order))


class VerifyIdentitiesCommand(BaseCommand):
    """
    .. program:: benneytoda verify-identities

        Check the operator identities in exact arithmetic on ``--trials``
        random rational functions. A nonzero residual exits with status 1.
    """
    name = 'verify-identities'

    def run(self):
        rng = random.Random(self.options.random_seed)
        failures = collections.OrderedDict(
            (key, 0) for key in ('commutation', 'tilde_duality', 'epd',
                                 'index_shift'))
        for _ in range(self.options.trials):
            f = random_rational_xy(rng)
            eps = rng.choice(HALF_INTEGER_GRID)
            mu = rng.choice(HALF_INTEGER_GRID)
            if not check_commutation(eps, mu, f).is_zero():
                failures['commutation'] += 1
            if not check_tilde_duality(f).is_zero():
                failures['tilde_duality'] += 1
        for eps in HALF_INTEGER_GRID:
            for n in range(7):
                if not check_epd(eps, n).is_zero():
                    failures['epd'] += 1
                for mu in HALF_INTEGER_GRID:
                    if not index_shift_residual(eps, mu, n).is_zero():
                        failures['index_shift'] += 1
        clean = not any(failures.values())
        self.emit({'trials': self.options.trials,
                   'random_seed': self.options.random_seed,
                   'failures': failures,
                   'status': 'all zero' if clean else 'nonzero residual'})
        if not clean:
            raise BenneyTodaError('nonzero identity residuals: %s' %
                                  dict(failures))
        self.say('all zero')


COMMANDS = collections.OrderedDict((cls.name, cls) for cls in (
    SolveCommand, ClassifyCommand, SingularCommand, TraceLocusCommand,
    CompareS3Command, EllipticCommand, VerifyFlowsCommand,
    VerifyIdentitiesCommand, SeriesCommand))


def run(argv, stream=None, summary=None):
    """ Run one subcommand; returns the exit status (0 success, 1 solver
    failure, 2 invalid input). """
    if stream is None:
        stream = sys.stdout
    if summary is None:
        summary = sys.stderr
    channel = None
    try:
        command, parser = parse_arguments(argv)
        if command == 'help':
            parser.print_help(summary)
            return 0
        if command not in COMMANDS:
            raise InputError('unknown command %r; expected one of %s' %
                             (command, ', '.join(COMMANDS)))
        if parser.output_dir:
            channel = base_init(parser.output_dir)
        logger.info('running %s', command)
        COMMANDS[command](parser, stream, summary).execute()
    except BenneyTodaError as e:
        logger.info('command failed: %s', e.message)
        stream.write(encode_record({'error': e.message, 'code': e.code,
                                    'version': __version__}) + '\n')
        summary.write('error: %s\n' % e.message)
        return e.code
    finally:
        if channel is not None:
            release(channel)
    return 0


def start():
    sys.exit(run(sys.argv[1:]))
