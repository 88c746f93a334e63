# Errors, option definitions and logging channels shared by the library and
# the command line front end.
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

import logging
import os

import psutil
import tornado.log
import tornado.options


class BenneyTodaError(Exception):
    """ Base class of every error raised by the package. ``code`` is the
    process exit status the command line maps the error to. """
    code = 1

    def __init__(self, message='', point=None, residual=None):
        super(BenneyTodaError, self).__init__(message)
        self.message = message
        self.point = point
        self.residual = residual


class InputError(BenneyTodaError):
    code = 2


class BadArity(InputError):
    pass


class RadicandNegative(InputError):
    pass


class SolverError(BenneyTodaError):
    code = 1


class NoConvergence(SolverError):
    pass


class SingularJacobian(SolverError):
    pass


class Collapse(SolverError):
    pass


class SingularHessian(SolverError):
    pass


class DegenerateDelta(SolverError):
    pass


class RealCollapse(SolverError):
    pass


class DeeperSingularity(SolverError):
    pass


class GridCrossesSingularity(SolverError):
    pass


class EmptyLocus(SolverError):
    pass


class ClassificationError(BenneyTodaError):
    code = 1


class AllCoefficientsVanish(ClassificationError):
    pass


class ToleranceAmbiguity(ClassificationError):
    pass


class NotCritical(ClassificationError):
    pass


CHANNELS = ('benneytoda.series', 'benneytoda.solver', 'benneytoda.locus',
            'benneytoda.flows', 'benneytoda.cli')

TOLERANCE_VARIABLE = 'BENNEYTODA_TOL'


def default_tolerance():
    """ Solver tolerance, overridable through the environment. """
    raw = os.environ.get(TOLERANCE_VARIABLE)
    if raw is None:
        return 1e-12
    try:
        value = float(raw)
    except ValueError:
        raise InputError('%s must be a float, got %r' %
                         (TOLERANCE_VARIABLE, raw))
    if not value > 0:
        raise InputError('%s must be positive' % TOLERANCE_VARIABLE)
    return value


def default_jobs():
    cores = psutil.cpu_count(logical=False)
    return cores or 1


def define_options(parser):
    """ Register every command line flag on a tornado OptionParser. The same
    names are valid keys in a config file. """
    parser.define('config', type=str, default='',
                  help='path to a config file of key = value lines')
    parser.define('hier', type=str, default='benney',
                  help='hierarchy: benney, dtoda or general')
    parser.define('eps', type=str, default='1/2',
                  help='EPD index for series and general hierarchies')
    parser.define('t', type=str, default='',
                  help='time vector as name=value pairs, e.g. x=1,t3=1')
    parser.define('seed', type=str, default='',
                  help='seed invariants "b1,b2" or a complex "U+Vj"')
    parser.define('order', type=int, default=4,
                  help='truncation order for series output')
    parser.define('exact', type=bool, default=False,
                  help='use the exact rational backend where supported')
    parser.define('invariants', type=bool, default=False,
                  help='print series coefficients in beta1, beta2')
    parser.define('sector', type=str, default='1,0',
                  help='singular class "n1,n2"')
    parser.define('unknowns', type=str, default='',
                  help='unknowns for singular solves, e.g. x,beta1,beta2')
    parser.define('grid', type=str, default='',
                  help='two parameter ranges "p=lo:hi:num,q=lo:hi:num"')
    parser.define('branch', type=int, default=0,
                  help='branch index for locus tracing')
    parser.define('mode', type=str, default='solve',
                  help='elliptic mode: solve, classify, catastrophe, report')
    parser.define('n', type=int, default=2, help='flow index')
    parser.define('step', type=float, default=0.0,
                  help='finite difference step; 0 picks 1e-3 of the patch')
    parser.define('trials', type=int, default=50,
                  help='random inputs per identity check')
    parser.define('random_seed', type=int, default=1,
                  help='seed of the random generator used by identity checks')
    parser.define('tol', type=float, default=default_tolerance(),
                  help='Newton residual tolerance')
    parser.define('zero_tol', type=float, default=1e-8,
                  help='relative tolerance for vanishing Taylor coefficients')
    parser.define('merge_tol', type=float, default=1e-8,
                  help='distance below which the invariants are merged')
    parser.define('gap_tol', type=float, default=1e-6,
                  help='relative gap below which a converged point is reduced')
    parser.define('max_iter', type=int, default=60,
                  help='Newton iteration limit')
    parser.define('output_dir', type=str, default='',
                  help='folder receiving records.jsonl and general.log')
    parser.define('csv', type=str, default='',
                  help='CSV file receiving locus samples')
    parser.define('jobs', type=int, default=1,
                  help='worker processes for grid evaluations (0 = cores)')
    tornado.log.define_logging_options(parser)
    return parser


def bool_flags(parser):
    """ Names of flags that take no value on the command line. """
    names = set(name for name, value in parser.as_dict().items()
                if isinstance(value, bool))
    return names | set(['help', 'log_to_stderr'])


def configure_options(parser, config_file):
    """ Load a config file into ``parser``; flags parsed later override it. """
    if not os.path.exists(config_file):
        raise InputError('config file not found: ' + config_file)
    parser.parse_config_file(config_file, final=False)


def base_init(output_dir):
    """ Create ``output_dir`` and attach a general.log handler to every
    package channel. Returns the handler so callers can detach it. """
    if not os.path.exists(output_dir):
        os.makedirs(output_dir)
    channel = logging.FileHandler(os.path.join(output_dir, 'general.log'))
    channel.setFormatter(tornado.log.LogFormatter(color=False))
    for name in CHANNELS:
        logging.getLogger(name).addHandler(channel)
    return channel


def release(channel):
    for name in CHANNELS:
        logging.getLogger(name).removeHandler(channel)
    channel.close()


def make_parser():
    return define_options(tornado.options.OptionParser())
