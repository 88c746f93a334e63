# Regular and singular solutions of the hodograph equations dW/dbeta_i = 0.
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
import math

import numpy as np

from .common import (AllCoefficientsVanish, BadArity, BenneyTodaError,
                     ClassificationError, Collapse, DegenerateDelta,
                     EmptyLocus, InputError, NotCritical, RadicandNegative,
                     SingularHessian, SingularJacobian, SolverError,
                     ToleranceAmbiguity)
from .newton import NewtonOptions, newton
from .series import (Hierarchy, Kernel, RiemannPoint, TimeVector,
                     default_order, taylor_coefficients)

logger = logging.getLogger('benneytoda.solver')
locus_logger = logging.getLogger('benneytoda.locus')


class SingularClass(collections.namedtuple('SingularClass', 'n1 n2')):
    """ Regular is (0, 0); Sing(n1, n2) means h vanishes to order exactly
    n_i + 1 at beta_i. """
    __slots__ = ()

    @property
    def is_regular(self):
        return self.n1 == 0 and self.n2 == 0

    @property
    def codimension(self):
        return self.n1 + self.n2

    def order(self, i):
        return self.n1 if i == 1 else self.n2

    def swapped(self):
        return SingularClass(self.n2, self.n1)

    @classmethod
    def parse(cls, text):
        """ Accept 'regular', '1,0' or a pair. """
        if isinstance(text, SingularClass):
            return text
        if isinstance(text, (tuple, list)):
            pair = text
        else:
            text = text.strip().lower()
            if text == 'regular':
                return REGULAR
            text = text.replace('sing', '').strip('()')
            pair = text.split(',')
        try:
            n1, n2 = [int(v) for v in pair]
        except (TypeError, ValueError):
            raise InputError('bad singular class %r' % (text,))
        if n1 < 0 or n2 < 0:
            raise InputError('class orders must be non-negative')
        return cls(n1, n2)

    def __str__(self):
        if self.is_regular:
            return 'regular'
        return 'sing(%d,%d)' % (self.n1, self.n2)


REGULAR = SingularClass(0, 0)


class HodographPoint(object):
    """ A converged solution together with its diagnostics. """

    def __init__(self, t, point, sector, residuals, hessian_diag, order,
                 offdiag=0.0, delta=None):
        self.t = t
        self.point = point
        self.sector = sector
        self.residuals = residuals
        self.hessian_diag = hessian_diag
        self.order = order
        self.offdiag = offdiag
        self.delta = delta

    @property
    def beta(self):
        return self.point.beta1, self.point.beta2

    def value(self, name):
        """ Unknown value by name: beta1, beta2 or a time slot. """
        if name == 'beta1':
            return self.point.beta1
        if name == 'beta2':
            return self.point.beta2
        return self.t[self.t.index_of(name, self.t.hierarchy)]

    def to_record(self):
        record = collections.OrderedDict()
        record['hierarchy'] = self.t.hierarchy.value
        record['times'] = self.t.as_dict()
        record['beta'] = [self.point.beta1, self.point.beta2]
        record['sector'] = str(self.sector)
        record['residuals'] = dict(self.residuals)
        record['hessian_diag'] = list(self.hessian_diag)
        record['offdiag'] = self.offdiag
        if self.delta is not None:
            record['delta'] = self.delta
        record['order'] = self.order
        return record

    def __repr__(self):
        return '<HodographPoint %s beta=(%r, %r)>' % (
            self.sector, self.point.beta1, self.point.beta2)


def _scale(c):
    return max([1.0] + [abs(float(v)) for v in c])


class AugmentedSystem(object):
    """ The equations d^k W / d beta_i^k = 0, k = 1..n_i + 1, written in a
    chosen set of unknowns: any of beta1, beta2 and free time slots. """

    def __init__(self, t, sector, unknowns, point, options):
        self.sector = SingularClass.parse(sector)
        self.options = options
        unknowns = [u.strip() for u in unknowns]
        size = self.sector.n1 + self.sector.n2 + 2
        if len(unknowns) != size or len(set(unknowns)) != size:
            raise BadArity('class %s needs %d distinct unknowns, got %r' %
                           (self.sector, size, unknowns))
        self.unknowns = unknowns
        self.beta_unknowns = [i for i in (1, 2) if 'beta%d' % i in unknowns]
        self.slots = [u for u in unknowns if not u.startswith('beta')]
        for name in unknowns:
            if name.startswith('beta') and name not in ('beta1', 'beta2'):
                raise InputError('unknown %r' % name)
        self.slot_m = [t.effective_index(name) for name in self.slots]
        t = t.to_float()
        self.t = t
        self.eps = float(t.eps)
        top = max([t.top] + self.slot_m)
        c = t.coefficients() + [0.0] * (top - t.top)
        self.base_c = [float(v) for v in c]
        self.fixed_beta = [float(point.beta1), float(point.beta2)]
        self.rows = [(i, k) for i in (1, 2)
                     for k in range(1, self.sector.order(i) + 2)]

    @property
    def size(self):
        return len(self.unknowns)

    def pack(self, beta, c):
        x = []
        for name in self.unknowns:
            if name == 'beta1':
                x.append(beta[0])
            elif name == 'beta2':
                x.append(beta[1])
            else:
                x.append(c[self.slot_m[self.slots.index(name)]])
        return np.array(x, dtype=float)

    def initial(self):
        return self.pack(self.fixed_beta, self.base_c)

    def unpack(self, x):
        beta = list(self.fixed_beta)
        c = list(self.base_c)
        for value, name in zip(x, self.unknowns):
            if name == 'beta1':
                beta[0] = float(value)
            elif name == 'beta2':
                beta[1] = float(value)
            else:
                c[self.slot_m[self.slots.index(name)]] = float(value)
        return beta, c

    def scale(self):
        return _scale(self.base_c)

    def kernel(self, x):
        beta, c = self.unpack(x)
        gap = abs(beta[0] - beta[1])
        if gap < self.options.merge_tol * max(1.0, abs(beta[0])):
            raise Collapse('invariants merged at beta = %.12g' % beta[0],
                           point=np.array(x))
        return Kernel(c, self.eps, beta[0], beta[1])

    def __call__(self, x):
        kernel = self.kernel(x)
        n = self.sector
        towers = {1: kernel.tower(1, n.n1 + 2), 2: kernel.tower(2, n.n2 + 2)}
        mixed = {1: kernel.mixed(1, n.n1 + 1, towers[1], towers[2][0]),
                 2: kernel.mixed(2, n.n2 + 1, towers[2], towers[1][0])}
        units = dict((m, {1: kernel.unit_tower(m, 1, n.n1 + 1),
                          2: kernel.unit_tower(m, 2, n.n2 + 1)})
                     for m in self.slot_m)
        F = np.empty(len(self.rows))
        J = np.empty((len(self.rows), self.size))
        for row, (i, k) in enumerate(self.rows):
            F[row] = towers[i][k - 1]
            for col, name in enumerate(self.unknowns):
                if name == 'beta%d' % i:
                    J[row, col] = towers[i][k]
                elif name.startswith('beta'):
                    J[row, col] = mixed[i][k]
                else:
                    m = self.slot_m[self.slots.index(name)]
                    J[row, col] = units[m][i][k - 1]
        return F, J

    def linear_part(self, beta):
        """ Residual at ``beta`` with the free slots zeroed, and the matrix
        of the free slots; the system is linear in the times. """
        c = list(self.base_c)
        for m in self.slot_m:
            c[m] = 0.0
        kernel = Kernel(c, self.eps, beta[0], beta[1])
        n = self.sector
        towers = {1: kernel.tower(1, n.n1 + 1), 2: kernel.tower(2, n.n2 + 1)}
        r = np.array([towers[i][k - 1] for i, k in self.rows])
        A = np.empty((len(self.rows), len(self.slot_m)))
        for col, m in enumerate(self.slot_m):
            units = {1: kernel.unit_tower(m, 1, n.n1 + 1),
                     2: kernel.unit_tower(m, 2, n.n2 + 1)}
            for row, (i, k) in enumerate(self.rows):
                A[row, col] = units[i][k - 1]
        return r, A

    def solution_times(self, x):
        beta, c = self.unpack(x)
        values = c[1:]
        eps = self.t.eps if self.t.hierarchy is Hierarchy.GENERAL else None
        return TimeVector(values, self.t.hierarchy, eps)


def root_radius(c):
    """ Bound on the roots of sum_m c_m l^m, used to size seeding boxes. """
    top = max([m for m, v in enumerate(c) if v != 0] or [0])
    if top == 0:
        return 1.0
    lead = abs(c[top])
    bound = 0.0
    for m in range(top):
        if c[m] != 0:
            bound = max(bound, (abs(c[m]) / lead) ** (1.0 / (top - m)))
    return 2.0 * bound


def scan_seeds(system, box=None, num=41, limit=8):
    """ Coarse scan over the free invariants.

    The free time slots are eliminated by least squares at every node and
    the local minima of the relative residual are returned as packed
    unknown vectors, best first.
    """
    if not system.beta_unknowns:
        return [system.initial()]
    if box is None:
        c = list(system.base_c)
        for m in system.slot_m:
            c[m] = 0.0
        box = max(1.0, 1.5 * root_radius(c))
    axis = np.linspace(-box, box, num)
    spacing = axis[1] - axis[0]
    axes = [axis if i in system.beta_unknowns else
            np.array([system.fixed_beta[i - 1]]) for i in (1, 2)]
    values = np.full((len(axes[0]), len(axes[1])), np.inf)
    times = {}
    for p, b1 in enumerate(axes[0]):
        for q, b2 in enumerate(axes[1]):
            if abs(b1 - b2) < 1.5 * spacing:
                continue
            r, A = system.linear_part((b1, b2))
            if A.shape[1]:
                sol = np.linalg.lstsq(A, -r, rcond=None)[0]
                fitted = A.dot(sol)
                residual = np.linalg.norm(fitted + r)
                size = max(np.linalg.norm(r), np.linalg.norm(fitted), 1e-300)
                values[p, q] = residual / size
            else:
                sol = np.zeros(0)
                values[p, q] = np.linalg.norm(r)
            times[p, q] = sol
    minima = []
    for (p, q), sol in times.items():
        value = values[p, q]
        window = values[max(p - 1, 0):p + 2, max(q - 1, 0):q + 2]
        if value <= window.min():
            minima.append((value, p, q))
    minima.sort()
    seeds = []
    for value, p, q in minima[:limit]:
        beta = [axes[0][p], axes[1][q]]
        c = list(system.base_c)
        for m, v in zip(system.slot_m, times[p, q]):
            c[m] = v
        seeds.append(system.pack(beta, c))
    logger.debug('scan found %d seeds in box %.3g', len(seeds), box)
    return seeds


def _finish(system, x, residual, check_hessian=False):
    kernel = system.kernel(x)
    n = system.sector
    beta, c = system.unpack(x)
    towers = {1: kernel.tower(1, n.n1 + 2), 2: kernel.tower(2, n.n2 + 2)}
    w12 = kernel.mixed(1, 1, towers[1], towers[2][0])[1]
    gradient = max(abs(towers[1][0]), abs(towers[2][0]))
    constraints = max([0.0] + [abs(towers[i][k - 1])
                               for i, k in system.rows if k > 1])
    hessian = (towers[1][1], towers[2][1])
    delta = towers[1][n.n1 + 1] * towers[2][n.n2 + 1]
    t = system.solution_times(x)
    point = RiemannPoint(beta[0], beta[1])
    if check_hessian or not n.is_regular:
        sector = classify(t, point, system.options.zero_tol,
                          system.options.band)
    else:
        sector = REGULAR
    residuals = {'gradient': gradient, 'constraints': constraints,
                 'newton': residual}
    result = HodographPoint(t, point, sector, residuals, hessian,
                            default_order(t),
                            offdiag=abs((beta[0] - beta[1]) * w12),
                            delta=delta)
    return result


def solve_regular(t, seed, options=None):
    """ Solve dW/dbeta_1 = dW/dbeta_2 = 0 by Newton from ``seed``.

    Raises Collapse when the iterates merge, NoConvergence when the
    iteration limit is hit and SingularHessian when the converged point
    lies in a singular sector.
    """
    if options is None:
        options = NewtonOptions()
    if seed.is_elliptic:
        raise InputError('solve_regular needs a hyperbolic seed')
    system = AugmentedSystem(t, REGULAR, ['beta1', 'beta2'], seed, options)
    try:
        result = newton(system, system.initial(), options, system.scale())
    except SingularJacobian as e:
        raise SingularHessian('Hessian degenerate during Newton: %s' %
                              e.message, point=e.point, residual=e.residual)
    except SolverError as e:
        logger.warning('solve_regular failed for %r: %s', t, e.message)
        raise
    point = _finish(system, result.x, result.residual, check_hessian=True)
    if not point.sector.is_regular:
        raise SingularHessian('point lies in %s' % point.sector,
                              point=point, residual=result.residual)
    return point


def classify(t, p, zero_tol=1e-8, band=10.0, check_critical=True):
    """ Sector of a hodograph point from the Taylor coefficients of h.

    n_i is the order of the first coefficient of h at beta_i above
    ``zero_tol`` (relative to the largest coefficient) minus one.
    Coefficients counted as zero must stay zero when the tolerance is
    tightened by ``band``, otherwise ToleranceAmbiguity is raised.
    """
    kernel = Kernel(t.coefficients(), t.eps, p.beta1, p.beta2)
    count = len(kernel.h) + 1
    taylor = dict((i, taylor_coefficients(kernel.h, p.invariant(i), count))
                  for i in (1, 2))
    scale = max(abs(v) for i in (1, 2) for v in taylor[i])
    if scale == 0:
        raise AllCoefficientsVanish('h vanishes identically', point=p)
    threshold = zero_tol * scale
    orders = []
    for i in (1, 2):
        magnitudes = [abs(v) for v in taylor[i]]
        first = next(j for j, m in enumerate(magnitudes) if m > threshold)
        for m in magnitudes[:first]:
            if m > threshold / band:
                raise ToleranceAmbiguity(
                    'coefficient %.3e of h at beta_%d is within the '
                    'ambiguity band' % (m / scale, i), point=p)
        if first == 0:
            if check_critical:
                raise NotCritical('h(beta_%d) = %.3e is not zero' %
                                  (i, taylor[i][0]), point=p,
                                  residual=abs(taylor[i][0]))
            return None
        orders.append(first - 1)
    return SingularClass(*orders)


def solve_singular(t_fixed, sector, unknowns, seed=None, options=None):
    """ Solve the augmented system of class ``sector`` for ``unknowns``.

    ``unknowns`` must hold n1 + n2 + 2 names among beta1, beta2 and time
    slots; free time slots start from their values in ``t_fixed``. With no
    ``seed`` the invariants are seeded by :func:`scan_seeds`.
    """
    if options is None:
        options = NewtonOptions()
    sector = SingularClass.parse(sector)
    if seed is None:
        solutions = solve_singular_all(t_fixed, sector, unknowns, options)
        if not solutions:
            raise SolverError('no scan seed converged for %s' % (sector,))
        return solutions[0]
    system = AugmentedSystem(t_fixed, sector, unknowns, seed, options)
    return _solve_from(system, system.initial())


def _check_gap(system, x, residual):
    beta, _ = system.unpack(x)
    gap = abs(beta[0] - beta[1])
    size = max(1.0, abs(beta[0]), abs(beta[1]))
    if gap < system.options.gap_tol * size:
        raise Collapse('converged onto the diagonal: |beta1 - beta2| = %.3e'
                       % gap, point=np.array(x), residual=residual)


def _solve_from(system, x0):
    options = system.options
    try:
        result = newton(system, x0, options, system.scale())
    except SolverError as e:
        logger.debug('augmented solve failed: %s', e.message)
        raise
    _check_gap(system, result.x, result.residual)
    point = _finish(system, result.x, result.residual)
    if point.sector is None or point.sector != system.sector:
        raise DegenerateDelta('expected %s, classified as %s' %
                              (system.sector, point.sector), point=point)
    n = system.sector
    kernel = system.kernel(result.x)
    towers = {1: kernel.tower(1, n.n1 + 2), 2: kernel.tower(2, n.n2 + 2)}
    top1, top2 = abs(towers[1][-1]), abs(towers[2][-1])
    # delta is measured against the largest derivative in either tower
    magnitude = max([system.scale()] + [abs(v) for i in (1, 2)
                                        for v in towers[i]])
    if min(top1, top2) <= options.zero_tol * magnitude:
        raise DegenerateDelta('delta vanishes at %r' % (point.point,),
                              point=point)
    return point


def solve_singular_all(t_fixed, sector, unknowns, options=None, box=None,
                       num=41, seed=None, extra_seeds=()):
    """ Every distinct solution reached from the scan seeds, ordered by
    beta1. ``seed`` supplies the invariants that are not unknowns.
    ``extra_seeds`` are (beta1, beta2, {slot: value}) guesses tried before
    the scan. """
    if options is None:
        options = NewtonOptions()
    sector = SingularClass.parse(sector)
    start_point = seed if seed is not None else RiemannPoint(0, 1)
    system = AugmentedSystem(t_fixed, sector, unknowns, start_point, options)
    starts = []
    for beta1, beta2, slots in extra_seeds:
        values = [beta1, beta2] + list(slots.values())
        if not all(math.isfinite(v) for v in values):
            continue
        c = list(system.base_c)
        for name, value in slots.items():
            c[system.slot_m[system.slots.index(name)]] = value
        starts.append(system.pack((beta1, beta2), c))
    found = []
    for x0 in starts + scan_seeds(system, box, num):
        try:
            point = _solve_from(system, x0)
        except (SolverError, ClassificationError) as e:
            logger.debug('seed %s rejected: %s', x0, e.message)
            continue
        x = system.pack(point.beta, point.t.coefficients() +
                        [0.0] * len(system.base_c))
        duplicate = False
        for other in found:
            y = system.pack(other.beta, other.t.coefficients() +
                            [0.0] * len(system.base_c))
            if np.max(np.abs(x - y)) <= 1e-6 * (1.0 + np.max(np.abs(x))):
                duplicate = True
                break
        if not duplicate:
            found.append(point)
    found.sort(key=lambda hp: (hp.point.beta1, hp.point.beta2))
    return found


class LocusSample(object):

    def __init__(self, params, point=None, error=None):
        self.params = params
        self.point = point
        self.error = error

    @property
    def converged(self):
        return self.point is not None

    def to_row(self):
        """ CSV row (param1, param2, x, beta1_re, beta1_im, beta2_re,
        beta2_im, class, residual); gaps leave the solution columns empty. """
        if self.point is None:
            return list(self.params) + [''] * 6 + ['gap']
        hp = self.point
        first = hp.t.first_index
        beta1, beta2 = complex(hp.point.beta1), complex(hp.point.beta2)
        return list(self.params) + [
            hp.t[first], beta1.real, beta1.imag, beta2.real, beta2.imag,
            str(hp.sector), hp.residuals['gradient']]


class Locus(object):

    COLUMNS = ('param1', 'param2', 'x', 'beta1_re', 'beta1_im', 'beta2_re',
               'beta2_im', 'class', 'residual')

    def __init__(self, sector, params, unknowns, samples):
        self.sector = sector
        self.params = params
        self.unknowns = unknowns
        self.samples = samples

    @property
    def converged(self):
        return [s for s in self.samples if s.converged]

    @property
    def gaps(self):
        return [s for s in self.samples if not s.converged]

    def rows(self):
        return [s.to_row() for s in self.samples]


def default_unknowns(sector, t, params):
    """ beta1, beta2 and the lowest n1 + n2 time slots not in ``params``. """
    sector = SingularClass.parse(sector)
    slots = []
    index = t.first_index
    while len(slots) < sector.codimension:
        name = t.name(index)
        if name not in params:
            slots.append(name)
        index += 1
    return slots + ['beta1', 'beta2']


def _serpentine(ranges):
    first, second = ranges
    for row, q in enumerate(second):
        columns = first if row % 2 == 0 else list(reversed(list(first)))
        for p in columns:
            yield float(p), float(q)


def trace_locus(sector, t_base, params, ranges, unknowns=None, branch=0,
                options=None):
    """ Follow one branch of the class ``sector`` over a grid of two time
    parameters.

    Nodes are visited row by row in alternating direction and each solve is
    seeded by the previous converged node. The first node is seeded by the
    scan; branches there are ordered by beta1 and ``branch`` picks one.
    Nodes that fail are kept as gaps.
    """
    if options is None:
        options = NewtonOptions()
    sector = SingularClass.parse(sector)
    params = tuple(params)
    if len(params) != 2 or len(ranges) != 2:
        raise InputError('trace_locus needs exactly two grid parameters')
    for name in params:
        t_base.index_of(name, t_base.hierarchy)
    if unknowns is None:
        unknowns = default_unknowns(sector, t_base, params)
    overlap = set(params) & set(unknowns)
    if overlap:
        raise InputError('grid parameters %s are also unknowns' %
                         sorted(overlap))
    samples = []
    previous = None
    for p, q in _serpentine(ranges):
        t_node = t_base.to_float().with_values({params[0]: p,
                                                params[1]: q})
        try:
            if previous is None:
                solutions = solve_singular_all(t_node, sector, unknowns,
                                               options)
                if len(solutions) <= branch:
                    raise SolverError('branch %d not found at %s' %
                                      (branch, (p, q)))
                hp = solutions[branch]
            else:
                free = dict((name, previous.value(name)) for name in unknowns
                            if not name.startswith('beta'))
                seed = RiemannPoint(previous.point.beta1,
                                    previous.point.beta2)
                hp = solve_singular(t_node.with_values(free), sector,
                                    unknowns, seed, options)
        except BenneyTodaError as e:
            locus_logger.info('gap at %s = %.6g, %s = %.6g: %s', params[0],
                              p, params[1], q, e.message)
            samples.append(LocusSample((p, q), error=e.message))
            continue
        samples.append(LocusSample((p, q), hp))
        previous = hp
    locus = Locus(sector, params, unknowns, samples)
    if not locus.converged:
        raise EmptyLocus('no node of the grid converged for %s' % (sector,))
    locus_logger.debug('traced %d samples, %d gaps', len(locus.converged),
                       len(locus.gaps))
    return locus


def _sqrt(value):
    if value < 0:
        if value > -1e-12:
            return 0.0
        return float('nan')
    return math.sqrt(value)


def section3_branches(t2, t3, t4, corrected=False):
    """ The printed closed forms of the two-class catastrophe set for
    t_5 = t_6 = ... = 0, as (x, beta1, beta2) per item. With ``corrected``
    the two suspected misprints are replaced by their symmetric partners:
    item 1 beta2 takes t4^2 under the root, item 2 x takes 180 t2 t4^2 t3.
    """
    t2, t3, t4 = float(t2), float(t3), float(t4)
    s15 = math.sqrt(15.0)
    R = _sqrt(t4 * t4 * (3 * t3 * t3 - 8 * t2 * t4))
    R_item1 = R if corrected else _sqrt(t3 * t3 * (3 * t3 * t3 -
                                                   8 * t2 * t4))
    bracket = 8 * t2 * t4 - 3 * t3 * t3
    base = -45 * t4 * t3 ** 3
    common = 180 * t2 * t4 * t4 * t3
    item2_term = common if corrected else 180 * t2 * t3 * t3 * t3
    den_x = 360 * t4 ** 3
    x_plus = (base + common + s15 * bracket * R) / den_x
    x_minus = (base + common - s15 * bracket * R) / den_x
    x_item2 = (base + item2_term - s15 * bracket * R) / den_x
    branches = [
        (1, SingularClass(1, 0), x_plus,
         -(5 * t3 * t4 + s15 * R) / (20 * t4 * t4),
         (-3 * t3 * t4 + s15 * R_item1) / (12 * t4 * t4)),
        (2, SingularClass(1, 0), x_item2,
         (-5 * t3 * t4 + s15 * R) / (20 * t4 * t4),
         -(3 * t3 * t4 + s15 * R) / (12 * t4 * t4)),
        (3, SingularClass(0, 1), x_minus,
         -(3 * t3 * t4 + s15 * R) / (12 * t4 * t4),
         (-5 * t3 * t4 + s15 * R) / (20 * t4 * t4)),
        (4, SingularClass(0, 1), x_plus,
         (-3 * t3 * t4 + s15 * R) / (12 * t4 * t4),
         -(5 * t3 * t4 + s15 * R) / (20 * t4 * t4)),
    ]
    return [dict(item=item, sector=sector, x=x, beta1=b1, beta2=b2)
            for item, sector, x, b1, b2 in branches]


class Section3Report(object):
    """ Comparison of the printed closed forms with solver points. """

    def __init__(self, times, radicand, merged, entries, solutions):
        self.times = times
        self.radicand = radicand
        self.merged = merged
        self.entries = entries
        self.solutions = solutions
        self.solver_outcome = None

    @property
    def discrepancies(self):
        return [e['item'] for e in self.entries if not e['printed_match']]

    def all_corrected_match(self):
        return all(e['corrected_match'] for e in self.entries)

    def to_record(self):
        record = collections.OrderedDict()
        record['times'] = self.times
        record['radicand'] = self.radicand
        record['merged'] = self.merged
        if self.solver_outcome is not None:
            record['solver_outcome'] = self.solver_outcome
        record['entries'] = self.entries
        record['discrepancies'] = self.discrepancies
        return record


def _distance(branch, hp):
    if hp is None:
        return float('inf')
    values = (branch['x'], branch['beta1'], branch['beta2'])
    solved = (float(hp.t[1]), hp.point.beta1, hp.point.beta2)
    if any(math.isnan(v) for v in values):
        return float('inf')
    return max(abs(a - b) for a, b in zip(values, solved))


def _formula_system(t_fixed, sector, options):
    return AugmentedSystem(t_fixed, sector, ['x', 'beta1', 'beta2'],
                           RiemannPoint(0, 1), options)


def _formula_start(system, branch):
    c = list(system.base_c)
    c[system.slot_m[system.slots.index('x')]] = branch['x']
    return system.pack((branch['beta1'], branch['beta2']), c)


def formula_residual(t_fixed, branch, options=None):
    """ Largest hodograph equation residual of the class of ``branch`` at
    its closed-form point, relative to the size of the times. Reduced or
    undefined points give infinity. """
    if options is None:
        options = NewtonOptions()
    values = (branch['x'], branch['beta1'], branch['beta2'])
    if not all(math.isfinite(v) for v in values):
        return float('inf')
    system = _formula_system(t_fixed, branch['sector'], options)
    try:
        F, _ = system(_formula_start(system, branch))
    except Collapse:
        return float('inf')
    return float(np.max(np.abs(F))) / system.scale()


def compare_section3(t2, t3, t4, options=None, tolerance=1e-8):
    """ Solve the classes (1,0) and (0,1) for unknowns (x, beta1, beta2) at
    fixed (t2, t3, t4) and compare with :func:`section3_branches`, printed
    and corrected.

    Newton is started from every closed-form point as well as from the
    scan. The defining equations are the reference: a form is reported as
    a mismatch only when no solver point lies within ``tolerance`` of it
    and the equations fail at the form itself.
    """
    if options is None:
        options = NewtonOptions()
    t2, t3, t4 = float(t2), float(t3), float(t4)
    if t4 == 0:
        raise InputError('t4 must be nonzero')
    radicand = t4 * t4 * (3 * t3 * t3 - 8 * t2 * t4)
    if radicand < 0:
        raise RadicandNegative('t4^2 (3 t3^2 - 8 t2 t4) = %g < 0' % radicand)
    t_fixed = TimeVector([0.0, t2, t3, t4])
    unknowns = ['x', 'beta1', 'beta2']
    printed = section3_branches(t2, t3, t4)
    corrected = section3_branches(t2, t3, t4, corrected=True)
    merged = radicand <= 1e-14 * max(1.0, t4 ** 4)
    solutions = {}
    for sector in (SingularClass(1, 0), SingularClass(0, 1)):
        if merged:
            solutions[sector] = []
            continue
        guesses = [(b['beta1'], b['beta2'], {'x': b['x']})
                   for b in corrected + printed if b['sector'] == sector]
        solutions[sector] = solve_singular_all(t_fixed, sector, unknowns,
                                               options, extra_seeds=guesses)
    outcome = None
    if merged:
        outcome = _merged_outcome(t_fixed, corrected[0], options)
    entries = []
    for raw, fixed in zip(printed, corrected):
        candidates = solutions[raw['sector']]
        best = min(candidates, key=lambda hp: _distance(fixed, hp),
                   default=None)
        entry = collections.OrderedDict()
        entry['item'] = raw['item']
        entry['sector'] = str(raw['sector'])
        entry['printed'] = [raw['x'], raw['beta1'], raw['beta2']]
        entry['corrected'] = [fixed['x'], fixed['beta1'], fixed['beta2']]
        entry['printed_residual'] = formula_residual(t_fixed, raw, options)
        entry['corrected_residual'] = formula_residual(t_fixed, fixed,
                                                       options)
        if best is None:
            entry['solver'] = None
            entry['printed_error'] = None
            entry['corrected_error'] = None
            entry['printed_match'] = merged and \
                abs(raw['beta1'] - raw['beta2']) <= 1e-6
            entry['corrected_match'] = merged and \
                abs(fixed['beta1'] - fixed['beta2']) <= 1e-6
        else:
            entry['solver'] = [float(best.t[1]), best.point.beta1,
                               best.point.beta2]
            entry['residual'] = best.residuals['gradient']
            entry['printed_error'] = _distance(raw, best)
            entry['corrected_error'] = _distance(fixed, best)
            entry['printed_match'] = \
                entry['printed_error'] <= tolerance or \
                entry['printed_residual'] <= tolerance
            entry['corrected_match'] = \
                entry['corrected_error'] <= tolerance or \
                entry['corrected_residual'] <= tolerance
        entries.append(entry)
    times = {'t2': t2, 't3': t3, 't4': t4}
    if merged:
        logger.info('radicand vanishes: the branches merge and the solver '
                    'has no unreduced point')
    report = Section3Report(times, radicand, merged, entries, solutions)
    report.solver_outcome = outcome
    return report


def _merged_outcome(t_fixed, branch, options):
    """ Start Newton at the merged closed-form point; the iteration stops
    on the diagonal with Collapse. """
    system = _formula_system(t_fixed, branch['sector'], options)
    try:
        _solve_from(system, _formula_start(system, branch))
    except Collapse:
        return 'collapse'
    except BenneyTodaError as e:
        return type(e).__name__
    return 'converged'


def cubic_closed_form(x, t2, t3):
    """ The regular point for t = (x, t2, t3) with t4 = t5 = ... = 0.

    beta1 + beta2 = -2 t2/(3 t3) and beta1 beta2 = 2x/(3 t3) - a^2 with
    a = -t2/(3 t3). A negative discriminant continues the pair to the
    elliptic point with Im beta > 0.
    """
    x, t2, t3 = float(x), float(t2), float(t3)
    if t3 == 0:
        raise InputError('the cubic closed form needs t3 != 0')
    a = -t2 / (3 * t3)
    disc = 2 * a * a - 2 * x / (3 * t3)
    if disc == 0:
        raise Collapse('the closed form is reduced at x = %g' % x)
    if disc < 0:
        return RiemannPoint.elliptic(complex(a, math.sqrt(-disc)))
    root = math.sqrt(disc)
    return RiemannPoint(a + root, a - root)
