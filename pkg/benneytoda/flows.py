# Finite difference checks that hodograph points solve the flows.
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

""" Each grid node is solved with :func:`solve_regular`, then the stencil
nodes at +-h in space and time are solved from the node itself. The
residual of

    d beta_i / d t = lambda_i(beta) d beta_i / d x

is evaluated with centered differences at steps h and h/2; the ratio of
the max norms gives the observed order.

Benney flows use x = t_1 as space and t_n as time. dToda flows use x_0 as
space and x_n as time. For the second Benney flow and the first dToda flow
the residuals of the (u, v) systems

    u_t + u u_x + v_x = 0,  v_t + (u v)_x = 0     (Benney, t = t_2)
    u_t + v_x = 0,          v_t + v u_x = 0       (dToda, t = x_1)

are reported as well, with (u, v) from :func:`uv_map`.
"""

import collections
import concurrent.futures
import logging
import math

import numpy as np

from .common import (BenneyTodaError, GridCrossesSingularity, InputError,
                     default_jobs)
from .hodograph import (REGULAR, cubic_closed_form, solve_regular,
                        solve_singular_all)
from .newton import NewtonOptions
from .series import (Hierarchy, RiemannPoint, TimeVector, char_speed,
                     uv_map)

logger = logging.getLogger('benneytoda.flows')

STEP_FRACTION = 1e-3


class FlowSample(object):
    """ Residuals at one grid node. ``residual`` and ``residual_half`` are
    per invariant, ``uv`` per (u, v) equation or None. """

    def __init__(self, params, point, residual, residual_half, uv=None):
        self.params = params
        self.point = point
        self.residual = residual
        self.residual_half = residual_half
        self.uv = uv

    @property
    def hyperbolic(self):
        return uv_map(self.point)[1] > 0

    def to_row(self):
        uv = self.uv if self.uv is not None else ('', '')
        return list(self.params) + [
            self.point.beta1, self.point.beta2, self.residual[0],
            self.residual[1], self.residual_half[0], self.residual_half[1],
            uv[0], uv[1], int(self.hyperbolic)]


class FlowReport(object):

    COLUMNS = ('space', 'time', 'beta1', 'beta2', 'residual1', 'residual2',
               'residual1_half', 'residual2_half', 'uv1', 'uv2',
               'hyperbolic')

    def __init__(self, hierarchy, flow, space, time, step, samples):
        self.hierarchy = hierarchy
        self.flow = flow
        self.space = space
        self.time = time
        self.step = step
        self.samples = samples

    @property
    def max_residual(self):
        return max(max(abs(r) for r in s.residual) for s in self.samples)

    @property
    def max_residual_half(self):
        return max(max(abs(r) for r in s.residual_half)
                   for s in self.samples)

    @property
    def max_uv(self):
        values = [max(abs(r) for r in s.uv) for s in self.samples
                  if s.uv is not None]
        return max(values) if values else None

    @property
    def order(self):
        """ log2 of the residual ratio under step halving; None when the
        residual is at round-off level. """
        coarse, fine = self.max_residual, self.max_residual_half
        if coarse < 1e-10 or fine == 0:
            return None
        return math.log(coarse / fine, 2)

    @property
    def hyperbolic(self):
        return all(s.hyperbolic for s in self.samples)

    def rows(self):
        return [s.to_row() for s in self.samples]

    def to_record(self):
        record = collections.OrderedDict()
        record['hierarchy'] = self.hierarchy.value
        record['flow'] = self.flow
        record['space'] = self.space
        record['time'] = self.time
        record['step'] = self.step
        record['nodes'] = len(self.samples)
        record['max_residual'] = self.max_residual
        record['max_residual_half'] = self.max_residual_half
        record['order'] = self.order
        record['max_uv'] = self.max_uv
        record['hyperbolic'] = self.hyperbolic
        return record


def _solve(t, seed, options):
    return solve_regular(t, seed, options).point


def _centered(minus, plus, step):
    return [(p - m) / (2 * step) for m, p in zip(minus, plus)]


def _stencil_task(args):
    """ Residuals for one node; module level so worker processes can run
    it. """
    t, space, time, flow, seed, step, options = args
    center = _solve(t, seed, options)
    hierarchy = t.hierarchy
    speeds = [char_speed(flow, center, i, hierarchy) for i in (1, 2)]
    results = []
    uv = None
    for h in (step, step / 2):
        points = {}
        for name in set([space, time]):
            value = float(t[t.index_of(name, hierarchy)])
            points[name, -1] = _solve(t.with_values({name: value - h}),
                                      center, options)
            points[name, 1] = _solve(t.with_values({name: value + h}),
                                     center, options)
        dx = _centered(_pair(points[space, -1]), _pair(points[space, 1]), h)
        dt = _centered(_pair(points[time, -1]), _pair(points[time, 1]), h)
        results.append([dt[i] - speeds[i] * dx[i] for i in (0, 1)])
        if h == step:
            uv = _uv_residual(hierarchy, flow, center, points, space, time,
                              h)
    return center, results[0], results[1], uv


def _pair(point):
    return (point.beta1, point.beta2)


def _uv_residual(hierarchy, flow, center, points, space, time, h):
    if (hierarchy, flow) not in ((Hierarchy.BENNEY, 2), (Hierarchy.DTODA, 1)):
        return None
    u, v = uv_map(center)
    ux, vx = _centered(uv_map(points[space, -1]), uv_map(points[space, 1]),
                       h)
    ut, vt = _centered(uv_map(points[time, -1]), uv_map(points[time, 1]), h)
    if hierarchy is Hierarchy.BENNEY:
        return (ut + u * ux + vx, vt + ux * v + u * vx)
    return (ut + vx, vt + v * ux)


def _patch_step(ranges):
    width = max([abs(hi - lo) for lo, hi in ranges] + [0.0])
    return STEP_FRACTION * width if width > 0 else STEP_FRACTION


def _axis(bounds, num):
    lo, hi = bounds
    return list(np.linspace(lo, hi, num)) if num > 1 else [0.5 * (lo + hi)]


def _first_seed(t, seed, branch, options):
    if seed is not None:
        return seed
    solutions = solve_singular_all(t, REGULAR, ['beta1', 'beta2'], options)
    if len(solutions) <= branch:
        raise GridCrossesSingularity('no regular point of branch %d at %r'
                                     % (branch, t))
    return solutions[branch].point


def flow_residual(t_base, flow, space_range, time_range, num=3, step=None,
                  seed=None, branch=0, options=None, jobs=1):
    """ Residual field of the ``flow``-th flow over a num x num patch.

    Node values are found by continuation along the rows of the patch.
    Stencils are independent and run on ``jobs`` worker processes; results
    keep the grid order.
    """
    if options is None:
        options = NewtonOptions()
    if num < 1:
        raise InputError('num must be positive')
    hierarchy = t_base.hierarchy
    if hierarchy is Hierarchy.DTODA:
        if flow < 1:
            raise InputError('dToda flows start at x_1')
        space, time = 'x0', 'x%d' % flow
    elif hierarchy is Hierarchy.BENNEY:
        if flow < 1:
            raise InputError('Benney flows start at t_1')
        space, time = 'x', TimeVector.unit(flow).name(flow)
    else:
        raise InputError('flows are defined for benney and dtoda only')
    t_base = t_base.to_float()
    same = space == time
    ranges = [space_range] if same else [space_range, time_range]
    if step is None or step <= 0:
        step = _patch_step(ranges)
    xs = _axis(space_range, num)
    ts = [None] if same else _axis(time_range, num)
    nodes = []
    previous = None
    for row, tv in enumerate(ts):
        columns = xs if row % 2 == 0 else list(reversed(xs))
        for xv in columns:
            updates = {space: xv}
            if tv is not None:
                updates[time] = tv
            t = t_base.with_values(updates)
            try:
                if previous is None:
                    previous = _first_seed(t, seed, branch, options)
                previous = _solve(t, previous, options)
            except BenneyTodaError as e:
                raise GridCrossesSingularity(
                    'node %s = %.6g, %s = %.6g failed: %s' %
                    (space, xv, time, tv if tv is not None else xv,
                     e.message), point=t)
            nodes.append(((xv, tv if tv is not None else xv), t, previous))
    tasks = [(t, space, time, flow, point, step, options)
             for _, t, point in nodes]
    if jobs == 0:
        jobs = default_jobs()
    try:
        if jobs > 1:
            with concurrent.futures.ProcessPoolExecutor(jobs) as executor:
                outcomes = list(executor.map(_stencil_task, tasks))
        else:
            outcomes = [_stencil_task(task) for task in tasks]
    except BenneyTodaError as e:
        raise GridCrossesSingularity('stencil failed: %s' % e.message,
                                     point=e.point)
    samples = [FlowSample(params, *outcome)
               for (params, _, _), outcome in zip(nodes, outcomes)]
    report = FlowReport(hierarchy, flow, space, time, step, samples)
    logger.info('%s flow %d: %d nodes, max residual %.3e, order %s',
                hierarchy.value, flow, len(samples), report.max_residual,
                report.order)
    return report


def benney_flow_residual(n, base, x_range, t_range, num=3, step=None,
                         seed=None, branch=0, options=None, jobs=1):
    """ Residual of the n-th Benney flow in (x, t_n). """
    if base.hierarchy is not Hierarchy.BENNEY:
        raise InputError('expected Benney times')
    return flow_residual(base, n, x_range, t_range, num, step, seed, branch,
                         options, jobs)


def dtoda_flow_residual(n, base, x0_range, t_range, num=3, step=None,
                        seed=None, branch=0, options=None, jobs=1):
    """ Residual of the n-th dToda flow in (x_0, x_n). """
    if base.hierarchy is not Hierarchy.DTODA:
        raise InputError('expected dToda times')
    return flow_residual(base, n, x0_range, t_range, num, step, seed, branch,
                         options, jobs)


class InitialSlice(object):
    """ beta(x) along a line of fixed t2, t3, t4. """

    def __init__(self, t3, t4, t2, xs, points):
        self.t3 = t3
        self.t4 = t4
        self.t2 = t2
        self.xs = list(xs)
        self.points = list(points)

    def betas(self):
        return np.array([[p.beta1, p.beta2] for p in self.points])

    def distance(self, other):
        """ Max |beta difference| against a slice on the same x nodes. """
        if len(self.xs) != len(other.xs):
            raise InputError('slices live on different grids')
        return float(np.max(np.abs(self.betas() - other.betas())))

    def rows(self):
        return [[x, self.t2, p.beta1, p.beta2]
                for x, p in zip(self.xs, self.points)]


def initial_data_slice(t3, t4, x_values, seed=None, options=None, t2=0.0):
    """ Solve along x at fixed (t2, t3, t4); by default t2 = 0, the initial
    data of the t2 flow parametrized by t3 and t4.

    Without a seed, t4 = 0 starts from :func:`cubic_closed_form`.
    """
    if options is None:
        options = NewtonOptions()
    xs = [float(x) for x in x_values]
    if not xs:
        raise InputError('initial_data_slice needs at least one x value')
    if seed is None:
        if float(t4) != 0:
            raise InputError('a seed is required when t4 != 0')
        seed = cubic_closed_form(xs[0], t2, t3)
        if seed.is_elliptic:
            raise GridCrossesSingularity('x = %g is in the elliptic region'
                                         % xs[0])
    base = TimeVector([0.0, float(t2), float(t3), float(t4)])
    points = []
    previous = seed
    for x in xs:
        try:
            previous = _solve(base.with_values({'x': x}), previous, options)
        except BenneyTodaError as e:
            raise GridCrossesSingularity('slice fails at x = %g: %s' %
                                         (x, e.message), point=x)
        points.append(previous)
    return InitialSlice(t3, t4, t2, xs, points)


def advance_slice(initial, dt):
    """ One explicit characteristic step of the second Benney flow,
    beta_i += dt lambda_i d beta_i/dx, with second order x differences. """
    if len(initial.xs) < 3:
        raise InputError('advance_slice needs at least three x nodes')
    betas = initial.betas()
    xs = np.array(initial.xs)
    points = []
    for i in (0, 1):
        gradient = np.gradient(betas[:, i], xs, edge_order=2)
        speeds = np.array([char_speed(2, p, i + 1) for p in initial.points])
        betas[:, i] = betas[:, i] + dt * speeds * gradient
    for b1, b2 in betas:
        points.append(RiemannPoint(float(b1), float(b2)))
    return InitialSlice(initial.t3, initial.t4, initial.t2 + dt, initial.xs,
                        points)
