# Hodograph solutions with complex conjugate invariants.
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

""" With beta2 = conj(beta) the hodograph condition is the single complex
equation dW/d conj(beta) = 0. The derivative towers come from the same
kernel as the hyperbolic case, evaluated at the pair (beta, conj(beta)).

In the chart u = -2 Re beta, v = -(Im beta)^2 the potential satisfies

    W_uu - v W_vv = (eps + 1/2) W_v

so the reduced form W_uu - v W_vv = 0 holds on solutions, where W_v = 0.
"""

import collections
import logging
from fractions import Fraction

import numpy as np

from .common import (AllCoefficientsVanish, BadArity, DeeperSingularity,
                     InputError, NotCritical, RealCollapse, SolverError,
                     ToleranceAmbiguity)
from .newton import NewtonOptions, newton
from .polynomial import Polynomial
from .series import (Hierarchy, Kernel, TimeVector, default_order,
                     numeric_coefficients, taylor_coefficients, uv_form,
                     xy_form)

logger = logging.getLogger('benneytoda.solver')


class SingN(collections.namedtuple('SingN', 'n')):
    """ Elliptic sector: derivatives along conj(beta) vanish up to order
    n + 1. SingN(0) is the regular sector. """
    __slots__ = ()

    @property
    def is_regular(self):
        return self.n == 0

    def __str__(self):
        return 'regular' if self.n == 0 else 'sing%d' % self.n


ELLIPTIC_REGULAR = SingN(0)


class EllipticPoint(object):

    def __init__(self, t, beta, sector, diagnostics):
        self.t = t
        self.beta = complex(beta)
        self.sector = sector
        self.diagnostics = diagnostics

    @property
    def U(self):
        return self.beta.real

    @property
    def V(self):
        return self.beta.imag

    def to_record(self):
        record = collections.OrderedDict()
        record['hierarchy'] = self.t.hierarchy.value
        record['times'] = self.t.as_dict()
        record['beta'] = [self.beta, self.beta.conjugate()]
        record['sector'] = str(self.sector)
        record['residuals'] = dict(self.diagnostics)
        record['order'] = default_order(self.t)
        return record

    def __repr__(self):
        return '<EllipticPoint %s beta=%r>' % (self.sector, self.beta)


def _kernel(c, eps, beta):
    beta = complex(beta)
    return Kernel(c, eps, beta, beta.conjugate())


class EllipticSystem(object):
    """ Re and Im of d^k W / d conj(beta)^k = 0 for k = 1..n+1 in the
    unknowns (U, V) and 2n free time slots. """

    def __init__(self, t, n, slots, seed, options):
        slots = [s.strip() for s in slots]
        if len(slots) != 2 * n or len(set(slots)) != len(slots):
            raise BadArity('sing%d needs %d free time slots, got %r' %
                           (n, 2 * n, slots))
        if not t.is_real():
            raise InputError('elliptic solves need a real time vector')
        self.n = n
        self.slots = slots
        self.slot_m = [t.effective_index(s) for s in slots]
        self.t = t.to_float()
        self.eps = float(t.eps)
        top = max([self.t.top] + self.slot_m)
        self.base_c = [float(v) for v in self.t.coefficients()] + \
            [0.0] * (top - self.t.top)
        self.seed = complex(seed)
        self.options = options

    def initial(self):
        x = [self.seed.real, self.seed.imag]
        x.extend(self.base_c[m] for m in self.slot_m)
        return np.array(x)

    def unpack(self, x):
        c = list(self.base_c)
        for m, value in zip(self.slot_m, x[2:]):
            c[m] = float(value)
        return complex(x[0], x[1]), c

    def kernel(self, x):
        beta, c = self.unpack(x)
        if abs(beta.imag) < self.options.merge_tol * max(1.0, abs(beta.real)):
            raise RealCollapse('Im beta -> 0 at U = %.12g' % beta.real,
                               point=np.array(x))
        return _kernel(c, self.eps, beta)

    def scale(self):
        return max([1.0] + [abs(v) for v in self.base_c])

    def __call__(self, x):
        kernel = self.kernel(x)
        n = self.n
        tower2 = kernel.tower(2, n + 2)
        tower1 = kernel.tower(1, 1)
        mixed2 = kernel.mixed(2, n + 1, tower2, tower1[0])
        units = dict((m, kernel.unit_tower(m, 2, n + 1))
                     for m in self.slot_m)
        size = 2 * (n + 1)
        F = np.empty(size)
        J = np.empty((size, size))
        for k in range(1, n + 2):
            value = tower2[k - 1]
            d_u = mixed2[k] + tower2[k]
            d_v = 1j * (mixed2[k] - tower2[k])
            columns = [d_u, d_v] + [units[m][k - 1] for m in self.slot_m]
            re, im = 2 * (k - 1), 2 * (k - 1) + 1
            F[re], F[im] = value.real, value.imag
            for col, derivative in enumerate(columns):
                derivative = complex(derivative)
                J[re, col] = derivative.real
                J[im, col] = derivative.imag
        return F, J

    def linear_part(self, beta):
        c = list(self.base_c)
        for m in self.slot_m:
            c[m] = 0.0
        kernel = _kernel(c, self.eps, beta)
        n = self.n
        tower = kernel.tower(2, n + 1)
        r = np.empty(2 * (n + 1))
        A = np.empty((2 * (n + 1), len(self.slot_m)))
        for k in range(1, n + 2):
            r[2 * k - 2], r[2 * k - 1] = tower[k - 1].real, tower[k - 1].imag
        for col, m in enumerate(self.slot_m):
            unit = kernel.unit_tower(m, 2, n + 1)
            for k in range(1, n + 2):
                value = complex(unit[k - 1])
                A[2 * k - 2, col], A[2 * k - 1, col] = value.real, value.imag
        return r, A

    def solution_times(self, x):
        beta, c = self.unpack(x)
        eps = self.t.eps if self.t.hierarchy is Hierarchy.GENERAL else None
        return TimeVector(c[1:], self.t.hierarchy, eps)


def classify_elliptic(t, beta, zero_tol=1e-8, band=10.0, check_critical=True):
    """ SingN(n) with n + 1 the number of vanishing derivatives along
    conj(beta); SingN(0) is regular. """
    kernel = _kernel(t.coefficients(), t.eps, beta)
    count = len(kernel.h) + 1
    taylor = taylor_coefficients(kernel.h, complex(beta).conjugate(), count)
    magnitudes = [abs(v) for v in taylor]
    scale = max(magnitudes)
    if scale == 0:
        raise AllCoefficientsVanish('h vanishes identically')
    threshold = zero_tol * scale
    first = next(j for j, m in enumerate(magnitudes) if m > threshold)
    for m in magnitudes[:first]:
        if m > threshold / band:
            raise ToleranceAmbiguity('coefficient %.3e of h at conj(beta) is '
                                     'within the ambiguity band' %
                                     (m / scale))
    if first == 0:
        if check_critical:
            raise NotCritical('dW/d conj(beta) = %.3e is not zero' %
                              abs(taylor[0]), residual=abs(taylor[0]))
        return None
    return SingN(first - 1)


def _diagnostics(system, x, residual):
    kernel = system.kernel(x)
    tower = kernel.tower(2, system.n + 3)
    diagnostics = collections.OrderedDict()
    for k, value in enumerate(tower, 1):
        diagnostics['d%d' % k] = abs(value)
    diagnostics['newton'] = residual
    diagnostics['imag_W'] = abs(complex(kernel.value()).imag)
    return diagnostics


def elliptic_scan(system, box=None, num=41, limit=8):
    """ Seeds (U, V > 0, slots) from a least-squares scan, best first. """
    if box is None:
        box = max(1.0, 1.5 * max([abs(v) for v in system.base_c] + [0.0]))
    us = np.linspace(-box, box, num)
    vs = np.linspace(box / num, box, num)
    values = np.full((num, num), np.inf)
    times = {}
    for p, U in enumerate(us):
        for q, V in enumerate(vs):
            r, A = system.linear_part(complex(U, V))
            if A.shape[1]:
                sol = np.linalg.lstsq(A, -r, rcond=None)[0]
                fitted = A.dot(sol)
                size = max(np.linalg.norm(r), np.linalg.norm(fitted), 1e-300)
                values[p, q] = np.linalg.norm(fitted + r) / size
            else:
                sol = np.zeros(0)
                values[p, q] = np.linalg.norm(r)
            times[p, q] = sol
    minima = []
    for (p, q), sol in times.items():
        window = values[max(p - 1, 0):p + 2, max(q - 1, 0):q + 2]
        if values[p, q] <= window.min():
            minima.append((values[p, q], p, q))
    minima.sort()
    return [np.concatenate([[us[p], vs[q]], times[p, q]])
            for _, p, q in minima[:limit]]


def solve_elliptic_singular(t_fixed, n, slots, seed=None, options=None):
    """ Solve the SingN(n) system: 2n + 2 real equations in U, V and the
    2n free time slots ``slots``. """
    if options is None:
        options = NewtonOptions()
    system = EllipticSystem(t_fixed, n, slots, seed if seed is not None
                            else 1j, options)
    starts = [system.initial()] if seed is not None else elliptic_scan(system)
    failure = None
    for x0 in starts:
        try:
            result = newton(system, x0, options, system.scale())
        except SolverError as e:
            failure = e
            continue
        beta, c = system.unpack(result.x)
        if beta.imag < 0:
            beta = beta.conjugate()
            result.x[1] = -result.x[1]
        t = system.solution_times(result.x)
        sector = classify_elliptic(t, beta, options.zero_tol, options.band)
        return EllipticPoint(t, beta, sector,
                             _diagnostics(system, result.x, result.residual))
    if failure is None:
        failure = SolverError('no elliptic seed available')
    logger.warning('elliptic solve failed for %r: %s', t_fixed,
                   failure.message)
    raise failure


def solve_elliptic(t, seed, options=None):
    """ Newton on Re, Im of dW/d conj(beta) = 0 in (U, V).

    The sector is regular iff d^2 W / d conj(beta)^2 does not vanish; the
    Hessian determinant in (U, V) is its squared modulus.
    """
    seed = complex(seed)
    if seed.imag == 0:
        raise InputError('elliptic seed needs Im != 0')
    return solve_elliptic_singular(t, 0, [], seed, options)


def chart_derivatives(t, beta):
    """ W_u, W_v, W_uu, W_uv, W_vv in the chart u = -(beta1 + beta2),
    v = (beta1 - beta2)^2 / 4 at an elliptic point. """
    beta = complex(beta)
    if beta.imag == 0:
        raise InputError('chart derivatives need v < 0')
    kernel = _kernel(t.coefficients(), t.eps, beta)
    tower1 = kernel.tower(1, 2)
    tower2 = kernel.tower(2, 2)
    w12 = kernel.mixed(1, 1, tower1, tower2[0])[1]
    w1, w11 = tower1
    w2, w22 = tower2
    s = 1j * beta.imag
    v = s * s
    out = collections.OrderedDict()
    out['W_u'] = -(w1 + w2) / 2
    out['W_v'] = (w1 - w2) / (2 * s)
    out['W_uu'] = (w11 + 2 * w12 + w22) / 4
    out['W_uv'] = -(w11 - w22) / (4 * s)
    out['W_vv'] = (w11 - 2 * w12 + w22) / (4 * v) - (w1 - w2) / (4 * s ** 3)
    return collections.OrderedDict((k, complex(v_).real)
                                   for k, v_ in out.items())


def complex_derivatives(t, beta, max_k=3):
    """ [d^k W / d beta^k for k = 1..max_k] at (beta, conj(beta)). """
    kernel = _kernel(t.coefficients(), t.eps, beta)
    return kernel.tower(1, max_k)


def eval_W_uv(t, U, V):
    """ W at beta = U + iV as a real number; V = 0 gives the diagonal. """
    c = t.coefficients()
    table = numeric_coefficients(t.eps, U, U * U + V * V, len(c) - 1)
    return sum(cm * table[m] for m, cm in enumerate(c) if cm != 0)


def eval_W_chart(t, u, v):
    """ W as a function of the chart variables, on either side of v = 0. """
    a = -u / 2
    c = t.coefficients()
    table = numeric_coefficients(t.eps, a, a * a - v, len(c) - 1)
    return sum(cm * table[m] for m, cm in enumerate(c) if cm != 0)


def find_catastrophe(t_fixed, slots=('x', 't2'), seed=None, options=None):
    """ Elliptic gradient catastrophe: dW/dbeta = d^2W/dbeta^2 = 0 with the
    third derivative nonzero, solving for two free time slots.

    The result carries the chart conditions W_uu, W_uv, W_vv in its
    diagnostics; they vanish together with the second derivative.
    """
    if options is None:
        options = NewtonOptions()
    slots = list(slots)
    if len(slots) != 2:
        raise BadArity('find_catastrophe needs exactly two free time slots')
    point = solve_elliptic_singular(t_fixed, 1, slots, seed, options)
    if point.sector != SingN(1):
        raise DeeperSingularity('point classified as %s' % point.sector,
                                point=point)
    chart = chart_derivatives(point.t, point.beta)
    for name in ('W_uu', 'W_uv', 'W_vv'):
        point.diagnostics[name] = abs(chart[name])
    third = abs(complex_derivatives(point.t, point.beta, 3)[2])
    point.diagnostics['d3_beta'] = third
    scale = max([1.0] + [abs(float(v)) for v in point.t.values])
    if third <= options.zero_tol * scale:
        raise DeeperSingularity('third derivative %.3e vanishes' % third,
                                point=point)
    return point


def umbilic_conditions_hold(t, beta, tol=1e-9):
    """ True iff W_uu, W_uv and W_vv all vanish to ``tol`` (relative to the
    largest time entry). """
    chart = chart_derivatives(t, beta)
    scale = max([1.0] + [abs(float(v)) for v in t.values])
    return all(abs(chart[k]) <= tol * scale
               for k in ('W_uu', 'W_uv', 'W_vv'))


def _poly(terms, variables):
    return Polynomial(dict((e, Fraction(c)) for e, c in terms.items()),
                      variables)


UV = ('U', 'V')
XY = ('X', 'Y')

# W at beta = U + iV for the unit times t_1..t_5.
PRINTED_UV = {
    1: {(1, 0): 1},
    2: {(2, 0): 1, (0, 2): Fraction(-1, 2)},
    3: {(3, 0): 1, (1, 2): Fraction(-3, 2)},
    4: {(4, 0): 1, (2, 2): -3, (0, 4): Fraction(3, 8)},
    5: {(5, 0): 1, (3, 2): -5, (1, 4): Fraction(15, 8)},
}

# The restricted form displayed next to the umbilic remark prints 1/8.
PRINTED_UV_T2_DISPLAY = {(2, 0): 1, (0, 2): Fraction(-1, 8)}

# dToda W_T for the unit times x_0..x_3.
PRINTED_XY = {
    0: {(1, 0): -1},
    1: {(0, 2): Fraction(-1, 2)},
    2: {(1, 2): Fraction(-1, 2)},
    3: {(2, 2): Fraction(-1, 2), (0, 4): Fraction(-1, 8)},
}


def umbilic_report():
    """ Compare the printed (U, V) and (X, Y) forms of W with the forms
    derived from the coefficient tables, term by term. """
    entries = []
    for n, terms in sorted(PRINTED_UV.items()):
        derived = uv_form(TimeVector.unit(n))
        entries.append(_report_entry('benney', 't%d' % n if n > 1 else 'x',
                                     _poly(terms, UV), derived))
    derived_t2 = uv_form(TimeVector.unit(2))
    entries.append(_report_entry('benney-display', 't2',
                                 _poly(PRINTED_UV_T2_DISPLAY, UV),
                                 derived_t2))
    for n, terms in sorted(PRINTED_XY.items()):
        derived = xy_form(TimeVector.unit(n, Hierarchy.DTODA))
        entries.append(_report_entry('dtoda', 'x%d' % n, _poly(terms, XY),
                                     derived))
    return entries


def _report_entry(form, slot, printed, derived):
    entry = collections.OrderedDict()
    entry['form'] = form
    entry['slot'] = slot
    entry['printed'] = str(printed)
    entry['derived'] = str(derived)
    entry['match'] = printed == derived
    return entry
