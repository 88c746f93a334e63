# Generating function engine for the Euler-Poisson-Darboux potential W.
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

""" The coefficients C_k of (1 - 2aw + bw^2)^(-eps) = sum_k C_k w^k, with
a = (beta1 + beta2)/2 and b = beta1*beta2, carry everything: the potential is
W = sum_m c_m C_m, where c_m are the effective coefficients of the time
vector, and every derivative of W along one invariant is a Taylor
coefficient of the polynomial

    h(l) = sum_m c_m sum_{j<m} C_j l^(m-1-j)

at that invariant. """

import enum
import functools
import logging
import math
import numbers
from fractions import Fraction

from .common import InputError
from .polynomial import Polynomial, as_exact, is_exact

logger = logging.getLogger('benneytoda.series')

SYMBOLIC = None
DEFAULT_EXTRA_ORDER = 6


class Hierarchy(enum.Enum):
    BENNEY = 'benney'
    DTODA = 'dtoda'
    GENERAL = 'general'


class Backend(enum.Enum):
    EXACT = 'exact'
    FLOAT = 'float'


class PointKind(enum.Enum):
    HYPERBOLIC = 'hyperbolic'
    ELLIPTIC = 'elliptic'


def as_rational(value):
    """ Parse an index such as '1/2', 0.5 or Fraction(1, 2). """
    if isinstance(value, float):
        return Fraction(value).limit_denominator(10 ** 6)
    try:
        value = as_exact(value)
    except (ValueError, ZeroDivisionError):
        raise InputError('not a rational number: %r' % (value,))
    if not isinstance(value, Fraction):
        raise InputError('not a rational number: %r' % (value,))
    return value


def _is_number(value):
    return isinstance(value, numbers.Number)


class TimeVector(object):
    """ Finite list of flow parameters tagged with its hierarchy.

    Benney and general-eps vectors hold t_1..t_N with t_1 = x. dToda vectors
    hold x_0..x_N. Trailing zeros are dropped, entries past N read as zero.

    >>> t = TimeVector.from_mapping({'x': 1, 't3': 1})
    >>> t.N, t[2], t.name(3)
    (3, Fraction(0, 1), 't3')

    """

    def __init__(self, values, hierarchy=Hierarchy.BENNEY, eps=None):
        hierarchy = Hierarchy(hierarchy)
        if hierarchy is Hierarchy.GENERAL:
            if eps is None:
                raise InputError('a general hierarchy needs an eps index')
            eps = as_rational(eps)
        elif eps is not None:
            raise InputError('eps is fixed by the %s hierarchy' %
                             hierarchy.value)
        values = [as_exact(v) for v in values]
        for v in values:
            if not _is_number(v):
                raise InputError('time entries must be numbers: %r' % (v,))
        while len(values) > 1 and values[-1] == 0:
            values.pop()
        if not values:
            values = [Fraction(0)]
        self._values = tuple(values)
        self._hierarchy = hierarchy
        self._general_eps = eps

    @classmethod
    def from_mapping(cls, mapping, hierarchy=Hierarchy.BENNEY, eps=None):
        """ Build from {'x': 1, 't3': 2} (Benney) or {'x0': 1} (dToda). """
        hierarchy = Hierarchy(hierarchy)
        first = cls.first_index_of(hierarchy)
        indices = dict((cls.index_of(name, hierarchy), value)
                       for name, value in mapping.items())
        top = max(list(indices) + [first])
        values = [indices.get(i, 0) for i in range(first, top + 1)]
        return cls(values, hierarchy, eps)

    @classmethod
    def unit(cls, index, hierarchy=Hierarchy.BENNEY, eps=None):
        first = cls.first_index_of(hierarchy)
        values = [0] * (index - first) + [1]
        return cls(values, hierarchy, eps)

    @staticmethod
    def first_index_of(hierarchy):
        return 0 if Hierarchy(hierarchy) is Hierarchy.DTODA else 1

    @staticmethod
    def index_of(name, hierarchy=Hierarchy.BENNEY):
        """ Index of a slot name: 'x' and 't1' are 1, 't3' is 3 for
        Benney; 'x0', 'x1', ... for dToda. """
        hierarchy = Hierarchy(hierarchy)
        name = name.strip()
        if hierarchy is Hierarchy.DTODA:
            prefix = 'x'
        else:
            if name == 'x':
                return 1
            prefix = 't'
        if not name.startswith(prefix) or not name[1:].isdigit():
            raise InputError('unknown time slot %r for the %s hierarchy' %
                             (name, hierarchy.value))
        index = int(name[1:])
        if index < TimeVector.first_index_of(hierarchy):
            raise InputError('unknown time slot %r' % name)
        return index

    def name(self, index):
        if self._hierarchy is Hierarchy.DTODA:
            return 'x%d' % index
        return 'x' if index == 1 else 't%d' % index

    @property
    def hierarchy(self):
        return self._hierarchy

    @property
    def values(self):
        return self._values

    @property
    def first_index(self):
        return self.first_index_of(self._hierarchy)

    @property
    def N(self):
        return self.first_index + len(self._values) - 1

    @property
    def eps(self):
        if self._hierarchy is Hierarchy.BENNEY:
            return Fraction(1, 2)
        if self._hierarchy is Hierarchy.DTODA:
            return Fraction(-1, 2)
        return self._general_eps

    def __getitem__(self, index):
        offset = index - self.first_index
        if offset < 0:
            raise IndexError(index)
        if offset >= len(self._values):
            return Fraction(0)
        return self._values[offset]

    def coefficients(self):
        """ Effective coefficients c_0..c_M with W = sum_m c_m C_m. """
        return [0] + list(self._values)

    @property
    def top(self):
        """ Index M of the highest effective coefficient. """
        return len(self._values)

    def effective_index(self, name):
        """ Position m in :meth:`coefficients` of the named slot. """
        return self.index_of(name, self._hierarchy) - self.first_index + 1

    def slots(self):
        return [self.name(i) for i in range(self.first_index, self.N + 1)]

    def as_dict(self):
        return dict((self.name(i), self[i])
                    for i in range(self.first_index, self.N + 1))

    def with_values(self, updates):
        """ Copy with some slots replaced, e.g. {'x': 0.5}. """
        mapping = self.as_dict()
        for name, value in updates.items():
            self.index_of(name, self._hierarchy)
            mapping[name] = value
        return TimeVector.from_mapping(mapping, self._hierarchy,
                                       self._general_eps)

    def scaled(self, factor):
        return TimeVector([v * factor for v in self._values],
                          self._hierarchy, self._general_eps)

    def is_exact(self):
        return all(is_exact(v) for v in self._values)

    def is_real(self):
        return not any(isinstance(v, complex) for v in self._values)

    def to_float(self):
        return TimeVector([float(v) for v in self._values],
                          self._hierarchy, self._general_eps)

    def __eq__(self, other):
        return (isinstance(other, TimeVector) and
                self._hierarchy == other._hierarchy and
                self._general_eps == other._general_eps and
                self._values == other._values)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._hierarchy, self._values))

    def __repr__(self):
        body = ', '.join('%s=%s' % (self.name(i), self[i])
                         for i in range(self.first_index, self.N + 1))
        return '<TimeVector %s %s>' % (self._hierarchy.value, body)


def _exact_sqrt(value):
    """ Exact square root of a Fraction when it is a perfect square. """
    if isinstance(value, Fraction) and value >= 0:
        num = math.isqrt(value.numerator)
        den = math.isqrt(value.denominator)
        if num * num == value.numerator and den * den == value.denominator:
            return Fraction(num, den)
    return math.sqrt(value)


class RiemannPoint(object):
    """ A pair of Riemann invariants.

    Hyperbolic points hold two distinct reals. Elliptic points hold a
    complex beta with Im beta != 0; the second invariant is its conjugate.
    """

    def __init__(self, beta1, beta2):
        beta1, beta2 = as_exact(beta1), as_exact(beta2)
        for beta in (beta1, beta2):
            if isinstance(beta, complex) or not _is_number(beta):
                raise InputError('hyperbolic invariants must be real: %r' %
                                 (beta,))
        if beta1 == beta2:
            raise InputError('invariants coincide (reduced point): %s' %
                             beta1)
        self._kind = PointKind.HYPERBOLIC
        self._beta1 = beta1
        self._beta2 = beta2

    @classmethod
    def elliptic(cls, beta):
        beta = complex(beta)
        if beta.imag == 0:
            raise InputError('elliptic point needs Im beta != 0')
        point = cls.__new__(cls)
        point._kind = PointKind.ELLIPTIC
        point._beta1 = beta
        point._beta2 = beta.conjugate()
        return point

    @property
    def kind(self):
        return self._kind

    @property
    def is_elliptic(self):
        return self._kind is PointKind.ELLIPTIC

    @property
    def beta1(self):
        return self._beta1

    @property
    def beta2(self):
        return self._beta2

    @property
    def beta(self):
        return self._beta1

    def invariant(self, i):
        if i not in (1, 2):
            raise InputError('invariant index must be 1 or 2, got %r' % (i,))
        return self._beta1 if i == 1 else self._beta2

    @property
    def a(self):
        if self.is_elliptic:
            return self._beta1.real
        return (self._beta1 + self._beta2) / 2

    @property
    def b(self):
        if self.is_elliptic:
            return abs(self._beta1) ** 2
        return self._beta1 * self._beta2

    @property
    def u(self):
        return -2 * self.a

    @property
    def v(self):
        if self.is_elliptic:
            return -self._beta1.imag ** 2
        return (self._beta1 - self._beta2) ** 2 / 4

    def is_exact(self):
        return (not self.is_elliptic and is_exact(self._beta1) and
                is_exact(self._beta2))

    def swapped(self):
        if self.is_elliptic:
            return RiemannPoint.elliptic(self._beta2)
        return RiemannPoint(self._beta2, self._beta1)

    def __eq__(self, other):
        return (isinstance(other, RiemannPoint) and
                self._kind is other._kind and
                self._beta1 == other._beta1 and self._beta2 == other._beta2)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._kind, self._beta1, self._beta2))

    def __repr__(self):
        if self.is_elliptic:
            return '<RiemannPoint elliptic beta=%r>' % (self._beta1,)
        return '<RiemannPoint %r, %r>' % (self._beta1, self._beta2)


def uv_map(p):
    """ (u, v) = (-(beta1+beta2), (beta1-beta2)^2/4); v < 0 iff elliptic. """
    return p.u, p.v


def uv_unmap(u, v):
    """ Inverse of :func:`uv_map` with beta1 >= beta2 for v > 0 and
    Im beta1 > 0 for v < 0. """
    u, v = as_exact(u), as_exact(v)
    if v == 0:
        raise InputError('v = 0 is the reduced case beta1 = beta2')
    if v > 0:
        root = _exact_sqrt(v)
        return RiemannPoint(-u / 2 + root, -u / 2 - root)
    return RiemannPoint.elliptic(complex(-u / 2, math.sqrt(-v)))


class CoeffTable(object):
    """ C_0..C_K of (1 - 2aw + bw^2)^(-eps), either as polynomials in (a, b)
    or evaluated at a point. """

    def __init__(self, eps, coeffs, backend, point=None):
        self._eps = eps
        self._coeffs = tuple(coeffs)
        self._backend = backend
        self._point = point

    @property
    def eps(self):
        return self._eps

    @property
    def order(self):
        return len(self._coeffs) - 1

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def backend(self):
        return self._backend

    @property
    def point(self):
        return self._point

    @property
    def is_symbolic(self):
        return self._point is None and isinstance(self._coeffs[0],
                                                  Polynomial)

    def __getitem__(self, k):
        return self._coeffs[k]

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def in_invariants(self, variables=('x', 'y')):
        """ Symbolic table rewritten in the invariants themselves,
        a = (x + y)/2 and b = x*y. """
        if not self.is_symbolic:
            raise InputError('only symbolic tables can be rewritten')
        x = Polynomial.variable(variables[0], variables)
        y = Polynomial.variable(variables[1], variables)
        images = {'a': (x + y) * Fraction(1, 2), 'b': x * y}
        return [c.substitute(images, variables) for c in self._coeffs]


def _recurrence(eps, a, b, order, one, exact):
    coeffs = [one]
    previous = 0
    for k in range(order):
        if exact:
            scale = Fraction(1, k + 1)
        else:
            scale = 1.0 / (k + 1)
        current = coeffs[k]
        term = a * current * (2 * (k + eps))
        if k > 0:
            term = term - b * previous * (k + 2 * eps - 1)
        coeffs.append(term * scale)
        previous = current
    return coeffs


@functools.lru_cache(maxsize=64)
def _symbolic_coefficients(eps, order):
    variables = ('a', 'b')
    a = Polynomial.variable('a', variables)
    b = Polynomial.variable('b', variables)
    one = Polynomial.constant(1, variables)
    return tuple(_recurrence(eps, a, b, order, one, True))


def numeric_coefficients(eps, a, b, order):
    """ C_0..C_order at numeric (a, b). Exact when a and b are exact. """
    if is_exact(a) and is_exact(b):
        return _recurrence(as_rational(eps), as_exact(a), as_exact(b), order,
                           Fraction(1), True)
    return _recurrence(float(eps), a, b, order, 1.0, False)


def coeff_table(eps, point=SYMBOLIC, order=4):
    """ Coefficient table of order ``order`` for index ``eps``.

    With ``point`` left as SYMBOLIC the entries are exact polynomials in
    (a, b); with a RiemannPoint they are numbers, exact when the point is.

    >>> [str(c) for c in coeff_table('1/2', order=2)]
    ['1', 'a', '3/2*a^2 - 1/2*b']

    """
    eps = as_rational(eps)
    if order < 0:
        raise InputError('order must be non-negative')
    if point is SYMBOLIC:
        return CoeffTable(eps, _symbolic_coefficients(eps, order),
                          Backend.EXACT)
    coeffs = numeric_coefficients(eps, point.a, point.b, order)
    backend = Backend.EXACT if point.is_exact() else Backend.FLOAT
    return CoeffTable(eps, coeffs, backend, point)


def h_coefficients(c, table):
    """ Ascending coefficients of h for effective coefficients ``c``:
    h_d = sum_{m > d} c_m C_{m-1-d}. """
    top = len(c) - 1
    h = []
    for d in range(top):
        total = 0
        for m in range(d + 1, top + 1):
            if c[m] != 0:
                total = total + c[m] * table[m - 1 - d]
        h.append(total)
    return h


def taylor_coefficients(coeffs, center, count):
    """ First ``count`` Taylor coefficients at ``center`` of the polynomial
    with ascending ``coeffs``, by repeated synthetic division. """
    work = list(coeffs)
    out = []
    for _ in range(count):
        if not work:
            out.append(0)
            continue
        quotient = [0] * (len(work) - 1)
        acc = 0
        for j in range(len(work) - 1, -1, -1):
            acc = acc * center + work[j]
            if j > 0:
                quotient[j - 1] = acc
        out.append(acc)
        work = quotient
    return out


def rising_factorial(eps, k):
    value = 1
    for j in range(k):
        value = value * (eps + j)
    return value


class Kernel(object):
    """ Derivative data of W at one pair of invariants.

    ``c`` are the effective coefficients of the time vector. The same kernel
    serves hyperbolic pairs and the elliptic pair (beta, conj(beta)).
    """

    def __init__(self, c, eps, beta1, beta2):
        self.c = list(c)
        self.beta = (beta1, beta2)
        exact = all(is_exact(v) for v in self.c + [beta1, beta2])
        self.eps = as_rational(eps) if exact else float(eps)
        a = (beta1 + beta2) / 2
        b = beta1 * beta2
        if isinstance(a, complex) and a.imag == 0 and \
                isinstance(b, complex) and b.imag == 0:
            a, b = a.real, b.real
        self.a, self.b = a, b
        self.table = numeric_coefficients(self.eps, a, b,
                                          max(len(self.c) - 1, 1))
        self.h = h_coefficients(self.c, self.table)

    def center(self, i):
        return self.beta[i - 1]

    def tower(self, i, max_k):
        """ [d^k W / d beta_i^k for k = 1..max_k]. """
        return self._scaled(taylor_coefficients(self.h, self.center(i),
                                                max_k))

    def _scaled(self, taylor):
        out = []
        rising = 1
        for k, coefficient in enumerate(taylor, 1):
            rising = rising * (self.eps + k - 1)
            out.append(rising * coefficient)
        return out

    def unit_tower(self, m, i, max_k):
        """ Tower of d/dc_m of the derivatives: W is linear in c, so this
        is the tower of the unit coefficient vector e_m. """
        unit_h = [self.table[m - 1 - d] for d in range(m)]
        return self._scaled(taylor_coefficients(unit_h, self.center(i),
                                                max_k))

    def mixed(self, i, max_k, tower_i=None, first_j=None):
        """ [d_i^k d_j W for k = 0..max_k] from the EPD recursion. """
        j = 2 if i == 1 else 1
        if tower_i is None:
            tower_i = self.tower(i, max_k)
        if first_j is None:
            first_j = self.tower(j, 1)[0]
        gap = self.center(i) - self.center(j)
        out = [first_j]
        for k in range(1, max_k + 1):
            out.append((self.eps * tower_i[k - 1] -
                        (k - 1 + self.eps) * out[k - 1]) / gap)
        return out

    def value(self):
        total = 0
        for m, cm in enumerate(self.c):
            if cm != 0:
                total = total + cm * self.table[m]
        return total


def _check_pair(t, p):
    if not isinstance(t, TimeVector):
        raise InputError('expected a TimeVector, got %r' % (t,))
    if not isinstance(p, RiemannPoint):
        raise InputError('expected a RiemannPoint, got %r' % (p,))
    if p.is_elliptic and not t.is_real():
        raise InputError('elliptic points need a real time vector')


def eval_W(t, p):
    """ Evaluate W (Benney), W_T (dToda) or the general-eps potential.

    Elliptic points evaluate through the real pair (a, b), so the result is
    real.
    """
    _check_pair(t, p)
    c = t.coefficients()
    table = numeric_coefficients(t.eps, p.a, p.b, len(c) - 1)
    total = 0
    for m, cm in enumerate(c):
        if cm != 0:
            total = total + cm * table[m]
    return total


class HPolynomial(object):
    """ h(l), the polynomial part of V(l)/((l-beta1)(l-beta2))^eps, with
    ascending coefficients. """

    def __init__(self, coeffs, eps, point, order):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)
        self._eps = eps
        self._point = point
        self._order = order

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def eps(self):
        return self._eps

    @property
    def point(self):
        return self._point

    @property
    def order(self):
        return self._order

    @property
    def degree(self):
        return len(self._coeffs) - 1

    def __call__(self, lam):
        total = 0
        for coefficient in reversed(self._coeffs):
            total = total * lam + coefficient
        return total

    def taylor(self, center, count=None):
        if count is None:
            count = len(self._coeffs)
        return taylor_coefficients(self._coeffs, center, count)

    def action_series(self, order=None):
        """ Laurent coefficients of S(l) = l h(l) (1 - 2a/l + b/l^2)^eps,
        as {power: coefficient} for the top ``order + 1`` powers. The
        positive powers reproduce the effective coefficients c_m. """
        if order is None:
            order = self._order
        if not self._coeffs:
            return {}
        point = self._point
        root = numeric_coefficients(-self._eps, point.a, point.b, order)
        top = self.degree + 1
        series = {}
        for power in range(top, top - order - 1, -1):
            total = 0
            for d, hd in enumerate(self._coeffs):
                k = d + 1 - power
                if 0 <= k <= order:
                    total = total + hd * root[k]
            series[power] = total
        return series

    def __repr__(self):
        return '<HPolynomial %r>' % (self._coeffs,)


def default_order(t):
    return t.top + DEFAULT_EXTRA_ORDER


def h_polynomial(t, p, order=None, complex_ok=False):
    """ h for time vector ``t`` at point ``p``. """
    _check_pair(t, p)
    if p.is_elliptic and not complex_ok:
        raise InputError('h_polynomial at an elliptic point needs '
                         'complex_ok=True')
    c = t.coefficients()
    table = numeric_coefficients(t.eps, p.a, p.b, len(c) - 1)
    eps = t.eps if p.is_exact() and t.is_exact() else float(t.eps)
    return HPolynomial(h_coefficients(c, table), eps, p,
                       order if order is not None else default_order(t))


def _kernel(t, p):
    _check_pair(t, p)
    return Kernel(t.coefficients(), t.eps, p.beta1, p.beta2)


def derivative_tower(t, p, i, max_k, order=None):
    """ [d^k W / d beta_i^k for k = 1..max_k] at a hyperbolic point.

    The k-th entry is (eps)_k times the Taylor coefficient of order k-1 of h
    at beta_i; for eps = 1/2 the factor is (2k-1)!!/2^k.
    """
    if p.is_elliptic:
        raise InputError('derivative_tower expects a hyperbolic point')
    if order is None:
        order = default_order(t)
    if max_k < 1:
        raise InputError('max_k must be at least 1')
    if max_k > order:
        raise InputError('max_k = %d exceeds the truncation order %d' %
                         (max_k, order))
    p.invariant(i)
    return _kernel(t, p).tower(i, max_k)


def mixed_tower(t, p, i, max_k):
    """ [d_i^k d_j W for k = 0..max_k], j the other invariant. """
    p.invariant(i)
    return _kernel(t, p).mixed(i, max_k)


def char_speed(n, p, i, hierarchy=Hierarchy.BENNEY):
    """ Characteristic speed of the n-th flow for invariant i.

    Benney: (l^n / sqrt((l-beta1)(l-beta2)))_+ at l = beta_i. dToda: the
    same projection of l^(n+1) with the opposite index, relative to x_0.
    """
    hierarchy = Hierarchy(hierarchy)
    if hierarchy is Hierarchy.DTODA:
        if n < 0:
            raise InputError('dToda flow index must be >= 0')
        t = TimeVector.unit(n, hierarchy)
    else:
        if n < 1:
            raise InputError('Benney flow index must be >= 1')
        t = TimeVector.unit(n, Hierarchy.BENNEY)
    hp = h_polynomial(t, p)
    return hp(p.invariant(i))


def times_for_h(h, point, hierarchy=Hierarchy.BENNEY, eps=None):
    """ The unique time vector whose h at ``point`` has the given ascending
    coefficients (or HPolynomial). """
    if isinstance(h, HPolynomial):
        h = h.coeffs
    h = [as_exact(v) for v in h]
    while h and h[-1] == 0:
        h.pop()
    hierarchy = Hierarchy(hierarchy)
    if hierarchy is Hierarchy.BENNEY:
        index = Fraction(1, 2)
    elif hierarchy is Hierarchy.DTODA:
        index = Fraction(-1, 2)
    else:
        index = as_rational(eps)
    degree = len(h) - 1
    top = degree + 1
    table = numeric_coefficients(index, point.a, point.b, max(top, 1))
    c = [0] * (top + 1)
    for d in range(degree, -1, -1):
        total = h[d]
        for m in range(d + 2, top + 1):
            total = total - c[m] * table[m - 1 - d]
        c[d + 1] = total
    return TimeVector(c[1:], hierarchy, eps)


def _substituted(t, a_image, b_image, variables):
    c = t.coefficients()
    symbolic = _symbolic_coefficients(t.eps, max(len(c) - 1, 1))
    images = {'a': a_image, 'b': b_image}
    total = Polynomial(None, variables)
    for m, cm in enumerate(c):
        if cm != 0:
            total = total + symbolic[m].substitute(images, variables) * cm
    return total


def xy_form(t):
    """ W as a polynomial in X = (beta1+beta2)/2 and Y = (beta1-beta2)/2. """
    variables = ('X', 'Y')
    X = Polynomial.variable('X', variables)
    Y = Polynomial.variable('Y', variables)
    return _substituted(t, X, X * X - Y * Y, variables)


def invariant_form(t, variables=('x', 'y')):
    """ W as a polynomial in the invariants themselves. """
    x = Polynomial.variable(variables[0], variables)
    y = Polynomial.variable(variables[1], variables)
    return _substituted(t, (x + y) * Fraction(1, 2), x * y, variables)


def uv_form(t):
    """ W at beta = U + iV, beta2 = conj(beta), as a polynomial in (U, V). """
    variables = ('U', 'V')
    U = Polynomial.variable('U', variables)
    V = Polynomial.variable('V', variables)
    return _substituted(t, U, U * U + V * V, variables)


def dtoda_from_benney_times(t, T=0):
    """ dToda vector identified with Benney times: x_0 = -2T, x_n = n t_n. """
    if t.hierarchy is not Hierarchy.BENNEY:
        raise InputError('expected Benney times')
    values = [-2 * as_exact(T)]
    values.extend(n * t[n] for n in range(1, t.N + 1))
    return TimeVector(values, Hierarchy.DTODA)
