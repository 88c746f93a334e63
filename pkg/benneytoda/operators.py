# Exact checks of the Euler-Poisson-Darboux operator identities.
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

""" L_eps = d_x d_y - eps/(x - y) (d_x - d_y) acting on p(x, y)/(x - y)^m.

All arithmetic is over Fraction, so every identity check returns the
literal zero element or a nonzero residual. """

from fractions import Fraction

from .polynomial import Polynomial
from .series import as_rational, coeff_table

VARIABLES = ('x', 'y')


def _x():
    return Polynomial.variable('x', VARIABLES)


def _y():
    return Polynomial.variable('y', VARIABLES)


def _divide_by_difference(p):
    """ (quotient, exact) of p / (x - y), by synthetic division in x with
    root y. """
    parts = p.coefficients_in('x')
    y = _y()
    degree = len(parts) - 1
    if degree == 0:
        return None, p.is_zero()
    quotient = [None] * degree
    acc = Polynomial(None, VARIABLES)
    for j in range(degree, 0, -1):
        acc = acc * y + parts[j]
        quotient[j - 1] = acc
    remainder = acc * y + parts[0]
    if not remainder.is_zero():
        return None, False
    x = _x()
    result = Polynomial(None, VARIABLES)
    power = Polynomial.constant(1, VARIABLES)
    for q in quotient:
        result = result + q * power
        power = power * x
    return result, True


class RationalXY(object):
    """ numerator / (x - y)^m with the numerator not divisible by (x - y)
    unless m = 0.

    >>> f = RationalXY(_x() * _x() - _y() * _y(), 1)
    >>> str(f.numerator), f.denom_power
    ('x + y', 0)

    """

    def __init__(self, numerator, denom_power=0):
        if not isinstance(numerator, Polynomial):
            numerator = Polynomial.constant(numerator, VARIABLES)
        if denom_power < 0:
            numerator = numerator * (_x() - _y()) ** (-denom_power)
            denom_power = 0
        while denom_power > 0 and not numerator.is_zero():
            quotient, exact = _divide_by_difference(numerator)
            if not exact:
                break
            numerator = quotient
            denom_power -= 1
        if numerator.is_zero():
            denom_power = 0
        self._numerator = numerator
        self._power = denom_power

    @classmethod
    def from_polynomial(cls, p):
        return cls(p, 0)

    @property
    def numerator(self):
        return self._numerator

    @property
    def denom_power(self):
        return self._power

    def is_zero(self):
        return self._numerator.is_zero()

    def _lift(self, power):
        """ Numerator over the larger denominator (x - y)^power. """
        return self._numerator * (_x() - _y()) ** (power - self._power)

    def __add__(self, other):
        other = _coerce(other)
        power = max(self._power, other._power)
        return RationalXY(self._lift(power) + other._lift(power), power)

    __radd__ = __add__

    def __neg__(self):
        return RationalXY(-self._numerator, self._power)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return RationalXY(self._numerator * other._numerator,
                          self._power + other._power)

    __rmul__ = __mul__

    def over_difference(self, times=1):
        """ Multiply by 1/(x - y)^times. """
        return RationalXY(self._numerator, self._power + times)

    def diff(self, var):
        """ d/dx (p/(x-y)^m) = ((x-y) p_x - m p)/(x-y)^(m+1); d/dy has +m. """
        p, m = self._numerator, self._power
        if m == 0:
            return RationalXY(p.diff(var), 0)
        sign = -1 if var == 'x' else 1
        numerator = (_x() - _y()) * p.diff(var) + p * (sign * m)
        return RationalXY(numerator, m + 1)

    def evaluate(self, x, y):
        return self._numerator.evaluate(x=x, y=y) / (x - y) ** self._power

    def __eq__(self, other):
        other = _coerce(other)
        return (self._power == other._power and
                self._numerator == other._numerator)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __str__(self):
        if self._power == 0:
            return str(self._numerator)
        return '(%s)/(x - y)^%d' % (self._numerator, self._power)

    def __repr__(self):
        return '<RationalXY %s>' % self


def _coerce(value):
    if isinstance(value, RationalXY):
        return value
    return RationalXY(value, 0)


def apply_L(eps, f):
    """ L_eps f = f_xy - eps/(x - y) (f_x - f_y). """
    eps = as_rational(eps)
    f = _coerce(f)
    fx, fy = f.diff('x'), f.diff('y')
    return fx.diff('y') - (fx - fy).over_difference() * eps


def apply_L_tilde(eps, f):
    """ (x - y) L_eps f. """
    return apply_L(eps, f) * RationalXY(_x() - _y(), 0)


def check_commutation(eps, mu, f):
    """ L_{eps+1} L_mu f - L_{mu+1} L_eps f; zero for every f. """
    eps, mu = as_rational(eps), as_rational(mu)
    return apply_L(eps + 1, apply_L(mu, f)) - apply_L(mu + 1, apply_L(eps, f))


def gegenbauer_xy(eps, n):
    """ C_n^eps in the invariants (x, y); zero for n < 0. """
    if n < 0:
        return RationalXY(0)
    table = coeff_table(eps, order=n)
    return RationalXY(table.in_invariants(VARIABLES)[n], 0)


def check_index_shift(eps, mu, n):
    """ L_{eps+1}(L_mu C_n^eps); zero because L_mu maps solutions of the
    index eps equation to solutions of the index eps + 1 equation. """
    eps, mu = as_rational(eps), as_rational(mu)
    if n < 0:
        raise ValueError('n must be non-negative')
    return apply_L(eps + 1, apply_L(mu, gegenbauer_xy(eps, n)))


def index_shift_residual(eps, mu, n):
    """ L_mu C_n^eps - eps (eps - mu) C_{n-2}^{eps+1}.

    The generating function ((1 - xw)(1 - yw))^(-eps) satisfies
    L_mu G = eps (eps - mu) w^2 G^(eps+1), which pins the normalization of
    the right hand side; the residual is exactly zero.
    """
    eps, mu = as_rational(eps), as_rational(mu)
    shifted = gegenbauer_xy(eps + 1, n - 2) * (eps * (eps - mu))
    return apply_L(mu, gegenbauer_xy(eps, n)) - shifted


def check_tilde_duality(f):
    """ d_x d_y ((x - y) L_{-1/2} f) - (x - y) L_{1/2} (d_x d_y f). """
    f = _coerce(f)
    half = Fraction(1, 2)
    left = apply_L_tilde(-half, f).diff('x').diff('y')
    right = apply_L_tilde(half, f.diff('x').diff('y'))
    return left - right


def check_epd(eps, n):
    """ L_eps C_n^eps, zero for every n. """
    return apply_L(eps, gegenbauer_xy(eps, n))


def random_rational_xy(rng, max_degree=6, max_power=3, max_terms=6):
    """ A RationalXY with small rational coefficients drawn from the
    ``random.Random`` instance ``rng``. """
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        i = rng.randint(0, max_degree)
        j = rng.randint(0, max_degree - i)
        terms[i, j] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return RationalXY(Polynomial(terms, VARIABLES), rng.randint(0, max_power))


HALF_INTEGER_GRID = tuple(Fraction(k, 2) for k in range(-3, 4))
