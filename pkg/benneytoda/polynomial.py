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

from fractions import Fraction
import numbers


def as_exact(value):
    """ Convert ints and strings such as '1/2' to a Fraction. Floats and
    complex numbers are returned untouched. """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (numbers.Integral, str)):
        return Fraction(value)
    return value


def is_exact(value):
    return isinstance(value, (Fraction, numbers.Integral))


class Polynomial(object):
    """ A sparse polynomial in a fixed tuple of named variables.

    Terms are stored as a dict mapping exponent tuples to coefficients. The
    coefficients can be any number type; the exact backend uses Fraction
    throughout so that identities come out as the literal zero polynomial.

    >>> x, y = Polynomial.variable('x'), Polynomial.variable('y')
    >>> str((x - y) ** 2)
    'x^2 - 2*x*y + y^2'

    """

    def __init__(self, terms=None, variables=('x', 'y')):
        self._variables = tuple(variables)
        self._terms = {}
        if terms:
            for exponents, coefficient in terms.items():
                exponents = tuple(exponents)
                assert len(exponents) == len(self._variables)
                if coefficient != 0:
                    self._terms[exponents] = coefficient

    @classmethod
    def constant(cls, value, variables=('x', 'y')):
        return cls({(0,) * len(variables): as_exact(value)}, variables)

    @classmethod
    def variable(cls, name, variables=('x', 'y')):
        exponents = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise KeyError('unknown variable: ' + name)
        return cls({exponents: Fraction(1)}, variables)

    @property
    def variables(self):
        return self._variables

    def terms(self):
        """ Return (exponents, coefficient) pairs in a deterministic order. """
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, exponents):
        return self._terms.get(tuple(exponents), 0)

    def is_zero(self):
        return not self._terms

    def degree(self, var=None):
        """ Total degree, or the degree in a single variable. """
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e) for e in self._terms)
        index = self._variables.index(var)
        return max(e[index] for e in self._terms)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other._variables != self._variables:
                raise ValueError('variable mismatch')
            return other
        return Polynomial.constant(other, self._variables)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for exponents, coefficient in other._terms.items():
            terms[exponents] = terms.get(exponents, 0) + coefficient
        return Polynomial(terms, self._variables)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(dict((e, -c) for e, c in self._terms.items()),
                          self._variables)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            other = as_exact(other)
            return Polynomial(dict((e, c * other)
                                   for e, c in self._terms.items()),
                              self._variables)
        other = self._coerce(other)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponents = tuple(a + b for a, b in zip(e1, e2))
                terms[exponents] = terms.get(exponents, 0) + c1 * c2
        return Polynomial(terms, self._variables)

    __rmul__ = __mul__

    def __pow__(self, power):
        assert isinstance(power, int) and power >= 0
        result = Polynomial.constant(1, self._variables)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self._variables)
        return (self._variables == other._variables and
                (self - other).is_zero())

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def diff(self, var):
        """ Partial derivative with respect to ``var``. """
        index = self._variables.index(var)
        terms = {}
        for exponents, coefficient in self._terms.items():
            power = exponents[index]
            if power == 0:
                continue
            lowered = list(exponents)
            lowered[index] = power - 1
            terms[tuple(lowered)] = coefficient * power
        return Polynomial(terms, self._variables)

    def evaluate(self, **values):
        """ Evaluate at numeric values for every variable. """
        point = [values[v] for v in self._variables]
        total = 0
        for exponents, coefficient in self._terms.items():
            term = coefficient
            for value, power in zip(point, exponents):
                if power:
                    term = term * value ** power
            total = total + term
        return total

    def substitute(self, mapping, variables):
        """ Replace every variable by a Polynomial in ``variables``. """
        images = [mapping[v] for v in self._variables]
        powers = [dict() for _ in images]
        result = Polynomial(None, variables)
        for exponents, coefficient in self._terms.items():
            term = Polynomial.constant(1, variables) * coefficient
            for index, power in enumerate(exponents):
                if power == 0:
                    continue
                if power not in powers[index]:
                    powers[index][power] = images[index] ** power
                term = term * powers[index][power]
            result = result + term
        return result

    def coefficients_in(self, var):
        """ Split into a list of coefficients of var^0, var^1, ... each a
        Polynomial in the same variables (not containing var). """
        index = self._variables.index(var)
        parts = [dict() for _ in range(max(self.degree(var), 0) + 1)]
        for exponents, coefficient in self._terms.items():
            lowered = list(exponents)
            lowered[index] = 0
            parts[exponents[index]][tuple(lowered)] = coefficient
        return [Polynomial(p, self._variables) for p in parts]

    def __str__(self):
        if not self._terms:
            return '0'
        pieces = []
        for exponents, coefficient in self.terms():
            factors = []
            for var, power in zip(self._variables, exponents):
                if power == 1:
                    factors.append(var)
                elif power > 1:
                    factors.append('%s^%d' % (var, power))
            sign = '-' if coefficient < 0 else '+'
            magnitude = abs(coefficient)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = '*'.join(factors)
            else:
                body = str(magnitude) + '*' + '*'.join(factors)
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in pieces[1:]:
            text += ' %s %s' % (sign, body)
        return text

    def __repr__(self):
        return '<Polynomial ' + str(self) + '>'
