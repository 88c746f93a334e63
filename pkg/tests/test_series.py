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

import random
import sys
import unittest
from fractions import Fraction

from benneytoda.common import InputError
from benneytoda.polynomial import Polynomial
from benneytoda.series import (Backend, Hierarchy, RiemannPoint, TimeVector,
                               char_speed, coeff_table, derivative_tower,
                               dtoda_from_benney_times, eval_W,
                               h_polynomial, invariant_form, mixed_tower,
                               numeric_coefficients, times_for_h, uv_map,
                               uv_unmap, xy_form)

XY = ('x', 'y')


def _xy():
    return Polynomial.variable('x', XY), Polynomial.variable('y', XY)


class TestTimeVector(unittest.TestCase):

    def test_trailing_zeros(self):
        t = TimeVector([1, 0, 2, 0, 0])
        self.assertEqual(t.N, 3)
        self.assertEqual(t[5], 0)
        self.assertEqual(t.values, (1, 0, 2))
        self.assertEqual(TimeVector([0, 0]).N, 1)

    def test_from_mapping(self):
        t = TimeVector.from_mapping({'x': 1, 't3': '1/2'})
        self.assertEqual(t[1], 1)
        self.assertEqual(t[2], 0)
        self.assertEqual(t[3], Fraction(1, 2))
        self.assertEqual(t.as_dict(), {'x': 1, 't2': 0, 't3': Fraction(1, 2)})
        d = TimeVector.from_mapping({'x0': 2, 'x2': 1}, Hierarchy.DTODA)
        self.assertEqual(d.first_index, 0)
        self.assertEqual(d[0], 2)
        self.assertEqual(d.coefficients(), [0, 2, 0, 1])

    def test_bad_slots(self):
        with self.assertRaises(InputError):
            TimeVector.from_mapping({'y': 1})
        with self.assertRaises(InputError):
            TimeVector.from_mapping({'t0': 1})
        with self.assertRaises(InputError):
            TimeVector.from_mapping({'t2': 1}, Hierarchy.DTODA)
        with self.assertRaises(InputError):
            TimeVector([1], Hierarchy.GENERAL)
        with self.assertRaises(InputError):
            TimeVector([1], Hierarchy.BENNEY, eps='1/2')

    def test_with_values(self):
        t = TimeVector.from_mapping({'t3': 1})
        u = t.with_values({'x': Fraction(3), 't5': 1})
        self.assertEqual(u[1], 3)
        self.assertEqual(u[5], 1)
        self.assertEqual(t[1], 0)

    def test_dtoda_from_benney_times(self):
        t = TimeVector.from_mapping({'x': 1, 't2': 2})
        d = dtoda_from_benney_times(t, T=Fraction(1, 2))
        self.assertEqual(d.hierarchy, Hierarchy.DTODA)
        self.assertEqual([d[0], d[1], d[2]], [-1, 1, 4])


class TestRiemannPoint(unittest.TestCase):

    def test_hyperbolic(self):
        p = RiemannPoint(2, -1)
        self.assertEqual(p.a, Fraction(1, 2))
        self.assertEqual(p.b, -2)
        self.assertEqual(uv_map(p), (-1, Fraction(9, 4)))
        self.assertEqual(uv_unmap(-1, Fraction(9, 4)), p)
        with self.assertRaises(InputError):
            RiemannPoint(1, 1)
        with self.assertRaises(InputError):
            RiemannPoint(1j, 1)

    def test_elliptic(self):
        p = uv_unmap(0, -1)
        self.assertTrue(p.is_elliptic)
        self.assertEqual(p.beta1, 1j)
        self.assertEqual(p.beta2, -1j)
        self.assertEqual(p.a, 0)
        self.assertEqual(p.b, 1)
        self.assertEqual(p.v, -1)
        with self.assertRaises(InputError):
            uv_unmap(1, 0)


class TestCoefficients(unittest.TestCase):

    def test_benney_series(self):
        table = coeff_table('1/2', order=4)
        self.assertEqual(table.backend, Backend.EXACT)
        self.assertEqual([str(c) for c in table][:3],
                         ['1', 'a', '3/2*a^2 - 1/2*b'])
        c4 = table.in_invariants(XY)[4]
        expected = [35, 20, 18, 20, 35]
        for j, value in enumerate(expected):
            self.assertEqual(c4.coefficient((4 - j, j)), Fraction(value, 128))
        self.assertEqual(c4.degree(), 4)

    def test_dtoda_series(self):
        x, y = _xy()
        half = Fraction(1, 2)
        expected = {
            0: -(x + y) * half,
            1: -(x - y) ** 2 * Fraction(1, 8),
            2: -(x + y) * (x - y) ** 2 * Fraction(1, 16),
            3: -(5 * x * x + 6 * x * y + 5 * y * y) * (x - y) ** 2 *
            Fraction(1, 128),
        }
        for n, poly in expected.items():
            t = TimeVector.unit(n, Hierarchy.DTODA)
            self.assertEqual(invariant_form(t), poly)

    def test_dtoda_xy_form(self):
        variables = ('X', 'Y')
        X = Polynomial.variable('X', variables)
        Y = Polynomial.variable('Y', variables)
        t = TimeVector.from_mapping({'x0': 1, 'x1': 1, 'x2': 1, 'x3': 1},
                                    Hierarchy.DTODA)
        half = Fraction(1, 2)
        expected = (-X - Y * Y * half - X * Y * Y * half -
                    (4 * X * X + Y * Y) * Y * Y * Fraction(1, 8))
        self.assertEqual(xy_form(t), expected)

    def test_numeric_matches_symbolic(self):
        rng = random.Random(7)
        table = coeff_table('1/2', order=6)
        for _ in range(20):
            a = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            b = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            numeric = numeric_coefficients('1/2', a, b, 6)
            for k in range(7):
                self.assertEqual(numeric[k], table[k].evaluate(a=a, b=b))

    def test_negative_order(self):
        with self.assertRaises(InputError):
            coeff_table('1/2', order=-1)


class TestPotential(unittest.TestCase):

    def setUp(self):
        super(TestPotential, self).setUp()
        self.t = TimeVector.from_mapping({'x': 1, 't3': 1})
        self.p = RiemannPoint(2, -1)

    def test_eval_W(self):
        self.assertEqual(eval_W(self.t, self.p), Fraction(37, 16))
        x, y = _xy()
        W = invariant_form(self.t)
        self.assertEqual(W.evaluate(x=Fraction(2), y=Fraction(-1)),
                         Fraction(37, 16))

    def test_derivative_tower(self):
        tower = derivative_tower(self.t, self.p, 1, 2)
        self.assertEqual(tower[0], Fraction(59, 16))
        self.assertEqual(derivative_tower(self.t, self.p, 2, 1)[0],
                         Fraction(23, 16))
        W = invariant_form(self.t)
        d2 = W.diff('x').diff('x').evaluate(x=Fraction(2), y=Fraction(-1))
        self.assertEqual(tower[1], d2)
        with self.assertRaises(InputError):
            derivative_tower(self.t, self.p, 1, 50)
        with self.assertRaises(InputError):
            derivative_tower(self.t, self.p, 3, 1)

    def test_mixed_tower(self):
        W = invariant_form(self.t)
        mixed = mixed_tower(self.t, self.p, 1, 2)
        point = dict(x=Fraction(2), y=Fraction(-1))
        self.assertEqual(mixed[0], W.diff('y').evaluate(**point))
        self.assertEqual(mixed[1], W.diff('y').diff('x').evaluate(**point))
        self.assertEqual(mixed[2],
                         W.diff('y').diff('x').diff('x').evaluate(**point))

    def test_char_speed(self):
        self.assertEqual(char_speed(2, self.p, 1), Fraction(5, 2))
        self.assertEqual(char_speed(2, self.p, 2), Fraction(-1, 2))
        self.assertEqual(char_speed(1, self.p, 1), 1)
        self.assertEqual(char_speed(1, self.p, 1, Hierarchy.DTODA),
                         Fraction(3, 2))
        self.assertEqual(char_speed(1, self.p, 2, Hierarchy.DTODA),
                         Fraction(-3, 2))
        with self.assertRaises(InputError):
            char_speed(0, self.p, 1)

    def test_action_series(self):
        hp = h_polynomial(self.t, self.p)
        series = hp.action_series(4)
        self.assertEqual(series[3], 1)
        self.assertEqual(series[2], 0)
        self.assertEqual(series[1], 1)

    def test_times_for_h(self):
        hp = h_polynomial(self.t, self.p)
        self.assertEqual(times_for_h(hp, self.p), self.t)
        d = TimeVector.from_mapping({'x0': 1, 'x2': -2}, Hierarchy.DTODA)
        hd = h_polynomial(d, self.p)
        self.assertEqual(times_for_h(hd, self.p, Hierarchy.DTODA), d)

    def test_elliptic_h_needs_flag(self):
        p = RiemannPoint.elliptic(1j)
        with self.assertRaises(InputError):
            h_polynomial(self.t, p)
        hp = h_polynomial(self.t, p, complex_ok=True)
        self.assertEqual(hp.degree, 2)


class TestIdentitiesOnPoints(unittest.TestCase):

    def test_small_examples(self):
        t = TimeVector.from_mapping({'x': 1})
        self.assertEqual(eval_W(t, RiemannPoint(2, 4)), 3)
        self.assertEqual(h_polynomial(t, RiemannPoint(2, 4)).coeffs, (1,))
        d = TimeVector.from_mapping({'x0': 1, 'x1': 1}, Hierarchy.DTODA)
        self.assertEqual(eval_W(d, RiemannPoint(1, -1)), Fraction(-1, 2))
        t = TimeVector.from_mapping({'x': 1, 't2': 2})
        hp = h_polynomial(t, RiemannPoint(2, -1))
        self.assertEqual(hp.coeffs, (2, 2))
        self.assertEqual(uv_map(RiemannPoint(2, -2)), (0, 4))
        self.assertEqual(uv_map(RiemannPoint(3, 1)), (-4, 1))
        self.assertEqual(uv_unmap(-4, 1), RiemannPoint(3, 1))

    def test_epd_on_points(self):
        rng = random.Random(5)
        for hierarchy in (Hierarchy.BENNEY, Hierarchy.DTODA):
            eps = Fraction(1, 2) if hierarchy is Hierarchy.BENNEY else \
                Fraction(-1, 2)
            for _ in range(10):
                values = [Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                          for _ in range(rng.randint(2, 6))]
                values[-1] = values[-1] or Fraction(1)
                t = TimeVector(values, hierarchy)
                b1 = Fraction(rng.randint(1, 9), rng.randint(1, 4))
                b2 = -Fraction(rng.randint(1, 9), rng.randint(1, 4))
                p = RiemannPoint(b1, b2)
                W = invariant_form(t)
                w12 = W.diff('x').diff('y').evaluate(x=b1, y=b2)
                w1 = derivative_tower(t, p, 1, 1)[0]
                w2 = derivative_tower(t, p, 2, 1)[0]
                self.assertEqual((b1 - b2) * w12 - eps * (w1 - w2), 0)

    def test_tower_matches_differences(self):
        t = TimeVector([0.4, -0.3, 0.8, 0.2, -0.6])
        p = RiemannPoint(1.1, -0.7)
        h = 1e-5
        plus = eval_W(t, RiemannPoint(1.1 + h, -0.7))
        minus = eval_W(t, RiemannPoint(1.1 - h, -0.7))
        first = derivative_tower(t, p, 1, 1)[0]
        self.assertAlmostEqual(first, (plus - minus) / (2 * h), places=7)
        h = 1e-3
        center = eval_W(t, p)
        plus = eval_W(t, RiemannPoint(1.1, -0.7 + h))
        minus = eval_W(t, RiemannPoint(1.1, -0.7 - h))
        second = derivative_tower(t, p, 2, 2)[1]
        self.assertAlmostEqual(second, (plus - 2 * center + minus) / h ** 2,
                               places=5)

    def test_elliptic_values_are_real(self):
        rng = random.Random(9)
        for _ in range(100):
            t = TimeVector([rng.uniform(-1, 1) for _ in range(5)])
            beta = complex(rng.uniform(-2, 2), rng.uniform(0.1, 2))
            value = complex(invariant_form(t).evaluate(
                x=beta, y=beta.conjugate()))
            self.assertLess(abs(value.imag), 1e-12 * max(1.0, abs(value)))
            self.assertAlmostEqual(eval_W(t, RiemannPoint.elliptic(beta)),
                                   value.real, places=10)

if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromModule(sys.modules[__name__])
    unittest.TextTestRunner(verbosity=3).run(suite)
