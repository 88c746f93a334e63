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

import math
import sys
import unittest
from fractions import Fraction

from benneytoda.common import BadArity, InputError, RealCollapse
from benneytoda.elliptic import (ELLIPTIC_REGULAR, EllipticSystem, SingN,
                                 chart_derivatives, classify_elliptic,
                                 eval_W_chart, eval_W_uv, find_catastrophe,
                                 solve_elliptic, umbilic_conditions_hold,
                                 umbilic_report)
from benneytoda.hodograph import cubic_closed_form
from benneytoda.newton import NewtonOptions
from benneytoda.series import TimeVector, invariant_form


class TestPotential(unittest.TestCase):

    def setUp(self):
        super(TestPotential, self).setUp()
        self.t = TimeVector([0.3, -0.2, 0.5, 0.1, 0.7])

    def test_real_on_conjugate_pairs(self):
        W = invariant_form(self.t)
        beta = complex(0.3, 0.7)
        value = W.evaluate(x=beta, y=beta.conjugate())
        self.assertAlmostEqual(complex(value).imag, 0.0, places=12)
        self.assertAlmostEqual(complex(value).real,
                               eval_W_uv(self.t, 0.3, 0.7), places=12)

    def test_diagonal(self):
        t = TimeVector.from_mapping({'x': 1, 't2': '1/2', 't4': 3})
        U = Fraction(1, 3)
        expected = invariant_form(t).evaluate(x=U, y=U)
        self.assertEqual(eval_W_uv(t, U, 0), expected)

    def test_chart_matches_differences(self):
        beta = complex(0.3, 0.7)
        u, v = -2 * beta.real, -beta.imag ** 2
        chart = chart_derivatives(self.t, beta)
        h = 1e-4

        def W(du, dv):
            return eval_W_chart(self.t, u + du, v + dv)

        self.assertAlmostEqual(chart['W_u'], (W(h, 0) - W(-h, 0)) / (2 * h),
                               places=6)
        self.assertAlmostEqual(chart['W_v'], (W(0, h) - W(0, -h)) / (2 * h),
                               places=6)
        self.assertAlmostEqual(chart['W_uu'],
                               (W(h, 0) - 2 * W(0, 0) + W(-h, 0)) / h ** 2,
                               places=4)
        self.assertAlmostEqual(chart['W_vv'],
                               (W(0, h) - 2 * W(0, 0) + W(0, -h)) / h ** 2,
                               places=4)
        self.assertAlmostEqual(eval_W_chart(self.t, u, v),
                               eval_W_uv(self.t, beta.real, beta.imag),
                               places=12)

    def test_chart_epd(self):
        for beta in (complex(0.3, 0.7), complex(-1.2, 0.4)):
            chart = chart_derivatives(self.t, beta)
            v = -beta.imag ** 2
            residual = chart['W_uu'] - v * chart['W_vv'] - chart['W_v']
            self.assertAlmostEqual(residual, 0.0, places=9)
        with self.assertRaises(InputError):
            chart_derivatives(self.t, 0.5)


class TestEllipticSolve(unittest.TestCase):

    def setUp(self):
        super(TestEllipticSolve, self).setUp()
        self.t = TimeVector.from_mapping({'x': 1, 't3': 1})

    def test_oracle(self):
        point = solve_elliptic(self.t, complex(0.1, 0.7))
        self.assertAlmostEqual(point.U, 0.0, places=10)
        self.assertAlmostEqual(point.V, math.sqrt(2.0 / 3), places=10)
        self.assertEqual(point.sector, ELLIPTIC_REGULAR)
        self.assertLess(point.diagnostics['imag_W'], 1e-10)
        mirror = cubic_closed_form(1, 0, 1)
        self.assertAlmostEqual(abs(mirror.beta1 - point.beta), 0.0,
                               places=10)
        self.assertEqual(point.to_record()['sector'], 'regular')

    def test_lower_half_plane_seed(self):
        point = solve_elliptic(self.t, complex(-0.1, -0.7))
        self.assertGreater(point.V, 0)

    def test_reduced_epd_on_solutions(self):
        point = solve_elliptic(self.t, complex(0.1, 0.7))
        chart = chart_derivatives(point.t, point.beta)
        v = -point.V ** 2
        self.assertAlmostEqual(chart['W_v'], 0.0, places=9)
        self.assertAlmostEqual(chart['W_uu'] - v * chart['W_vv'], 0.0,
                               places=8)
        self.assertFalse(umbilic_conditions_hold(point.t, point.beta))

    def test_real_collapse(self):
        t = TimeVector.from_mapping({'x': -1, 't3': 1})
        with self.assertRaises(RealCollapse):
            solve_elliptic(t, complex(0.5, 0.1))

    def test_real_seed(self):
        with self.assertRaises(InputError):
            solve_elliptic(self.t, 0.5)

    def test_classify(self):
        beta = complex(0, math.sqrt(2.0 / 3))
        self.assertEqual(classify_elliptic(self.t, beta), SingN(0))
        self.assertEqual(str(SingN(2)), 'sing2')


class TestCatastrophe(unittest.TestCase):

    def test_oracle(self):
        t = TimeVector.from_mapping({'t3': 1, 't5': 1})
        point = find_catastrophe(t, seed=complex(0.05, 0.6))
        self.assertEqual(point.sector, SingN(1))
        self.assertAlmostEqual(point.U, 0.0, places=9)
        self.assertAlmostEqual(point.V, math.sqrt(2.0 / 5), places=9)
        self.assertAlmostEqual(float(point.t[1]), 0.3, places=9)
        self.assertAlmostEqual(float(point.t[2]), 0.0, places=9)
        for name in ('W_uu', 'W_uv', 'W_vv'):
            self.assertLess(point.diagnostics[name], 1e-8)
        self.assertGreater(point.diagnostics['d3_beta'], 1e-3)
        self.assertTrue(umbilic_conditions_hold(point.t, point.beta))

    def test_scaling(self):
        t = TimeVector.from_mapping({'t3': 2, 't5': 2})
        point = find_catastrophe(t, seed=complex(0.05, 0.6))
        self.assertAlmostEqual(float(point.t[1]), 0.6, places=9)
        self.assertAlmostEqual(point.V, math.sqrt(2.0 / 5), places=9)

    def test_arity(self):
        t = TimeVector.from_mapping({'t3': 1, 't5': 1})
        with self.assertRaises(BadArity):
            find_catastrophe(t, slots=('x',))
        with self.assertRaises(BadArity):
            EllipticSystem(t, 1, ['x'], 1j, NewtonOptions())

    def test_system_size(self):
        t = TimeVector.from_mapping({'t3': 1, 't5': 1})
        system = EllipticSystem(t, 1, ['x', 't2'], complex(0.3, 0.6),
                                NewtonOptions())
        F, J = system(system.initial())
        self.assertEqual(F.shape, (4,))
        self.assertEqual(J.shape, (4, 4))


class TestUmbilicReport(unittest.TestCase):

    def test_forms(self):
        entries = umbilic_report()
        self.assertEqual(len(entries), 10)
        mismatched = [(e['form'], e['slot']) for e in entries
                      if not e['match']]
        self.assertEqual(mismatched, [('benney-display', 't2')])

if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromModule(sys.modules[__name__])
    unittest.TextTestRunner(verbosity=3).run(suite)
