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

from benneytoda.common import (BadArity, Collapse, InputError,
                               RadicandNegative, ToleranceAmbiguity)
from benneytoda.hodograph import (REGULAR, SingularClass, classify,
                                  compare_section3, cubic_closed_form,
                                  default_unknowns, formula_residual,
                                  section3_branches, solve_regular,
                                  solve_singular, solve_singular_all,
                                  trace_locus)
from benneytoda.newton import NewtonOptions
from benneytoda.series import RiemannPoint, TimeVector, times_for_h

from tests.utils import cubic_instance, poly_from_roots, singular_instance


class TestSingularClass(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(SingularClass.parse('regular'), REGULAR)
        self.assertEqual(SingularClass.parse('1,0'), SingularClass(1, 0))
        self.assertEqual(SingularClass.parse('sing(0,2)'), SingularClass(0, 2))
        self.assertEqual(str(SingularClass(2, 1)), 'sing(2,1)')
        self.assertEqual(SingularClass(2, 1).codimension, 3)
        self.assertEqual(SingularClass(2, 1).swapped(), SingularClass(1, 2))
        with self.assertRaises(InputError):
            SingularClass.parse('1')
        with self.assertRaises(InputError):
            SingularClass.parse('-1,0')


class TestRegular(unittest.TestCase):

    def test_cubic_oracle(self):
        rng = random.Random(3)
        for _ in range(20):
            t, beta1, beta2 = cubic_instance(rng)
            seed = RiemannPoint(beta1 + 0.05, beta2 - 0.05)
            hp = solve_regular(t, seed)
            self.assertEqual(hp.sector, REGULAR)
            self.assertAlmostEqual(hp.point.beta1, beta1, delta=1e-10)
            self.assertAlmostEqual(hp.point.beta2, beta2, delta=1e-10)
            self.assertLess(hp.offdiag, 1e-9)
            closed = cubic_closed_form(t[1], t[2], t[3])
            self.assertAlmostEqual(closed.beta1, beta1, delta=1e-10)
            self.assertAlmostEqual(closed.beta2, beta2, delta=1e-10)

    def test_collapse(self):
        t = TimeVector.from_mapping({'x': 1, 't2': 1})
        with self.assertRaises(Collapse):
            solve_regular(t, RiemannPoint(1, -2))

    def test_closed_form_edges(self):
        with self.assertRaises(InputError):
            cubic_closed_form(1, 0, 0)
        with self.assertRaises(Collapse):
            cubic_closed_form(0, 0, 1)
        p = cubic_closed_form(1, 0, 1)
        self.assertTrue(p.is_elliptic)
        self.assertAlmostEqual(p.beta1.imag, (2.0 / 3) ** 0.5, places=12)

    def test_elliptic_seed_rejected(self):
        t = TimeVector.from_mapping({'x': 1, 't3': 1})
        with self.assertRaises(InputError):
            solve_regular(t, RiemannPoint.elliptic(1j))


class TestClassify(unittest.TestCase):

    def test_round_trip(self):
        for n1 in range(4):
            for n2 in range(4 - n1):
                t, point = singular_instance(n1, n2)
                self.assertEqual(classify(t, point), SingularClass(n1, n2))
                scaled = TimeVector([3 * v for v in t.values])
                self.assertEqual(classify(scaled, point),
                                 SingularClass(n1, n2))

    def test_tolerance_band(self):
        delta = Fraction(5, 10 ** 9)
        point = RiemannPoint(1, -2)
        t = times_for_h(poly_from_roots([1, -2, 1 + delta]), point)
        with self.assertRaises(ToleranceAmbiguity):
            classify(t, point)


class TestSingular(unittest.TestCase):

    def test_solve_round_trip(self):
        t, point = singular_instance(1, 0)
        x = float(t[1])
        start = t.to_float().with_values({'x': x + 0.01})
        seed = RiemannPoint(1.02, -1.97)
        hp = solve_singular(start, '1,0', ['x', 'beta1', 'beta2'], seed)
        self.assertEqual(hp.sector, SingularClass(1, 0))
        self.assertAlmostEqual(hp.point.beta1, 1.0, delta=1e-9)
        self.assertAlmostEqual(hp.point.beta2, -2.0, delta=1e-9)
        self.assertAlmostEqual(hp.value('x'), x, delta=1e-9)
        self.assertEqual(hp.to_record()['sector'], 'sing(1,0)')

    def test_mirror_class(self):
        t, point = singular_instance(0, 1, beta1=2, beta2=-1)
        x = float(t[1])
        start = t.to_float().with_values({'x': x - 0.01})
        hp = solve_singular(start, '0,1', ['x', 'beta1', 'beta2'],
                            RiemannPoint(2.02, -0.98))
        self.assertEqual(hp.sector, SingularClass(0, 1))
        self.assertAlmostEqual(hp.point.beta2, -1.0, delta=1e-9)
        self.assertAlmostEqual(hp.value('x'), x, delta=1e-9)

    def test_round_trip_every_class(self):
        for n1 in range(4):
            for n2 in range(4 - n1):
                sector = SingularClass(n1, n2)
                if sector.is_regular:
                    continue
                t, point = singular_instance(n1, n2)
                unknowns = default_unknowns(sector, t, ())
                start = t.to_float().with_values(
                    dict((name, float(t[t.index_of(name)]) + 1e-3)
                         for name in unknowns if not name.startswith('beta')))
                seed = RiemannPoint(1.002, -1.998)
                hp = solve_singular(start, sector, unknowns, seed)
                self.assertEqual(hp.sector, sector)
                self.assertEqual(classify(hp.t, hp.point), sector)
                self.assertAlmostEqual(hp.point.beta1, 1.0, delta=1e-8)
                self.assertAlmostEqual(hp.point.beta2, -2.0, delta=1e-8)

    def test_no_points_on_the_diagonal(self):
        t = TimeVector([0, -1.807, -0.316, 1.922])
        for sector in ('1,0', '0,1'):
            for hp in solve_singular_all(t, sector, ['x', 'beta1', 'beta2']):
                size = max(1.0, abs(hp.point.beta1), abs(hp.point.beta2))
                self.assertGreater(abs(hp.point.beta1 - hp.point.beta2),
                                   1e-6 * size)

    def test_converged_gap_collapses(self):
        options = NewtonOptions(gap_tol=10.0)
        t, point = singular_instance(1, 0)
        with self.assertRaises(Collapse):
            solve_singular(t, '1,0', ['x', 'beta1', 'beta2'], point, options)

    def test_arity(self):
        t, point = singular_instance(1, 0)
        with self.assertRaises(BadArity):
            solve_singular(t, '1,0', ['beta1', 'beta2'], point)
        with self.assertRaises(BadArity):
            solve_singular(t, '1,0', ['x', 'x', 'beta1'], point)

    def test_default_unknowns(self):
        t = TimeVector([0, -1, 0, 1])
        self.assertEqual(default_unknowns('1,0', t, ('t2', 't3')),
                         ['x', 'beta1', 'beta2'])
        self.assertEqual(default_unknowns('1,1', t, ('x', 't3')),
                         ['t2', 't4', 'beta1', 'beta2'])

    def test_trace_locus(self):
        t = TimeVector([0, -1, 0, 1])
        locus = trace_locus('1,0', t, ('t2', 't3'),
                            [[-1.0, -0.95], [0.0, 0.05]])
        self.assertEqual(len(locus.converged), 4)
        for sample in locus.converged:
            self.assertEqual(sample.point.sector, SingularClass(1, 0))
            self.assertEqual(len(sample.to_row()), 9)
        with self.assertRaises(InputError):
            trace_locus('1,0', t, ('t2',), [[-1.0, -0.95]])


class TestSection3(unittest.TestCase):

    def test_printed_forms(self):
        report = compare_section3(-1, 0, 1)
        self.assertFalse(report.merged)
        self.assertEqual(report.discrepancies, [1])
        self.assertTrue(report.all_corrected_match())
        item1 = section3_branches(-1, 0, 1, corrected=True)[0]
        self.assertAlmostEqual(item1['beta1'], -0.547723, places=6)
        self.assertAlmostEqual(item1['beta2'], 0.912871, places=6)
        self.assertAlmostEqual(item1['x'], -0.243432, places=6)

    def test_misprints_away_from_t3_zero(self):
        rng = random.Random(7)
        for _ in range(10):
            t4 = rng.choice([-1, 1]) * rng.uniform(1.0, 2.0)
            t3 = rng.choice([-1, 1]) * rng.uniform(0.2, 0.8)
            t2 = 3 * t3 * t3 * (1 - rng.uniform(1.2, 3.0)) / (8 * t4)
            report = compare_section3(t2, t3, t4)
            self.assertFalse(report.merged)
            self.assertEqual(report.discrepancies, [1, 2])
            self.assertTrue(report.all_corrected_match())
            for entry in report.entries:
                self.assertLess(entry['corrected_residual'], 1e-10)

    def test_branches_missed_by_the_scan(self):
        for t2, t3, t4 in [(-1.807, -0.316, 1.922), (1.905, -0.31, -1.366)]:
            report = compare_section3(t2, t3, t4)
            self.assertTrue(report.all_corrected_match())
            self.assertEqual(report.discrepancies, [1, 2])
            for entry in report.entries:
                self.assertLess(entry['corrected_error'], 1e-8)

    def test_merged_branches(self):
        report = compare_section3(0, 0, 1)
        self.assertTrue(report.merged)
        self.assertEqual(report.solver_outcome, 'collapse')
        self.assertEqual(report.discrepancies, [])
        self.assertTrue(report.all_corrected_match())
        for entry in report.entries:
            self.assertEqual(entry['corrected'][1], entry['corrected'][2])
        record = report.to_record()
        self.assertEqual(record['solver_outcome'], 'collapse')
        self.assertEqual(formula_residual(TimeVector([0, 0, 0, 1]),
                                          section3_branches(0, 0, 1)[0]),
                         float('inf'))

    def test_bad_times(self):
        with self.assertRaises(RadicandNegative):
            compare_section3(1, 0, 1)
        with self.assertRaises(InputError):
            compare_section3(-1, 0, 0)

if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromModule(sys.modules[__name__])
    unittest.TextTestRunner(verbosity=3).run(suite)
