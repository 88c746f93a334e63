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

import sys
import unittest

import numpy as np

from benneytoda.common import GridCrossesSingularity, InputError
from benneytoda.flows import (advance_slice, benney_flow_residual,
                              dtoda_flow_residual, flow_residual,
                              initial_data_slice)
from benneytoda.hodograph import cubic_closed_form
from benneytoda.series import Hierarchy, RiemannPoint, TimeVector


class TestBenneyFlows(unittest.TestCase):

    def setUp(self):
        super(TestBenneyFlows, self).setUp()
        self.base = TimeVector.from_mapping({'t3': 1})
        self.seed = cubic_closed_form(-2, 0, 1)

    def test_second_flow(self):
        report = benney_flow_residual(2, self.base, (-2.0, -1.0), (0.0, 0.2),
                                      seed=self.seed)
        self.assertEqual(len(report.samples), 9)
        self.assertEqual(report.time, 't2')
        self.assertTrue(report.hyperbolic)
        self.assertLess(report.max_residual, 1e-5)
        self.assertLess(report.max_uv, 1e-5)
        self.assertEqual(len(report.rows()[0]), len(report.COLUMNS))

    def test_second_order(self):
        report = benney_flow_residual(2, self.base, (-2.0, -1.0), (0.0, 0.2),
                                      step=0.02, seed=self.seed)
        self.assertGreaterEqual(report.order, 1.9)

    def test_first_flow_is_trivial(self):
        report = benney_flow_residual(1, self.base, (-2.0, -1.0), (0.0, 0.0),
                                      seed=self.seed)
        self.assertEqual(len(report.samples), 3)
        self.assertLess(report.max_residual, 1e-12)
        self.assertIsNone(report.order)
        self.assertIsNone(report.max_uv)

    def test_third_flow(self):
        report = benney_flow_residual(3, self.base, (-2.0, -1.0), (1.0, 1.2),
                                      seed=self.seed)
        self.assertEqual(report.time, 't3')
        self.assertLess(report.max_residual, 1e-5)

    def test_third_order(self):
        report = benney_flow_residual(3, self.base, (-2.0, -1.0), (1.0, 1.2),
                                      step=0.02, seed=self.seed)
        self.assertGreaterEqual(report.order, 1.9)

    def test_workers_keep_results(self):
        serial = benney_flow_residual(2, self.base, (-2.0, -1.0), (0.0, 0.2),
                                      num=2, seed=self.seed)
        parallel = benney_flow_residual(2, self.base, (-2.0, -1.0),
                                        (0.0, 0.2), num=2, seed=self.seed,
                                        jobs=2)
        self.assertEqual(serial.rows(), parallel.rows())

    def test_crossing_the_elliptic_region(self):
        with self.assertRaises(GridCrossesSingularity):
            benney_flow_residual(2, self.base, (-1.0, 1.0), (0.0, 0.2),
                                 seed=cubic_closed_form(-1, 0, 1))

    def test_bad_arguments(self):
        with self.assertRaises(InputError):
            benney_flow_residual(0, self.base, (-2.0, -1.0), (0.0, 0.2))
        with self.assertRaises(InputError):
            dtoda_flow_residual(1, self.base, (-2.0, -1.0), (0.0, 0.2))
        with self.assertRaises(InputError):
            flow_residual(self.base, 2, (-2.0, -1.0), (0.0, 0.2), num=0)


class TestDTodaFlows(unittest.TestCase):

    def setUp(self):
        super(TestDTodaFlows, self).setUp()
        self.base = TimeVector.from_mapping({'x0': -2, 'x2': 1},
                                            Hierarchy.DTODA)

    def test_first_flow(self):
        report = dtoda_flow_residual(1, self.base, (-2.5, -1.5), (0.0, 0.2),
                                     seed=RiemannPoint(2, -2))
        self.assertEqual((report.space, report.time), ('x0', 'x1'))
        self.assertLess(report.max_residual, 1e-5)
        self.assertLess(report.max_uv, 1e-5)

    def test_second_flow(self):
        report = dtoda_flow_residual(2, self.base, (-2.5, -1.5), (1.0, 1.2),
                                     seed=RiemannPoint(2, -2))
        self.assertLess(report.max_residual, 1e-5)
        self.assertIsNone(report.max_uv)
        first = report.samples[0]
        expected = np.sqrt(2 * 2.5 / 1.0)
        self.assertAlmostEqual(first.point.beta1, expected, places=9)
        self.assertAlmostEqual(first.point.beta2, -expected, places=9)

    def test_orders(self):
        for n, t_range in [(1, (0.0, 0.2)), (2, (1.0, 1.2))]:
            report = dtoda_flow_residual(n, self.base, (-2.5, -1.5), t_range,
                                         step=0.02, seed=RiemannPoint(2, -2))
            self.assertGreaterEqual(report.order, 1.9)


class TestInitialSlice(unittest.TestCase):

    def test_closed_form(self):
        xs = [-2.0, -1.5, -1.0]
        initial = initial_data_slice(1, 0, xs)
        for x, (b1, b2) in zip(xs, initial.betas()):
            self.assertAlmostEqual(b1 + b2, 0.0, places=10)
            self.assertAlmostEqual(b1 * b2, 2 * x / 3, places=10)
        self.assertEqual(len(initial.rows()), 3)

    def test_needs_seed(self):
        with self.assertRaises(InputError):
            initial_data_slice(1, 1, [-1.0])
        with self.assertRaises(GridCrossesSingularity):
            initial_data_slice(1, 0, [1.0])
        with self.assertRaises(InputError):
            initial_data_slice(1, 0, [])

    def test_advance(self):
        xs = list(np.linspace(-2.0, -1.0, 21))
        dt = 1e-3
        initial = initial_data_slice(1, 0, xs)
        stepped = advance_slice(initial, dt)
        direct = initial_data_slice(1, 0, xs, t2=dt)
        self.assertAlmostEqual(stepped.t2, dt)
        self.assertLess(stepped.distance(direct), 1e-5)
        with self.assertRaises(InputError):
            advance_slice(initial_data_slice(1, 0, [-2.0, -1.0]), dt)

if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromModule(sys.modules[__name__])
    unittest.TextTestRunner(verbosity=3).run(suite)
