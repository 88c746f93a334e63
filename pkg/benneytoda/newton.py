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

import logging

import numpy as np

from .common import NoConvergence, SingularJacobian, default_tolerance

logger = logging.getLogger('benneytoda.solver')


class NewtonOptions(object):
    """ Solver settings.

    :param tol: residual tolerance, relative to ``scale`` of the system
    :param max_iter: iteration limit
    :param merge_tol: invariants closer than this are merged (Collapse)
    :param gap_tol: converged points with |beta1 - beta2| below this,
        relative to |beta|, are reduced (Collapse)
    :param zero_tol: relative threshold for vanishing Taylor coefficients
    :param band: ambiguity band factor on top of zero_tol
    """

    def __init__(self, tol=None, max_iter=60, merge_tol=1e-8, zero_tol=1e-8,
                 band=10.0, min_step=2.0 ** -12, gap_tol=1e-6):
        self.tol = default_tolerance() if tol is None else tol
        self.max_iter = max_iter
        self.merge_tol = merge_tol
        self.zero_tol = zero_tol
        self.band = band
        self.min_step = min_step
        self.gap_tol = gap_tol

    @classmethod
    def from_options(cls, options):
        return cls(tol=options.tol, max_iter=options.max_iter,
                   merge_tol=options.merge_tol, zero_tol=options.zero_tol,
                   gap_tol=options.gap_tol)

    def __repr__(self):
        return ('<NewtonOptions tol=%g max_iter=%d merge_tol=%g '
                'zero_tol=%g>' % (self.tol, self.max_iter, self.merge_tol,
                                  self.zero_tol))


class NewtonResult(object):

    def __init__(self, x, residual, iterations):
        self.x = x
        self.residual = residual
        self.iterations = iterations


def newton(system, x0, options=None, scale=1.0):
    """ Damped Newton iteration for ``system(x) -> (F, J)``.

    Steps are halved while ||F||^2 does not decrease (Armijo condition)
    down to ``options.min_step``. ``system`` may raise a SolverError to stop
    the iteration, e.g. when the invariants merge.

    Raises NoConvergence after ``max_iter`` steps and SingularJacobian when
    the linear system cannot be solved.
    """
    if options is None:
        options = NewtonOptions()
    x = np.array(x0, dtype=float)
    F, J = system(x)
    norm = np.linalg.norm(F, np.inf)
    for iteration in range(options.max_iter + 1):
        if norm <= options.tol * scale:
            logger.debug('newton converged in %d steps, |F| = %.3e',
                         iteration, norm)
            return NewtonResult(x, norm, iteration)
        if iteration == options.max_iter:
            break
        try:
            delta = np.linalg.solve(J, -F)
        except np.linalg.LinAlgError:
            raise SingularJacobian('singular Jacobian at %s' % (x,),
                                   point=x, residual=norm)
        if not np.all(np.isfinite(delta)):
            raise SingularJacobian('non-finite Newton step at %s' % (x,),
                                   point=x, residual=norm)
        merit = float(np.dot(F, F))
        step = 1.0
        while True:
            candidate = x + step * delta
            F_new, J_new = system(candidate)
            merit_new = float(np.dot(F_new, F_new))
            if merit_new <= (1.0 - 1e-4 * step) * merit or \
                    step <= options.min_step:
                break
            step *= 0.5
        x, F, J = candidate, F_new, J_new
        norm = np.linalg.norm(F, np.inf)
    raise NoConvergence('no convergence after %d iterations, |F| = %.3e' %
                        (options.max_iter, norm), point=x, residual=norm)
