from fractions import Fraction

from benneytoda.operators import random_rational_xy
from benneytoda.series import Hierarchy, RiemannPoint, TimeVector, times_for_h


def poly_from_roots(roots, lead=1):
    """ Ascending coefficients of lead * prod (l - r). """
    coeffs = [Fraction(lead)]
    for r in roots:
        shifted = [Fraction(0)] + coeffs
        for j, c in enumerate(coeffs):
            shifted[j] -= r * c
        coeffs = shifted
    return coeffs


def singular_instance(n1, n2, beta1=1, beta2=-2, extra=5):
    """ An exact time vector of class (n1, n2) at (beta1, beta2). """
    beta1, beta2 = Fraction(beta1), Fraction(beta2)
    roots = [beta1] * (n1 + 1) + [beta2] * (n2 + 1) + [Fraction(extra)]
    point = RiemannPoint(beta1, beta2)
    return times_for_h(poly_from_roots(roots), point), point


def cubic_instance(rng):
    """ (t, beta1, beta2) for a random regular t = (x, t2, t3). """
    beta1 = rng.uniform(0.5, 2.0)
    beta2 = beta1 - rng.uniform(1.0, 3.0)
    t3 = rng.choice([-1, 1]) * rng.uniform(0.5, 2.0)
    a = (beta1 + beta2) / 2
    b = beta1 * beta2
    t2 = -3 * t3 * a
    x = 1.5 * t3 * (b + a * a)
    return TimeVector([x, t2, t3]), beta1, beta2


def random_times(rng, size=4, hierarchy=Hierarchy.BENNEY):
    values = [rng.uniform(-1.0, 1.0) for _ in range(size - 1)]
    values.append(rng.choice([-1, 1]) * rng.uniform(0.5, 1.5))
    return TimeVector(values, hierarchy)


def random_xy(rng):
    return random_rational_xy(rng)
