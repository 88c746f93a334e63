__version__ = '0.1.0'

from .common import (AllCoefficientsVanish, BadArity, BenneyTodaError,
                     ClassificationError, Collapse, DeeperSingularity,
                     DegenerateDelta, EmptyLocus, GridCrossesSingularity,
                     InputError, NoConvergence, NotCritical,
                     RadicandNegative, RealCollapse, SingularHessian,
                     SingularJacobian, SolverError, ToleranceAmbiguity)
from .polynomial import Polynomial, as_exact, is_exact
from .series import (Backend, CoeffTable, HPolynomial, Hierarchy, Kernel,
                     PointKind, RiemannPoint, SYMBOLIC, TimeVector,
                     char_speed, coeff_table, derivative_tower,
                     dtoda_from_benney_times, eval_W, h_polynomial,
                     invariant_form, mixed_tower, numeric_coefficients,
                     times_for_h, uv_form, uv_map, uv_unmap, xy_form)
from .operators import (RationalXY, apply_L, apply_L_tilde,
                        check_commutation, check_epd, check_index_shift,
                        check_tilde_duality, gegenbauer_xy,
                        index_shift_residual)
from .newton import NewtonOptions, NewtonResult, newton
from .hodograph import (REGULAR, HodographPoint, Locus, Section3Report,
                        SingularClass, classify, compare_section3,
                        cubic_closed_form, section3_branches, solve_regular,
                        solve_singular, solve_singular_all, trace_locus)
from .elliptic import (ELLIPTIC_REGULAR, EllipticPoint, SingN,
                       chart_derivatives, classify_elliptic, eval_W_chart,
                       eval_W_uv, find_catastrophe, solve_elliptic,
                       solve_elliptic_singular, umbilic_report)
from .flows import (FlowReport, InitialSlice, advance_slice,
                    benney_flow_residual, dtoda_flow_residual,
                    flow_residual, initial_data_slice)
