"""Critical functions on Z/dZ: exact constructions, theta series and CM parameters."""

from .arith import divisors, is_square, is_square_mod, jacobi_symbol, squarefree_split
from .cm import (CMDescriptor, GateError, associated_parameters, associated_tau, congruence_gate,
                 critical_value_from_sigma, enumerate_pairs, fundamental_tau, integrality_gate, m0, n0,
                 negative_sign_exists, nk, nk_polynomial, search_negative_sign, sigma_matrix,
                 sign_epsilon, tau_string, theta_pair)
from .constructions import (ConstructionError, CriticalPair, constant_tail, gauss_sum, gaussian_function,
                            induce_product, induce_quotient, induce_subgroup, quadratic_gaussian)
from .cyclic import (CyclicFunction, ResidualReport, convolve, dft, estimate_lambda, is_critical, residual,
                     residual_half)
from .exact import SurdValue
from .modular import UnimodularMatrix
from .theta import (DEFAULT_CONFIG, ThetaConfig, TruncationError, UpperHalfPoint, check_addition,
                    check_isogeny, critical_family, hecke_sign, phi, psi, theta, theta0, theta1, theta_ab,
                    theta_constant_criterion, theta_constants, theta_mass,
                    transform_theta_constant)

__version__ = "0.1.0"
