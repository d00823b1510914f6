from .construct import (CoefficientCheck, RodriguesFactor, check_commutativity, check_splitting,
                        construct_family, cross_factor, family_factors, family_polynomial,
                        top_coefficient_check, rodrigues_construct, rodrigues_kernel_check,
                        rodrigues_polynomial)
from .oracle import (kernel_dimension, oracle_contains, order_conditions, proportional,
                     solve_pade_oracle)
from .phi import (PhiMap, kernel_member, phi_apply, phi_bivariate, q_and_remainder,
                  remainder_coefficients, remainders_agree, series_product)
from .system import PadeSystem, VerificationStatus, assemble, verify
