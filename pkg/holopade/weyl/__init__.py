from .diffop import DiffOp, adjoint, apply, commutator, compose, from_polys
from .kernel import (adjoint_on_cauchy_kernel, cauchy_identity_residual, cauchy_kernel,
                     cauchy_kernel_polynomial, operator_on_cauchy_kernel)
from .rodrigues import (FirstOrderData, commutation_coefficients, commutation_expansion,
                        commute_criterion, commutes_directly, decompose_product, euler_operator,
                        in_ideal, rodrigues_apply, rodrigues_op, satisfying_factorizations,
                        scaled_euler_power)
