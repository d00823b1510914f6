from .bipoly import BiPoly, divided_difference
from .laurent import (INFINITE, AtLeast, LaurentPoly, LaurentTail, Order, ord_inf, order_at_least,
                      order_to_json)
from .linalg import det_exact, det_poly, kernel_basis, kernel_vector, rank, rref
from .numbers import (Rational, format_rational, gen_binomial, pochhammer, pochhammer_ratio, to_mpf,
                      to_rational)
from .poly import DEG_ZERO, Poly, product
from .ratfunc import RatFunc
