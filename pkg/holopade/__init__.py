from .core import (BiPoly, LaurentPoly, LaurentTail, Poly, RatFunc, det_exact, divided_difference,
                   gen_binomial, ord_inf, pochhammer)
from .errors import (ConfigError, DegenerateApproximantError, HypothesisError, PrecisionError,
                     VerificationError)

__version__ = '0.1.0'
