from .closed_forms import (EXAMPLE_FAMILIES, chebyshev_theta_entry, delta_closed_chebyshev,
                           delta_closed_examples, theta_closed)
from .lab import (DetReport, DetSetup, ThetaCheck, build_delta, delta_from_remainders, diagnose,
                  theta_comparison, theta_matrix, theta_vandermonde_check)
