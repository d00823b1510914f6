from .arith import (THRESHOLD_RANGE, ThresholdRow, V_alpha, den, euler_phi, log_mu_const, log_nu,
                    mu_const, mu_n, nu, nu_exact, parse_u_range, render_table_json,
                    render_table_markdown, threshold_cents, threshold_table, threshold_value)
from .constants import CriterionReport, criterion_constants
from .estimates import (DecayReport, GrowthReport, SlopeFit, decay_check, denominator_growth,
                        pair_bound, pochhammer_ratio_denominators)
from .explicit import (LinearFormCheck, explicit_P, explicit_PQR, explicit_Q, explicit_R,
                       linear_form_check, m_matrix, m_matrix_det, remainder_term, remainder_value,
                       theta_values)
from .gop import GOperatorReport, g_operator_check, g_operator_from_polys
from .places import (INFINITE_PLACE, PlaceQ, abs_v, h_v, height, height_decomposition, log_abs_v,
                     places_of, projective_height, valuation)
