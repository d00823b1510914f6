from .families import FAMILIES, FamilyData, FamilySpec, family_streams
from .hypergeometric import gauss_2f1_coefficients, gauss_2f1_partial
from .stream import (HolonomicStream, check_assumption, leading_coefficient, recurrence_residual,
                     solution_basis, violating_index)
