"""Exact discrepancy and LeVeque-type bounds for finite sequences in Z_p."""
from .characters import Character, enumerate_nontrivial, evaluate, parse_character
from .discrepancy import (DEPTH_LIMIT, Disc, DiscrepancyReport, exact_discrepancy,
                          l2_norm_sq, local_discrepancy)
from .fourier import (disc_fourier_coeff, haar_integrate, radial_integral,
                      radial_sq_sum)
from .leveque import (BoundReport, WeylTable, check_sandwich, discrepancy_bound,
                      leveque_constant, linear_weyl_closed_form, tail_bound,
                      weyl_sum, weyl_table)
from .padic import (PadicApprox, ParameterError, PrecisionError, Prime, SizeError,
                    add, from_integer, is_unit, mul, padic_abs, truncate)
from .sequences import (SequenceSpec, emit_sequence_file, generate,
                        parse_sequence_file)

__version__ = "0.1.0"
