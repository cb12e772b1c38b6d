"""Multivariable link signatures and nullities from generalized Seifert data,
with slope evaluation, Torres-type boundary predictions, and machine checks
of the limit statements relating them."""

from .angles import TorusPoint, parse_angle
from .corrections import (ClaspSequence, chain_matrix, chain_sign, clasp_matrix,
                          pair_sign, signature_jump, signature_jump_by_walls,
                          torus_signature_profile, wall_indicator)
from .families import (make_family, make_torus, make_twist, make_unlink,
                       oracle_torus, oracle_twist, unknot)
from .hermitian import (HermitianMatrix, Inertia, conjugate_inertia_check,
                        inertia, integer_inertia)
from .laurent import LaurentPoly, RationalFunction, divide_exact
from .links import (ColoredLink, SeifertSystem, boundary_limit_form, form_at,
                    linking_matrix, load_link, parse_link, save_link,
                    signature_nullity)
from .slope import (SlopeValue, classify_slope, conway_factor_split,
                    extended_sign, slope, torres_generic)
from .verify import (PLUS_MINUS_ONE, LimitResult, LimitSchedule,
                     TorresPrediction, VerificationReport, directional_limit,
                     predict_lt_limit_2comp, predict_torres, run_suite,
                     verify_3d, verify_4d, verify_corner_limits, verify_lt,
                     verify_multi_lt)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
