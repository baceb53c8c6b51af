"""2F1 and 3F2 hypergeometric series with the Thomae, Kummer and Euler relations.

Series evaluation, transformations held as data, Gauss and Saalschutz
closed forms, and independent quadrature oracles that certify each step
from the Euler integral to the Thomae relation.
"""

from .arith import GammaRatio, Rational, gamma_ratio_eval, log_gamma_signed, pochhammer, pochhammer_rational
from .errors import (
    AccuracyNotReached,
    DivergenceError,
    DomainError,
    LowerPoleError,
    MaxTermsExceeded,
    NoValidRepresentationError,
    PoleError,
    PreconditionError,
    SlowConvergenceError,
    ZeroDenominatorError,
)
from .series import (
    DEFAULT_TOL,
    Params2F1,
    Params3F2,
    SeriesResult,
    Tolerance,
    excess_2f1,
    excess_3f2,
    sum_2f1,
    sum_3f2_terminating_exact,
    sum_3f2_unit,
)
from .transforms import (
    Transformed2F1,
    Transformed3F2,
    choose_representation,
    euler_second_map,
    gauss_sum,
    kummer_map,
    saalschutz_sum,
    thomae_map,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyNotReached",
    "DEFAULT_TOL",
    "DivergenceError",
    "DomainError",
    "GammaRatio",
    "LowerPoleError",
    "MaxTermsExceeded",
    "NoValidRepresentationError",
    "Params2F1",
    "Params3F2",
    "PoleError",
    "PreconditionError",
    "Rational",
    "SeriesResult",
    "SlowConvergenceError",
    "Tolerance",
    "Transformed2F1",
    "Transformed3F2",
    "ZeroDenominatorError",
    "choose_representation",
    "euler_second_map",
    "excess_2f1",
    "excess_3f2",
    "gamma_ratio_eval",
    "gauss_sum",
    "kummer_map",
    "log_gamma_signed",
    "pochhammer",
    "pochhammer_rational",
    "saalschutz_sum",
    "sum_2f1",
    "sum_3f2_terminating_exact",
    "sum_3f2_unit",
    "thomae_map",
]
