from .result import OracleResult, check_pointwise_minimal
from .isotonic import pav_isotonic_solve
from .exhaustive import exhaustive_anchored_solve
from .naive import naive_quadratic_solve

ORACLES = {
    "pav": pav_isotonic_solve,
    "exhaustive": exhaustive_anchored_solve,
    "naive": naive_quadratic_solve,
}
