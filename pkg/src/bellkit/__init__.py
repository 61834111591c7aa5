"""bellkit: exact partial Bell polynomials, Stirling numbers and their cross-checks."""

from .bell import (
    ALGORITHMS,
    AlgorithmId,
    Partition,
    bell,
    bell_closed_form,
    bell_convolution,
    bell_partition,
    bell_recurrence,
    bell_series_oracle,
    enumerate_partitions,
)
from .polyalgebra import Monomial, Polynomial, degree_weight, div_by_var, evaluate, scale
from .series import (
    TruncatedSeries,
    cauchy_product,
    direct_power,
    power_coeffs_general,
    power_coeffs_zero_constant,
)
from .stirling import (
    StirlingMethod,
    stirling,
    stirling_closed_small,
    stirling_explicit,
    stirling_from_bell,
    stirling_nested,
)

__version__ = "0.1.0"
