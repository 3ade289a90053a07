import numpy as np
from scipy.special import xlogy

LN2 = np.log(2.0)


def xlog2x(x: float) -> float:
    """x log2 x with 0 log2 0 = 0."""
    return float(xlogy(x, x) / LN2)


def weighted_log2(weight: float, numerator: float, denominator: float) -> float:
    """weight * log2(numerator / denominator), zero whenever the weight is zero."""
    if weight == 0:
        return 0.0
    return float(weight * np.log2(numerator / denominator))


def binary_log_term(x: float) -> float:
    """log2[(1 - x)^(1 - x) (1 + x)^(1 + x)], even in x."""
    # rounding can push |x| a hair past 1
    x = min(abs(x), 1.0)
    return xlog2x(1 - x) + xlog2x(1 + x)
