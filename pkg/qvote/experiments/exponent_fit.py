import logging
import math
from collections import namedtuple
from typing import Sequence
import numpy as np
from scipy.stats import linregress


MIN_FIT_POINTS = 3


ExponentFit = namedtuple('ExponentFit', ['slope', 'intercept', 'r_squared', 'window'])


def default_window(n_list: Sequence[int]) -> list:
    """Upper half of the block sizes, at least 3 of them."""
    n_list = sorted(n_list)
    window = n_list[len(n_list) // 2:]
    if len(window) < MIN_FIT_POINTS:
        window = n_list[-MIN_FIT_POINTS:]
        logging.warning('The fit window is shrunk to the last %d block sizes: %s.' % (len(window), window))

    return window


def fit_exponent(n_list: Sequence[int], errors: Sequence[float], window: Sequence[int] = None) -> ExponentFit:
    """Least-squares slope of -log Err against n, the finite-n estimate of the error exponent.

    Args:
        n_list: Block sizes.
        errors: Error probabilities for the block sizes.
        window: Block sizes to use for the fit. The upper half of "n_list" by default.

    Raises:
        ValueError: If less than 3 points with a positive error are left for the fit.
    """
    if len(n_list) != len(errors):
        raise ValueError('Expected one error per block size.')

    errors_by_n = dict(zip(n_list, errors))
    if all(error == 0 for error in errors):
        return ExponentFit(math.inf, None, None, [])

    if window is None:
        window = default_window(n_list)

    points = [(n, errors_by_n[n]) for n in sorted(window) if n in errors_by_n and errors_by_n[n] > 0]
    if len(points) < MIN_FIT_POINTS:
        raise ValueError('At least %d points with a positive error are required for the fit, got %d.'
                         % (MIN_FIT_POINTS, len(points)))

    x = np.array([n for n, _ in points], dtype=float)
    y = -np.log([error for _, error in points])
    res = linregress(x, y)

    return ExponentFit(float(res.slope), float(res.intercept), float(res.rvalue ** 2), [n for n, _ in points])


def error_rate(n: int, error: float) -> float:
    """-(1/n) log Err, +inf for a zero error."""
    return -math.log(error) / n if error > 0 else math.inf
