import math
from collections import namedtuple
from typing import Sequence, Tuple
import numpy as np


WEIGHTS_TOLERANCE = 1e-12


BlockPlan = namedtuple('BlockPlan', ['n', 'weights', 'lengths'])


def _check_distances(xi: Sequence[float]) -> np.ndarray:
    xi = np.asarray(xi, dtype=float)
    if not xi.size:
        raise ValueError('At least one pairwise distance is required.')

    if np.any(~np.isfinite(xi)) or np.any(xi <= 0):
        raise ValueError('Pairwise distances must be positive and finite, got %s.' % xi.tolist())

    return xi


def phi_factor(xi: Sequence[float]) -> Tuple[float, float]:
    """Returns the attainability factor phi = (sum_k min(xi) / xi_k)^{-1} and the
    generalized distance min(xi)."""
    xi = _check_distances(xi)
    xi_min = float(xi.min())

    return 1. / float(np.sum(xi_min / xi)), xi_min


def optimal_weights(xi: Sequence[float]) -> np.ndarray:
    """Weights that make all products w_k * xi_k equal, which maximizes min_k w_k * xi_k."""
    xi = _check_distances(xi)
    inverse = 1. / xi

    return inverse / inverse.sum()


def normalize_weights(weights: Sequence[float]) -> np.ndarray:
    weights = np.asarray(weights, dtype=float)
    if not weights.size or np.any(~np.isfinite(weights)) or np.any(weights < 0) or weights.sum() <= 0:
        raise ValueError('Weights must be non-negative with a positive sum, got %s.' % weights.tolist())

    return weights / weights.sum()


def block_plan(n: int, weights: Sequence[float]) -> BlockPlan:
    """Splits n sites into one block per pair proportionally to the weights.

    Largest-remainder apportionment of w_k * n: every block gets the integer part of its
    quota, the remaining sites go to the largest fractional parts (smaller k first on ties).
    Blocks left empty take one site from the currently largest block.
    """
    weights = np.asarray(weights, dtype=float)
    m = len(weights)
    if np.any(weights < 0) or abs(weights.sum() - 1) > WEIGHTS_TOLERANCE:
        raise ValueError('Weights must be non-negative and sum to 1.')

    if n < m:
        raise ValueError('The block length %d is smaller than the number of pairs %d.' % (n, m))

    quotas = weights * n
    lengths = [int(math.floor(quota)) for quota in quotas]
    remainders = [quota - length for quota, length in zip(quotas, lengths)]

    for k in sorted(range(m), key=lambda x: (-remainders[x], x))[:n - sum(lengths)]:
        lengths[k] += 1

    for k in range(m):
        if not lengths[k]:
            largest = max(range(m), key=lambda x: (lengths[x], -x))
            lengths[largest] -= 1
            lengths[k] = 1

    assert sum(lengths) == n

    return BlockPlan(n, weights, tuple(lengths))
