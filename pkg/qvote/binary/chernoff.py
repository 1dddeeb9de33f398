import logging
import math
from collections import namedtuple
from typing import Callable
import numpy as np
from qvote.binary.golden_section import golden_section_minimize
from qvote.linalg.functions import MatrixLike, as_array, spectral_decompose, powered_eigenvalues


# values of Q below this level are treated as exact zeros (orthogonal supports)
Q_ZERO_THRESHOLD = 1e-300
Q_UPPER_SLACK = 1e-9

DEFAULT_GRID_SIZE = 201
DEFAULT_REFINEMENT_WIDTH = 1e-8


ChernoffResult = namedtuple('ChernoffResult', ['value', 's_star', 'q_curve'])


class QFunction(object):
    """Evaluates s -> tr[rho1^{1-s} rho2^{s}] for a fixed pair of density matrices.

    Both operators are decomposed once, then

        Q(s) = sum_{i,j} a_i^{1-s} b_j^{s} |<u_i|v_j>|^2

    where (a_i, u_i) and (b_j, v_j) are the eigenpairs of rho1 and rho2. Kernel
    eigenvalues contribute nothing for every s (the support convention).
    """

    def __init__(self, eigenvalues1: np.ndarray, eigenvalues2: np.ndarray, overlaps: np.ndarray = None):
        self._eigenvalues1 = eigenvalues1
        self._eigenvalues2 = eigenvalues2
        self._overlaps = overlaps

    @classmethod
    def from_densities(cls, rho1: MatrixLike, rho2: MatrixLike) -> 'QFunction':
        a, b = as_array(rho1), as_array(rho2)
        if a.shape != b.shape:
            raise ValueError('Dimension mismatch: %s and %s.' % (a.shape, b.shape))

        if _is_diagonal(a) and _is_diagonal(b):
            return cls.from_diagonals(np.diag(a).real, np.diag(b).real)

        decomposition1 = spectral_decompose(a)
        decomposition2 = spectral_decompose(b)
        overlaps = np.abs(decomposition1.eigenvectors.conj().T @ decomposition2.eigenvectors) ** 2

        return cls(decomposition1.eigenvalues, decomposition2.eigenvalues, overlaps)

    @classmethod
    def from_diagonals(cls, p: np.ndarray, q: np.ndarray) -> 'QFunction':
        """Commuting (classical) case: sum_x p_x^{1-s} q_x^{s}."""
        return cls(np.asarray(p, dtype=float), np.asarray(q, dtype=float))

    def __call__(self, s: float) -> float:
        if not 0 <= s <= 1:
            raise ValueError('"s" must be in the [0, 1] interval, got %g.' % s)

        a = powered_eigenvalues(self._eigenvalues1, 1 - s)
        b = powered_eigenvalues(self._eigenvalues2, s)
        value = float(np.sum(a * b)) if self._overlaps is None else float(a @ self._overlaps @ b)

        return min(max(value, 0.), 1 + Q_UPPER_SLACK)


def _is_diagonal(matrix: np.ndarray) -> bool:
    return not np.count_nonzero(matrix - np.diag(np.diag(matrix)))


def q_function(rho1: MatrixLike, rho2: MatrixLike, s: float) -> float:
    return QFunction.from_densities(rho1, rho2)(s)


def chernoff_distance(rho1: MatrixLike, rho2: MatrixLike, grid_size: int = DEFAULT_GRID_SIZE,
                      refinement_width: float = DEFAULT_REFINEMENT_WIDTH) -> ChernoffResult:
    """Quantum Chernoff distance -log min_{0<=s<=1} Q(s) in nats.

    Q is sampled on a uniform grid over the closed interval, then the minimum is refined
    by golden-section search on log Q (which is convex) between the neighbours of the
    best grid point.
    """
    return minimize_q(QFunction.from_densities(rho1, rho2), grid_size, refinement_width)


def minimize_q(q: Callable[[float], float], grid_size: int = DEFAULT_GRID_SIZE,
               refinement_width: float = DEFAULT_REFINEMENT_WIDTH, grid: np.ndarray = None) -> ChernoffResult:
    """Minimizes a log-convex function of s on [0, 1]: grid search followed by golden-section
    refinement. The result value is -log of the minimum, +inf if the minimum is zero."""
    if grid is None:
        grid = np.linspace(0., 1., grid_size)

    grid = np.asarray(grid, dtype=float)
    grid_size = len(grid)
    values = [q(s) for s in grid]
    q_curve = list(zip(grid.tolist(), values))

    j = int(np.argmin(values))
    if values[j] < Q_ZERO_THRESHOLD:
        return ChernoffResult(math.inf, float(grid[j]), q_curve)

    left, right = grid[max(j - 1, 0)], grid[min(j + 1, grid_size - 1)]
    s_star, log_q = golden_section_minimize(lambda s: math.log(max(q(s), Q_ZERO_THRESHOLD)),
                                            left, right, refinement_width)

    q_min = math.exp(log_q)
    if q_min >= values[j]:
        s_star, q_min = float(grid[j]), values[j]

    logging.debug('Chernoff distance: s*=%.10f, Q(s*)=%.15g' % (s_star, q_min))

    return ChernoffResult(max(-math.log(q_min), 0.), float(s_star), q_curve)
