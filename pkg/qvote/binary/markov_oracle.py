import math
import numpy as np
from qvote.errors.decomposition import DecompositionError
from qvote.models.markov_model import MarkovModel


PERRON_TOLERANCE = 1e-12
PERRON_MAX_ITERATIONS = 100000

DEFAULT_S_GRID = np.linspace(0., 1., 101)


def perron_root(matrix: np.ndarray, tol: float = PERRON_TOLERANCE, max_iterations: int = PERRON_MAX_ITERATIONS) \
        -> float:
    """Largest eigenvalue of an entrywise positive matrix by power iteration."""
    matrix = np.asarray(matrix, dtype=float)
    vector = np.full(matrix.shape[0], 1. / matrix.shape[0])
    root = 0.
    for _ in range(max_iterations):
        image = matrix @ vector
        new_root = image.sum() / vector.sum()
        image /= image.sum()
        converged = abs(new_root - root) <= tol * new_root and np.max(np.abs(image - vector)) <= tol
        vector, root = image, new_root
        if converged:
            return float(root)

    raise DecompositionError('Power iteration did not converge in %d iterations.' % max_iterations)


def markov_chernoff_oracle(model1: MarkovModel, model2: MarkovModel, s_grid: np.ndarray = None) -> float:
    """Limit of the mean Chernoff distance for two classical Markov chains:

        sup_s -log lambda_max(M_s),  M_s[x, y] = T1[x, y]^{1-s} T2[x, y]^{s}.

    Both transition matrices must be strictly positive.
    """
    if not isinstance(model1, MarkovModel) or not isinstance(model2, MarkovModel):
        raise ValueError('The Perron-root oracle is defined for Markov models only.')

    if not model1.is_strictly_positive or not model2.is_strictly_positive:
        raise ValueError('The Perron-root oracle requires strictly positive transition matrices.')

    if model1.site_dim != model2.site_dim:
        raise ValueError('Markov models must have the same number of states.')

    if s_grid is None:
        s_grid = DEFAULT_S_GRID

    values = [-math.log(perron_root(model1.transition ** (1 - s) * model2.transition ** s)) for s in s_grid]

    return max(max(values), 0.)
