from typing import List
import numpy as np
from qvote.errors.decomposition import DecompositionError
from qvote.linalg.functions import check_dimension
from qvote.linalg.operators import DensityMatrix, DEFAULT_MAX_DIMENSION
from qvote.models.abstract_state_model import AbstractStateModel


MODEL_TYPE_MARKOV = 'markov'

STOCHASTIC_TOLERANCE = 1e-10


def stationary_distribution(transition) -> np.ndarray:
    """Left Perron vector of a row-stochastic matrix, normalized to a probability vector."""
    transition = np.asarray(transition, dtype=float)
    eigenvalues, vectors = np.linalg.eig(transition.T)
    k = int(np.argmin(np.abs(eigenvalues - 1)))
    if abs(eigenvalues[k] - 1) > 1e-8:
        raise DecompositionError('The transition matrix has no eigenvalue 1.')

    vector = np.abs(np.real(vectors[:, k]))

    return vector / vector.sum()


class MarkovModel(AbstractStateModel):
    """Classical stationary Markov chain embedded as diagonal density matrices:
    the (x_1...x_n) entry is initial[x_1] * transition[x_1, x_2] * ... * transition[x_{n-1}, x_n]."""

    def __init__(self, transition, initial=None):
        transition = np.array(transition, dtype=float)
        if transition.ndim != 2 or transition.shape[0] != transition.shape[1] or not transition.shape[0]:
            raise ValueError('The transition matrix must be a non-empty square matrix.')

        if initial is None:
            initial = stationary_distribution(transition)

        initial = np.array(initial, dtype=float).ravel()
        if initial.shape != (transition.shape[0],):
            raise ValueError('The initial distribution must have %d entries.' % transition.shape[0])

        transition.setflags(write=False)
        initial.setflags(write=False)
        self._transition = transition
        self._initial = initial

    @property
    def kind(self) -> str:
        return MODEL_TYPE_MARKOV

    @property
    def site_dim(self) -> int:
        return self._transition.shape[0]

    @property
    def transition(self) -> np.ndarray:
        return self._transition

    @property
    def initial(self) -> np.ndarray:
        return self._initial

    @property
    def is_strictly_positive(self) -> bool:
        return bool(np.all(self._transition > 0))

    def violations(self) -> List[str]:
        res = []
        if np.any(self._initial < 0) or abs(self._initial.sum() - 1) > STOCHASTIC_TOLERANCE:
            res.append('The initial distribution must be non-negative and sum to 1.')

        if np.any(self._transition < 0) \
                or np.any(np.abs(self._transition.sum(axis=1) - 1) > STOCHASTIC_TOLERANCE):
            res.append('Each row of the transition matrix must be non-negative and sum to 1.')

        if not res and np.any(np.abs(self._initial @ self._transition - self._initial) > STOCHASTIC_TOLERANCE):
            res.append('The initial distribution is not stationary for the transition matrix, '
                       'the chain would not be shift-invariant.')

        return res

    def local_diagonal(self, n: int, max_dim: int = DEFAULT_MAX_DIMENSION) -> np.ndarray:
        self._check_block_size(n)
        check_dimension(self.site_dim ** n, max_dim)

        d = self.site_dim
        res = self._initial
        for _ in range(n - 1):
            # the last site is the least significant index
            res = (res.reshape(-1, d)[:, :, None] * self._transition[None, :, :]).reshape(-1)

        return res

    def _local_density(self, n: int, max_dim: int) -> DensityMatrix:
        return DensityMatrix.from_trusted(np.diag(self.local_diagonal(n, max_dim)))
