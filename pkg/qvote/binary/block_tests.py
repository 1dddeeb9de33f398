import logging
from abc import ABC, abstractmethod
import numpy as np
from scipy.linalg import eigh
from qvote.binary.helstrom import BinaryTest, helstrom_test
from qvote.linalg.functions import check_dimension, kernel_threshold, trace_inner
from qvote.linalg.operators import Projector, DEFAULT_MAX_DIMENSION
from qvote.models.abstract_state_model import AbstractStateModel
from qvote.models.product_model import ProductModel


class AbstractBlockTest(ABC):
    """Holevo-Helstrom test between two hypotheses on a block of n sites."""

    def __init__(self, n: int):
        self._n = n

    @property
    def n(self) -> int:
        """Block length."""
        return self._n

    @abstractmethod
    def acceptance(self, model: AbstractStateModel) -> float:
        """Probability tr[rho^{(n)} pi_1] that the test votes for the first hypothesis
        when the block is in the local state of the model."""
        raise NotImplementedError

    @abstractmethod
    def binary_test(self, max_dim: int = DEFAULT_MAX_DIMENSION) -> BinaryTest:
        """Explicit projectors of the test."""
        raise NotImplementedError


class DenseBlockTest(AbstractBlockTest):
    """Helstrom test computed from the explicit local density matrices."""

    def __init__(self, model1: AbstractStateModel, model2: AbstractStateModel, n: int,
                 max_dim: int = DEFAULT_MAX_DIMENSION):
        super().__init__(n)
        self._max_dim = max_dim
        self._test = helstrom_test(model1.local_density(n, max_dim), model2.local_density(n, max_dim))

    def acceptance(self, model: AbstractStateModel) -> float:
        value = trace_inner(model.local_density(self.n, self._max_dim), self._test.pi_1)
        return min(max(value, 0.), 1.)

    def binary_test(self, max_dim: int = DEFAULT_MAX_DIMENSION) -> BinaryTest:
        return self._test


class PureProductBlockTest(AbstractBlockTest):
    """Helstrom test between two pure product states A = a^{⊗n} and B = b^{⊗n}.

    The positive part of |A><A| - |B><B| lives in span{A, B}, so the test is computed
    in the orthonormal basis e1 = A, e2 = (B - cA)/s of that span, where c = <A|B> = <a|b>^n
    and s = sqrt(1 - |c|^2). The accepting projector is |u><u| with u = alpha A + beta B,
    and for any product state rho^{⊗n}

        <u|rho^{⊗n}|u> = sum_{x,y} conj(k_x) k_y <x|rho|y>^n,   x, y in {a, b}.

    Nothing of dimension d^n is ever formed.
    """

    def __init__(self, vector1: np.ndarray, vector2: np.ndarray, n: int):
        super().__init__(n)
        self._vectors = (np.asarray(vector1, dtype=complex), np.asarray(vector2, dtype=complex))
        self._coefficients = self._get_coefficients()

    def _get_coefficients(self) -> np.ndarray:
        c = np.vdot(self._vectors[0], self._vectors[1]) ** self.n
        s = np.sqrt(max(1 - abs(c) ** 2, 0.))
        if not s:
            # identical states: the positive part is zero
            return np.zeros(2, dtype=complex)

        difference = np.array([[s ** 2, -c * s],
                               [-np.conj(c) * s, -s ** 2]])
        eigenvalues, eigenvectors = eigh(difference)
        if eigenvalues[-1] <= kernel_threshold(eigenvalues):
            return np.zeros(2, dtype=complex)

        u = eigenvectors[:, -1]
        logging.debug('Pure-state Helstrom test: n=%d, |<A|B>|=%.6g' % (self.n, abs(c)))

        return np.array([u[0] - u[1] * c / s, u[1] / s])

    def acceptance(self, model: AbstractStateModel) -> float:
        if not isinstance(model, ProductModel):
            raise ValueError('Pure-state block tests can only be evaluated on product states.')

        rho = model.base.entries
        vectors = np.column_stack(self._vectors)
        moments = (vectors.conj().T @ rho @ vectors) ** self.n
        value = np.real(self._coefficients.conj() @ moments @ self._coefficients)

        return min(max(float(value), 0.), 1.)

    def binary_test(self, max_dim: int = DEFAULT_MAX_DIMENSION) -> BinaryTest:
        dim = len(self._vectors[0]) ** self.n
        check_dimension(dim, max_dim)

        powers = []
        for vector in self._vectors:
            power = vector
            for _ in range(self.n - 1):
                power = np.kron(power, vector)

            powers.append(power)

        u = self._coefficients[0] * powers[0] + self._coefficients[1] * powers[1]

        return BinaryTest.from_projector(Projector.from_trusted(np.outer(u, u.conj())))


def block_test(model1: AbstractStateModel, model2: AbstractStateModel, n: int,
               max_dim: int = DEFAULT_MAX_DIMENSION, allow_pure: bool = True) -> AbstractBlockTest:
    """Chooses the cheapest exact representation of the Helstrom test on n sites.

    Args:
        allow_pure: Use the pure-state representation when both models are pure product
            states. It can only evaluate acceptance probabilities on product states.
    """
    if allow_pure and isinstance(model1, ProductModel) and isinstance(model2, ProductModel) \
            and model1.is_pure and model2.is_pure:
        return PureProductBlockTest(model1.pure_vector, model2.pure_vector, n)

    return DenseBlockTest(model1, model2, n, max_dim)
