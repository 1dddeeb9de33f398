from collections import namedtuple
import numpy as np
from scipy.linalg import eigvalsh, LinAlgError
from qvote.errors.decomposition import DecompositionError


# eigenvalues below this fraction of the largest eigenvalue magnitude are treated as zero
EIGEN_THRESHOLD = 1e-10

HERMITIAN_TOLERANCE = 1e-12
TRACE_TOLERANCE = 1e-10
PROJECTOR_TOLERANCE = 1e-9

DEFAULT_MAX_DIMENSION = 8192


SpectralDecomposition = namedtuple('SpectralDecomposition', ['eigenvalues', 'eigenvectors'])


class ComplexMatrix(object):
    """Square matrix of complex numbers. The entries are read-only."""

    def __init__(self, entries):
        matrix = np.array(entries, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or not matrix.shape[0]:
            raise ValueError('A non-empty square matrix was expected, got an array of shape %s.' % (matrix.shape,))

        if not np.all(np.isfinite(matrix)):
            raise ValueError('Matrix entries must be finite.')

        self._set_entries(self._check(matrix))

    @classmethod
    def from_trusted(cls, matrix: np.ndarray):
        """Wraps a matrix that is known to satisfy the class invariants (for example,
        a Kronecker product of valid operators) without re-checking them."""
        obj = cls.__new__(cls)
        obj._set_entries(np.asarray(matrix, dtype=complex))
        return obj

    def _check(self, matrix: np.ndarray) -> np.ndarray:
        return matrix

    def _set_entries(self, matrix: np.ndarray):
        if matrix.flags.writeable:
            matrix = matrix.copy()
            matrix.setflags(write=False)

        self._entries = matrix

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self._entries if dtype is None else self._entries.astype(dtype)

    def __repr__(self):
        return '%s(dim=%d)' % (self.__class__.__name__, self.dim)


class HermitianOperator(ComplexMatrix):
    """Self-adjoint matrix. Small asymmetries are removed on construction, so the stored
    entries are exactly Hermitian."""

    def _check(self, matrix: np.ndarray) -> np.ndarray:
        if not np.allclose(matrix, matrix.conj().T, rtol=0, atol=HERMITIAN_TOLERANCE):
            raise ValueError('The matrix is not Hermitian.')

        return (matrix + matrix.conj().T) / 2


class DensityMatrix(HermitianOperator):
    """Positive semi-definite Hermitian operator with unit trace."""

    def _check(self, matrix: np.ndarray) -> np.ndarray:
        matrix = super()._check(matrix)

        trace = np.trace(matrix).real
        if abs(trace - 1) > TRACE_TOLERANCE:
            raise ValueError('The trace of a density matrix must be 1, got %.12g.' % trace)

        try:
            min_eigenvalue = eigvalsh(matrix, subset_by_index=[0, 0])[0]
        except LinAlgError as e:
            raise DecompositionError('Eigenvalue computation failed: %s' % str(e))

        if min_eigenvalue < -TRACE_TOLERANCE:
            raise ValueError('A density matrix must be positive semi-definite, the smallest eigenvalue is %.6g.'
                             % min_eigenvalue)

        return matrix


class Projector(HermitianOperator):
    """Orthogonal projector: P = P^2 with eigenvalues in {0, 1}."""

    def _check(self, matrix: np.ndarray) -> np.ndarray:
        matrix = super()._check(matrix)
        if not np.allclose(matrix @ matrix, matrix, rtol=0, atol=PROJECTOR_TOLERANCE):
            raise ValueError('The matrix is not a projector.')

        return matrix
