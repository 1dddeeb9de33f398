from typing import List, Optional
import numpy as np
from qvote.linalg.functions import check_dimension, kron_power, spectral_decompose, kernel_threshold
from qvote.linalg.operators import DensityMatrix, HermitianOperator, DEFAULT_MAX_DIMENSION, TRACE_TOLERANCE
from qvote.models.abstract_state_model import AbstractStateModel


MODEL_TYPE_PRODUCT = 'product'


class ProductModel(AbstractStateModel):
    """I.i.d. state: the n-site density matrix is the n-fold tensor power of the base."""

    def __init__(self, base):
        self._base = HermitianOperator(base)
        self._pure_vector = self._get_pure_vector()

    @property
    def kind(self) -> str:
        return MODEL_TYPE_PRODUCT

    @property
    def site_dim(self) -> int:
        return self._base.dim

    @property
    def base(self) -> DensityMatrix:
        """Single-site density matrix."""
        return DensityMatrix(self._base.entries)

    @property
    def pure_vector(self) -> Optional[np.ndarray]:
        """State vector if the base is a pure state, None otherwise."""
        return self._pure_vector

    @property
    def is_pure(self) -> bool:
        return self._pure_vector is not None

    def violations(self) -> List[str]:
        try:
            DensityMatrix(self._base.entries)
        except ValueError as e:
            return [str(e)]

        return []

    def _local_density(self, n: int, max_dim: int) -> DensityMatrix:
        return kron_power(self.base, n, max_dim)

    def local_diagonal(self, n: int, max_dim: int = DEFAULT_MAX_DIMENSION) -> Optional[np.ndarray]:
        matrix = self._base.entries
        if np.count_nonzero(matrix - np.diag(np.diag(matrix))):
            return None

        self._check_block_size(n)
        check_dimension(self.site_dim ** n, max_dim)
        diagonal = np.diag(matrix).real
        res = diagonal
        for _ in range(n - 1):
            res = np.kron(res, diagonal)

        return res

    def _get_pure_vector(self) -> Optional[np.ndarray]:
        eigenvalues, eigenvectors = spectral_decompose(self._base)
        rank = np.count_nonzero(eigenvalues > kernel_threshold(eigenvalues))
        if rank != 1 or abs(eigenvalues[-1] - 1) > TRACE_TOLERANCE:
            return None

        return eigenvectors[:, -1]
