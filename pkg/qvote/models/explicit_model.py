from typing import List, Optional
import numpy as np
from qvote.linalg.functions import check_dimension
from qvote.linalg.operators import DensityMatrix, HermitianOperator, DEFAULT_MAX_DIMENSION
from qvote.models.abstract_state_model import AbstractStateModel


MODEL_TYPE_EXPLICIT = 'explicit'


class ExplicitSequenceModel(AbstractStateModel):
    """User-supplied local density matrices for n = 1..n_max."""

    def __init__(self, densities: list):
        if not densities:
            raise ValueError('At least one density matrix must be given.')

        self._densities = [HermitianOperator(density) for density in densities]

    @property
    def kind(self) -> str:
        return MODEL_TYPE_EXPLICIT

    @property
    def site_dim(self) -> int:
        return self._densities[0].dim

    @property
    def n_max(self) -> Optional[int]:
        return len(self._densities)

    def violations(self) -> List[str]:
        res = []
        for n, density in enumerate(self._densities, 1):
            if density.dim != self.site_dim ** n:
                res.append('The density matrix for n=%d must have dimension %d, got %d.'
                           % (n, self.site_dim ** n, density.dim))
                continue

            try:
                DensityMatrix(density.entries)
            except ValueError as e:
                res.append('n=%d: %s' % (n, str(e)))

        return res

    def _local_density(self, n: int, max_dim: int) -> DensityMatrix:
        return DensityMatrix(self._densities[n - 1].entries)

    def local_diagonal(self, n: int, max_dim: int = DEFAULT_MAX_DIMENSION) -> Optional[np.ndarray]:
        self._check_block_size(n)
        check_dimension(self.site_dim ** n, max_dim)
        matrix = self._densities[n - 1].entries
        if np.count_nonzero(matrix - np.diag(np.diag(matrix))):
            return None

        return np.diag(matrix).real
