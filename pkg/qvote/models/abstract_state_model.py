import logging
from abc import ABC, abstractmethod
from typing import List, Optional
import numpy as np
from qvote.linalg.functions import check_dimension
from qvote.linalg.operators import DensityMatrix, DEFAULT_MAX_DIMENSION


class AbstractStateModel(ABC):
    """A shift-invariant state on a spin chain, given by its local density matrices
    on blocks of n consecutive sites."""

    @property
    @abstractmethod
    def kind(self) -> str:
        """Model type as it appears in the configuration file."""
        raise NotImplementedError

    @property
    @abstractmethod
    def site_dim(self) -> int:
        """Dimension of the single-site Hilbert space."""
        raise NotImplementedError

    @property
    def n_max(self) -> Optional[int]:
        """The largest supported block size or None if there is no limit."""
        return None

    @abstractmethod
    def violations(self) -> List[str]:
        """Returns a list of violated model constraints."""
        raise NotImplementedError

    @abstractmethod
    def _local_density(self, n: int, max_dim: int) -> DensityMatrix:
        raise NotImplementedError

    def local_density(self, n: int, max_dim: int = DEFAULT_MAX_DIMENSION) -> DensityMatrix:
        """Density matrix of the model restricted to a block of n sites."""
        self._check_block_size(n)
        check_dimension(self.site_dim ** n, max_dim)
        logging.debug('Local density of a %s model: n=%d, dim=%d' % (self.kind, n, self.site_dim ** n))

        return self._local_density(n, max_dim)

    def local_diagonal(self, n: int, max_dim: int = DEFAULT_MAX_DIMENSION) -> Optional[np.ndarray]:
        """Diagonal of the local density matrix for models that are diagonal in the
        computational basis, None otherwise. Subclasses check the dimension cap before
        building the diagonal."""
        return None

    def _check_block_size(self, n: int):
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise ValueError('Block size must be a positive integer, got %r.' % (n,))

        if self.n_max is not None and n > self.n_max:
            raise ValueError('Block size %d is not available for the %s model (n_max=%d).'
                             % (n, self.kind, self.n_max))
