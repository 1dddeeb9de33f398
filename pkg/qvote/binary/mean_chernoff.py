import logging
import time
from collections import namedtuple
from typing import Sequence
import numpy as np
from qvote.binary.chernoff import QFunction, chernoff_distance, minimize_q
from qvote.linalg.functions import check_dimension
from qvote.linalg.operators import DEFAULT_MAX_DIMENSION
from qvote.models.abstract_state_model import AbstractStateModel
from qvote.models.product_model import ProductModel


DEFAULT_S_GRID_SIZE = 101


MeanChernoffEstimate = namedtuple('MeanChernoffEstimate', ['per_n', 'extrapolated', 'single_letter_reference'])
MeanChernoffPoint = namedtuple('MeanChernoffPoint', ['n', 'value', 's'])


def mean_chernoff_estimate(model1: AbstractStateModel, model2: AbstractStateModel, n_list: Sequence[int],
                           s_grid: np.ndarray = None, max_dim: int = DEFAULT_MAX_DIMENSION) -> MeanChernoffEstimate:
    """Finite-n estimates sup_s -(1/n) log tr[(rho1^{(n)})^{1-s} (rho2^{(n)})^{s}].

    The supremum is searched on the s-grid and refined between the neighbours of the best
    grid point. Product pairs use Q_n(s) = Q_1(s)^n, classical (diagonal) pairs work on the
    diagonals only, everything else is evaluated on the dense local density matrices. Every
    block size is checked against the dimension cap, including the product ones.
    """
    if s_grid is None:
        s_grid = np.linspace(0., 1., DEFAULT_S_GRID_SIZE)

    is_product = isinstance(model1, ProductModel) and isinstance(model2, ProductModel)
    single_letter = QFunction.from_densities(model1.local_density(1), model2.local_density(1)) if is_product else None

    per_n = []
    for n in n_list:
        check_dimension(model1.site_dim ** n, max_dim)
        start = time.time()
        if is_product:
            q = (lambda n_: lambda s: single_letter(s) ** n_)(n)
        else:
            q = _local_q_function(model1, model2, n, max_dim)

        res = minimize_q(q, grid=s_grid)
        per_n.append(MeanChernoffPoint(n, res.value / n, res.s_star))
        logging.debug('Mean Chernoff estimate for n=%d: %.10g (%.2fs)' % (n, res.value / n, time.time() - start))

    reference = chernoff_distance(model1.local_density(1), model2.local_density(1)).value if is_product else None
    extrapolated = max(per_n, key=lambda point: point.n).value if per_n else None

    return MeanChernoffEstimate(per_n, extrapolated, reference)


def _local_q_function(model1: AbstractStateModel, model2: AbstractStateModel, n: int, max_dim: int) -> QFunction:
    diagonal1, diagonal2 = model1.local_diagonal(n, max_dim), model2.local_diagonal(n, max_dim)
    if diagonal1 is not None and diagonal2 is not None:
        return QFunction.from_diagonals(diagonal1, diagonal2)

    return QFunction.from_densities(model1.local_density(n, max_dim), model2.local_density(n, max_dim))
