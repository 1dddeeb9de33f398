import logging
import math
from collections import namedtuple
from typing import List, Sequence
import numpy as np
from qvote.binary.chernoff import chernoff_distance, DEFAULT_GRID_SIZE
from qvote.binary.markov_oracle import markov_chernoff_oracle
from qvote.binary.mean_chernoff import mean_chernoff_estimate, DEFAULT_S_GRID_SIZE
from qvote.linalg.operators import DEFAULT_MAX_DIMENSION
from qvote.models.abstract_state_model import AbstractStateModel
from qvote.models.hypothesis_set import HypothesisSet
from qvote.models.markov_model import MarkovModel
from qvote.models.product_model import ProductModel
from qvote.multi.pair_index import PairIndex
from qvote.multi.weights import optimal_weights, normalize_weights, phi_factor


DISTANCE_SOURCE_SINGLE_LETTER = 'single-letter'
DISTANCE_SOURCE_MARKOV_ORACLE = 'markov-oracle'
DISTANCE_SOURCE_MEAN_ESTIMATE = 'mean-estimate'

WEIGHTS_OPTIMAL = 'optimal'
WEIGHTS_MANUAL = 'manual'

# the largest block used to estimate a mean Chernoff distance without a closed form
MAX_ESTIMATE_BLOCK_SIZE = 10


PairDistance = namedtuple('PairDistance', ['pair', 'value', 's_star', 'source'])

TestDesign = namedtuple('TestDesign', ['pair_index', 'distances', 'weights', 'weights_source', 'phi', 'xi_min',
                                       'least_favorable_pair', 'predicted_exponent'])


def _estimate_block_size(model1: AbstractStateModel, model2: AbstractStateModel, max_dim: int) -> int:
    n = min(MAX_ESTIMATE_BLOCK_SIZE, int(math.floor(math.log(max_dim) / math.log(model1.site_dim) + 1e-9)))
    for model in (model1, model2):
        if model.n_max is not None:
            n = min(n, model.n_max)

    return max(n, 1)


def pair_distance(model1: AbstractStateModel, model2: AbstractStateModel, grid_size: int = DEFAULT_GRID_SIZE,
                  s_grid_size: int = DEFAULT_S_GRID_SIZE, max_dim: int = DEFAULT_MAX_DIMENSION):
    """Mean Chernoff distance of a pair of states and the way it was obtained.

    Product states: the single-site Chernoff distance (exact). Strictly positive Markov
    chains: the Perron-root limit. Anything else: the finite-n estimate on the largest
    affordable block.
    """
    if isinstance(model1, ProductModel) and isinstance(model2, ProductModel):
        res = chernoff_distance(model1.local_density(1), model2.local_density(1), grid_size)
        return res.value, res.s_star, DISTANCE_SOURCE_SINGLE_LETTER

    s_grid = np.linspace(0., 1., s_grid_size)
    if isinstance(model1, MarkovModel) and isinstance(model2, MarkovModel) \
            and model1.is_strictly_positive and model2.is_strictly_positive:
        return markov_chernoff_oracle(model1, model2, s_grid), None, DISTANCE_SOURCE_MARKOV_ORACLE

    n = _estimate_block_size(model1, model2, max_dim)
    point = mean_chernoff_estimate(model1, model2, [n], s_grid, max_dim).per_n[0]

    return point.value, point.s, DISTANCE_SOURCE_MEAN_ESTIMATE


def pairwise_distances(hs: HypothesisSet, grid_size: int = DEFAULT_GRID_SIZE,
                       s_grid_size: int = DEFAULT_S_GRID_SIZE,
                       max_dim: int = DEFAULT_MAX_DIMENSION) -> List[PairDistance]:
    res = []
    for i, j in PairIndex(hs.r):
        value, s_star, source = pair_distance(hs.models[i], hs.models[j], grid_size, s_grid_size, max_dim)
        logging.debug('Distance of the pair (%d, %d): %.10g [%s]' % (i + 1, j + 1, value, source))
        res.append(PairDistance((i, j), value, s_star, source))

    return res


def design_test(hs: HypothesisSet, weights: Sequence[float] = None, distances: List[PairDistance] = None,
                grid_size: int = DEFAULT_GRID_SIZE, s_grid_size: int = DEFAULT_S_GRID_SIZE,
                max_dim: int = DEFAULT_MAX_DIMENSION) -> TestDesign:
    """Block weights of the voting test and its predicted error exponent min_k w_k xi_k.

    Without manual weights the weights equalize w_k xi_k over the pairs with a finite
    distance. Pairs with an infinite distance are perfectly distinguishable: they get zero
    weight (one site in the block plan) and are left out of phi and of the prediction.
    """
    pair_index = PairIndex(hs.r)
    if distances is None:
        distances = pairwise_distances(hs, grid_size, s_grid_size, max_dim)

    xi = np.array([distance.value for distance in distances], dtype=float)
    finite = np.isfinite(xi)
    for distance in distances:
        if not math.isfinite(distance.value):
            i, j = distance.pair
            logging.warning('States %d and %d are perfectly distinguishable (infinite distance), '
                            'the pair is excluded from phi.' % (i + 1, j + 1))

    if weights is not None:
        if len(weights) != pair_index.m:
            raise ValueError('Expected %d weights, got %d.' % (pair_index.m, len(weights)))

        w, weights_source = normalize_weights(weights), WEIGHTS_MANUAL
    else:
        w, weights_source = np.zeros(pair_index.m), WEIGHTS_OPTIMAL
        if finite.any():
            w[finite] = optimal_weights(xi[finite])
        else:
            w[:] = 1. / pair_index.m

    if not finite.any():
        return TestDesign(pair_index, distances, w, weights_source, 1., math.inf, None, math.inf)

    phi, xi_min = phi_factor(xi[finite])
    least_favorable = distances[int(np.argmin(np.where(finite, xi, np.inf)))].pair
    predicted = float(np.min(w[finite] * xi[finite]))

    return TestDesign(pair_index, distances, w, weights_source, phi, xi_min, least_favorable, predicted)
