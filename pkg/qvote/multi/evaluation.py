import logging
import math
from collections import namedtuple
from functools import reduce
from typing import List
import numpy as np
from qvote.config.validation import METHOD_FACTORIZED, METHOD_DENSE, METHOD_MONTE_CARLO, DEFAULT_SAMPLES
from qvote.errors.incompatible_method import IncompatibleMethodError
from qvote.linalg.functions import check_dimension, trace_inner
from qvote.linalg.operators import HermitianOperator, DEFAULT_MAX_DIMENSION
from qvote.models.hypothesis_set import HypothesisSet
from qvote.multi.voting import VotingTest, vote_vectors, winners


DEFAULT_CHUNK_SIZE = 10000


class MultiResult(namedtuple('MultiResult', ['errors', 'averaged_error', 'n', 'method', 'standard_errors',
                                             'averaged_standard_error'])):
    """Individual error probabilities Err_i and the averaged error sum_i p_i Err_i."""

    @property
    def successes(self) -> List[float]:
        return [1 - error for error in self.errors]


def _make_result(hs: HypothesisSet, errors: List[float], n: int, method: str, standard_errors=None,
                 averaged_standard_error=None) -> MultiResult:
    errors = [min(max(float(error), 0.), 1.) for error in errors]
    averaged = float(np.dot(hs.priors, errors))

    return MultiResult(errors, averaged, n, method, standard_errors, averaged_standard_error)


def vote_probabilities(hs: HypothesisSet, test: VotingTest) -> np.ndarray:
    """Matrix p[i, k]: probability that the block k votes for its first hypothesis when
    the hypothesis i is true."""
    res = np.empty((hs.r, test.pair_index.m))
    for k, block in enumerate(test.block_tests):
        for i, model in enumerate(hs.models):
            res[i, k] = block.acceptance(model)

    return res


def _check_product(hs: HypothesisSet, method: str):
    if not hs.is_product:
        raise IncompatibleMethodError(method, 'blocks of correlated states are not independent, '
                                              'use the dense evaluation')


def exact_error(hs: HypothesisSet, test: VotingTest, method: str = METHOD_FACTORIZED,
                max_dim: int = DEFAULT_MAX_DIMENSION) -> MultiResult:
    """Exact error probabilities of the voting test.

    The factorized evaluation multiplies the vote probabilities of independent blocks and
    sums them over all vote vectors assigned to a wrong hypothesis. It is exact for product
    states only. The dense evaluation materializes the POVM elements on all n sites.
    """
    if method == METHOD_DENSE:
        return _dense_error(hs, test, max_dim)

    if method != METHOD_FACTORIZED:
        raise ValueError('Unknown exact evaluation method "%s".' % method)

    _check_product(hs, method)

    p = vote_probabilities(hs, test)
    b = vote_vectors(test.pair_index.m).astype(bool)
    assignment = test.assignment

    errors = []
    for i in range(hs.r):
        probabilities = np.where(b, 1 - p[i], p[i]).prod(axis=1)
        errors.append(probabilities[assignment != i].sum())

    return _make_result(hs, errors, test.n, METHOD_FACTORIZED)


def dense_test_matrices(test: VotingTest, max_dim: int = DEFAULT_MAX_DIMENSION) -> List[HermitianOperator]:
    """Explicit POVM elements E_i = sum over b in B_i of the tensor products of the block projectors."""
    check_dimension(test.site_dim ** test.n, max_dim)

    projectors = []
    for block in test.block_tests:
        binary_test = block.binary_test(max_dim)
        projectors.append((binary_test.pi_1.entries, binary_test.pi_2.entries))

    dim = test.site_dim ** test.n
    res = [np.zeros((dim, dim), dtype=complex) for _ in range(test.pair_index.r)]
    for b, winner in zip(vote_vectors(test.pair_index.m), test.assignment):
        res[winner] += reduce(np.kron, (projectors[k][vote] for k, vote in enumerate(b)))

    logging.debug('Dense POVM of the voting test: n=%d, dim=%d' % (test.n, dim))

    return [HermitianOperator.from_trusted(matrix) for matrix in res]


def _dense_error(hs: HypothesisSet, test: VotingTest, max_dim: int) -> MultiResult:
    povm = dense_test_matrices(test, max_dim)

    errors = []
    for i, model in enumerate(hs.models):
        rho = model.local_density(test.n, max_dim)
        errors.append(sum(trace_inner(rho, element) for j, element in enumerate(povm) if j != i))

    return _make_result(hs, errors, test.n, METHOD_DENSE)


def monte_carlo_error(hs: HypothesisSet, test: VotingTest, samples: int, seed: int = 0,
                      chunk_size: int = DEFAULT_CHUNK_SIZE) -> MultiResult:
    """Monte Carlo estimate of the error probabilities from independently drawn block votes.

    Every chunk of samples for the hypothesis i draws from its own stream derived from
    the seed, so the estimates do not depend on the chunk processing order.
    """
    if samples < 1:
        raise ValueError('The number of samples must be positive, got %d.' % samples)

    _check_product(hs, METHOD_MONTE_CARLO)

    p = vote_probabilities(hs, test)
    errors, standard_errors = [], []
    for i in range(hs.r):
        wrong = 0
        for chunk, start in enumerate(range(0, samples, chunk_size)):
            size = min(chunk_size, samples - start)
            rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(i, chunk)))
            votes = (rng.random((size, test.pair_index.m)) >= p[i]).astype(int)
            wrong += int(np.count_nonzero(winners(votes, test.pair_index) != i))

        estimate = wrong / samples
        errors.append(estimate)
        standard_errors.append(math.sqrt(estimate * (1 - estimate) / samples))

    averaged_standard_error = math.sqrt(float(np.dot(hs.priors ** 2, np.square(standard_errors))))
    logging.debug('Monte Carlo errors (n=%d, %d samples): %s' % (test.n, samples, errors))

    return _make_result(hs, errors, test.n, METHOD_MONTE_CARLO, standard_errors, averaged_standard_error)


def evaluate_error(hs: HypothesisSet, test: VotingTest, method: str = METHOD_FACTORIZED, samples: int = None,
                   seed: int = 0, max_dim: int = DEFAULT_MAX_DIMENSION) -> MultiResult:
    if method == METHOD_MONTE_CARLO:
        return monte_carlo_error(hs, test, samples or DEFAULT_SAMPLES, seed)

    return exact_error(hs, test, method, max_dim)


def union_bound(hs: HypothesisSet, test: VotingTest) -> List[float]:
    """Upper bounds sum_{j != i} tr[rho_i P_{j,i}] on Err_i, where P_{j,i} is the event that
    the block of the pair {i, j} votes for j when the hypothesis i is true."""
    res = [0.] * hs.r
    for block, (i, j) in zip(test.block_tests, test.pair_index.pairs):
        res[i] += 1 - block.acceptance(hs.models[i])
        res[j] += block.acceptance(hs.models[j])

    return res
