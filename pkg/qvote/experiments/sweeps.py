import logging
import time
from collections import namedtuple
from typing import List, Sequence
from qvote.binary.block_tests import block_test
from qvote.config.validation import METHOD_FACTORIZED
from qvote.experiments.exponent_fit import ExponentFit, error_rate, fit_exponent
from qvote.linalg.operators import DEFAULT_MAX_DIMENSION
from qvote.models.hypothesis_set import HypothesisSet
from qvote.multi.design import TestDesign
from qvote.multi.evaluation import evaluate_error, union_bound
from qvote.multi.voting import build_voting_test
from qvote.multi.weights import block_plan


BinarySweepRow = namedtuple('BinarySweepRow', ['n', 'error', 'rate'])
MultiSweepRow = namedtuple('MultiSweepRow', ['n', 'lengths', 'result', 'rate', 'union_bound'])
SweepFits = namedtuple('SweepFits', ['averaged', 'individual'])


def _check_pair(hs: HypothesisSet):
    if hs.r != 2:
        raise ValueError('The binary sweep requires exactly 2 hypotheses, got %d.' % hs.r)


def binary_sweep(hs: HypothesisSet, n_list: Sequence[int], max_dim: int = DEFAULT_MAX_DIMENSION) \
        -> List[BinarySweepRow]:
    """Averaged error of the Helstrom test between the two hypotheses for every block size.

    The test is the support of (rho1 - rho2)_+, the error is weighted with the priors of
    the hypothesis set.
    """
    _check_pair(hs)
    (model1, model2), (p1, p2) = hs.models, hs.priors

    res = []
    for n in n_list:
        start = time.time()
        test = block_test(model1, model2, n, max_dim, allow_pure=hs.is_product)
        error = p1 * (1 - test.acceptance(model1)) + p2 * test.acceptance(model2)
        error = min(max(float(error), 0.), 1.)

        res.append(BinarySweepRow(n, error, error_rate(n, error)))
        logging.debug('Binary sweep n=%d: Err=%.10g (%.2fs)' % (n, error, time.time() - start))

    return res


def multi_sweep(hs: HypothesisSet, design: TestDesign, n_list: Sequence[int], method: str = METHOD_FACTORIZED,
                samples: int = None, seed: int = 0, max_dim: int = DEFAULT_MAX_DIMENSION) -> List[MultiSweepRow]:
    """Error probabilities of the voting test for every block size, the block lengths
    follow the weights of the design."""
    res = []
    for n in n_list:
        start = time.time()
        plan = block_plan(n, design.weights)
        test = build_voting_test(hs, plan, max_dim)
        result = evaluate_error(hs, test, method, samples, seed, max_dim)

        res.append(MultiSweepRow(n, plan.lengths, result, error_rate(n, result.averaged_error),
                                 union_bound(hs, test)))
        logging.debug('Multi sweep n=%d, blocks %s: Err=%.10g (%.2fs)'
                      % (n, plan.lengths, result.averaged_error, time.time() - start))

    return res


def _safe_fit(n_list: List[int], errors: List[float], window: Sequence[int] = None) -> ExponentFit:
    try:
        return fit_exponent(n_list, errors, window)
    except ValueError as e:
        logging.warning('Exponent fit is not available: %s' % str(e))
        return None


def fit_binary_sweep(rows: List[BinarySweepRow], window: Sequence[int] = None) -> ExponentFit:
    return _safe_fit([row.n for row in rows], [row.error for row in rows], window)


def fit_multi_sweep(rows: List[MultiSweepRow], window: Sequence[int] = None) -> SweepFits:
    """Fits of the averaged error and of every individual error."""
    n_list = [row.n for row in rows]
    averaged = _safe_fit(n_list, [row.result.averaged_error for row in rows], window)

    r = len(rows[0].result.errors) if rows else 0
    individual = [_safe_fit(n_list, [row.result.errors[i] for row in rows], window) for i in range(r)]

    return SweepFits(averaged, individual)
