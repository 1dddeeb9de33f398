import logging
from typing import List, Sequence
import numpy as np
from qvote.binary.block_tests import AbstractBlockTest, block_test
from qvote.linalg.operators import DEFAULT_MAX_DIMENSION
from qvote.models.hypothesis_set import HypothesisSet
from qvote.multi.pair_index import PairIndex
from qvote.multi.weights import BlockPlan


# 2^20 vote vectors per hypothesis
MAX_ENUMERATED_PAIRS = 20


def _check_votes(b: np.ndarray, pair_index: PairIndex) -> np.ndarray:
    b = np.asarray(b, dtype=int)
    if b.shape[-1] != pair_index.m:
        raise ValueError('Expected %d votes, got %d.' % (pair_index.m, b.shape[-1]))

    if np.any((b != 0) & (b != 1)):
        raise ValueError('Votes must be 0 or 1.')

    return b


def _vote_matrix(b: np.ndarray, pair_index: PairIndex) -> np.ndarray:
    """Counts n_i(b) for a (samples x m) array of vote vectors."""
    first, second = (np.array(indices) for indices in zip(*pair_index.pairs))
    voted_for = np.where(b == 0, first, second)

    counts = np.zeros((b.shape[0], pair_index.r), dtype=int)
    for i in range(pair_index.r):
        counts[:, i] = np.count_nonzero(voted_for == i, axis=1)

    return counts


def vote_counts(b: Sequence[int], pair_index: PairIndex) -> np.ndarray:
    """Number of blocks that voted for every hypothesis.

    The vote b_k = 0 means the block k = (k1, k2) voted for k1, b_k = 1 voted for k2.
    """
    b = _check_votes(b, pair_index)
    return _vote_matrix(b.reshape(1, -1), pair_index)[0]


def winners(b: np.ndarray, pair_index: PairIndex) -> np.ndarray:
    """Decisions for a (samples x m) array of vote vectors: the hypothesis with the most
    votes, ties go to the smallest index."""
    b = _check_votes(b, pair_index)
    # argmax returns the first maximum
    return np.argmax(_vote_matrix(b, pair_index), axis=1)


def assign_block(b: Sequence[int], pair_index: PairIndex) -> int:
    """Index i of the set B_i the vote vector belongs to."""
    b = _check_votes(b, pair_index)
    counts = _vote_matrix(b.reshape(1, -1), pair_index)[0]

    res = [i for i in range(pair_index.r)
           if all(counts[i] > counts[j] for j in range(i)) and all(counts[i] >= counts[j] for j in range(i, pair_index.r))]
    assert len(res) == 1, 'Vote vector %s belongs to %d sets.' % (b.tolist(), len(res))

    return res[0]


def vote_vectors(m: int) -> np.ndarray:
    """All 2^m vote vectors as rows, the row number is the binary number b_1 b_2 ... b_m."""
    if m > MAX_ENUMERATED_PAIRS:
        raise ValueError('Enumeration of the vote vectors is limited to %d pairs, got %d. '
                         'Use the Monte Carlo evaluation.' % (MAX_ENUMERATED_PAIRS, m))

    rows = np.arange(2 ** m)
    return (rows[:, None] >> np.arange(m - 1, -1, -1)) & 1


def vote_rows(b: np.ndarray) -> np.ndarray:
    """Row numbers of vote vectors in the enumeration order of vote_vectors()."""
    b = np.asarray(b, dtype=np.int64)
    return b @ (1 << np.arange(b.shape[-1] - 1, -1, -1, dtype=np.int64))


class VotingTest(object):
    """Block voting test.

    The n sites are split into consecutive blocks, one block per pair of hypotheses in the
    pair order. Every block runs the Helstrom test of its pair, the test decides for the
    hypothesis with most votes.
    """

    def __init__(self, plan: BlockPlan, pair_index: PairIndex, block_tests: List[AbstractBlockTest], site_dim: int):
        if len(block_tests) != pair_index.m or len(plan.lengths) != pair_index.m:
            raise ValueError('Expected one block per pair.')

        self._plan = plan
        self._pair_index = pair_index
        self._block_tests = block_tests
        self._site_dim = site_dim
        self._assignment = None

    @property
    def plan(self) -> BlockPlan:
        return self._plan

    @property
    def pair_index(self) -> PairIndex:
        return self._pair_index

    @property
    def block_tests(self) -> List[AbstractBlockTest]:
        return self._block_tests

    @property
    def site_dim(self) -> int:
        return self._site_dim

    @property
    def n(self) -> int:
        return self._plan.n

    @property
    def assignment(self) -> np.ndarray:
        """Winner for every vote vector, in the enumeration order of vote_vectors()."""
        if self._assignment is None:
            self._assignment = winners(vote_vectors(self._pair_index.m), self._pair_index)
            self._assignment.setflags(write=False)

        return self._assignment


def build_voting_test(hs: HypothesisSet, plan: BlockPlan, max_dim: int = DEFAULT_MAX_DIMENSION) -> VotingTest:
    pair_index = PairIndex(hs.r)
    if len(plan.lengths) != pair_index.m:
        raise ValueError('The plan has %d blocks, %d pairs expected.' % (len(plan.lengths), pair_index.m))

    block_tests = []
    for (i, j), length in zip(pair_index.pairs, plan.lengths):
        logging.debug('Block test for the pair (%d, %d): %d sites' % (i + 1, j + 1, length))
        block_tests.append(block_test(hs.models[i], hs.models[j], length, max_dim, allow_pure=hs.is_product))

    return VotingTest(plan, pair_index, block_tests, hs.site_dim)
