import unittest
from itertools import product
import numpy as np
from qvote.binary.block_tests import DenseBlockTest, PureProductBlockTest
from qvote.experiments.fixtures import markov_pair
from qvote.multi.pair_index import PairIndex
from qvote.multi.voting import MAX_ENUMERATED_PAIRS, VotingTest, assign_block, build_voting_test, vote_counts, \
    vote_rows, vote_vectors, winners
from qvote.multi.weights import BlockPlan, block_plan
from tests.helpers.states import random_product_set


class TestVoting(unittest.TestCase):

    def test_vote_counts(self):
        pair_index = PairIndex(3)
        self.assertEqual(vote_counts([0, 0, 0], pair_index).tolist(), [2, 1, 0])
        self.assertEqual(vote_counts([1, 1, 1], pair_index).tolist(), [0, 1, 2])

        with self.assertRaises(ValueError):
            vote_counts([0, 1], pair_index)

        with self.assertRaises(ValueError):
            vote_counts([0, 2, 1], pair_index)

    def test_winners(self):
        pair_index = PairIndex(3)
        # three-way tie goes to the first hypothesis
        self.assertEqual(assign_block([1, 0, 1], pair_index), 0)
        self.assertEqual(assign_block([1, 1, 0], pair_index), 1)
        self.assertEqual(winners(np.array([[1, 0, 1], [1, 1, 0], [1, 1, 1]]), pair_index).tolist(), [0, 1, 2])

    def test_partition(self):
        # every vote vector is in exactly one set and the vectorized winners agree
        for r in (2, 3, 4):
            pair_index = PairIndex(r)
            b = vote_vectors(pair_index.m)
            expected = [assign_block(row, pair_index) for row in b]
            self.assertEqual(winners(b, pair_index).tolist(), expected)
            self.assertEqual(set(expected), set(range(r)))

    def test_vote_vectors(self):
        b = vote_vectors(3)
        self.assertEqual(b.shape, (8, 3))
        self.assertEqual(b[5].tolist(), [1, 0, 1])
        self.assertEqual([tuple(row) for row in b], list(product((0, 1), repeat=3)))
        self.assertEqual(vote_rows(b).tolist(), list(range(8)))

        with self.assertRaises(ValueError):
            vote_vectors(MAX_ENUMERATED_PAIRS + 1)

    def test_build_voting_test(self):
        hs = random_product_set(3, 1)
        test = build_voting_test(hs, block_plan(7, [0.5, 0.3, 0.2]))
        self.assertEqual(test.n, 7)
        self.assertEqual(test.site_dim, 2)
        self.assertEqual([block.n for block in test.block_tests], [4, 2, 1])
        self.assertEqual(test.assignment.tolist(), winners(vote_vectors(3), test.pair_index).tolist())

        with self.assertRaises(ValueError):
            test.assignment[0] = 2

        with self.assertRaises(ValueError):
            build_voting_test(hs, block_plan(4, [0.5, 0.5]))

    def test_block_test_types(self):
        hs = markov_pair()
        test = build_voting_test(hs, BlockPlan(3, np.ones(1), (3,)))
        self.assertIsInstance(test.block_tests[0], DenseBlockTest)

        hs = random_product_set(2, 4)
        test = build_voting_test(hs, BlockPlan(3, np.ones(1), (3,)))
        self.assertIsInstance(test.block_tests[0], DenseBlockTest)

    def test_inconsistent_blocks(self):
        hs = random_product_set(3, 1)
        test = build_voting_test(hs, block_plan(6, [1 / 3] * 3))
        with self.assertRaises(ValueError):
            VotingTest(test.plan, PairIndex(4), test.block_tests, 2)


if __name__ == '__main__':
    unittest.main()
