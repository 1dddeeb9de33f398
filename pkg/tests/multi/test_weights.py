import math
import unittest
import numpy as np
from qvote.multi.weights import block_plan, normalize_weights, optimal_weights, phi_factor


class TestWeights(unittest.TestCase):

    def test_phi_factor(self):
        phi, xi_min = phi_factor([math.log(2), math.log(2), 2 * math.log(2)])
        self.assertAlmostEqual(phi, 0.4, places=12)
        self.assertAlmostEqual(xi_min, math.log(2), places=12)

        phi, _ = phi_factor([0.3] * 4)
        self.assertAlmostEqual(phi, 0.25, places=12)

        phi, _ = phi_factor([0.5])
        self.assertEqual(phi, 1)

    def test_phi_bounds(self):
        rng = np.random.default_rng(11)
        for _ in range(1000):
            m = int(rng.integers(1, 11))
            phi, _ = phi_factor(rng.uniform(0.01, 10., size=m))
            self.assertGreaterEqual(phi, 1 / m - 1e-12)
            self.assertLessEqual(phi, 1 + 1e-12)

    def test_optimal_weights(self):
        xi = [math.log(2), math.log(2), 2 * math.log(2)]
        weights = optimal_weights(xi)
        np.testing.assert_allclose(weights, [0.4, 0.4, 0.2], atol=1e-12)

        # all products w_k * xi_k are equal to phi * min(xi)
        phi, xi_min = phi_factor(xi)
        np.testing.assert_allclose(weights * np.array(xi), phi * xi_min, atol=1e-12)

    def test_optimal_weights_maximize_the_minimum(self):
        rng = np.random.default_rng(23)
        xi = rng.uniform(0.05, 3., size=5)
        weights = optimal_weights(xi)
        best = np.min(weights * xi)

        for _ in range(1000):
            perturbed = np.clip(weights + rng.normal(scale=0.05, size=5), 0, None)
            if not perturbed.sum():
                continue

            self.assertLessEqual(np.min(perturbed / perturbed.sum() * xi), best + 1e-12)

        # random points of the simplex
        for w in rng.dirichlet(np.ones(5), size=1000):
            self.assertLessEqual(np.min(w * xi), best + 1e-12)

    def test_invalid_distances(self):
        for xi in ([], [0.1, 0.], [0.1, -1], [0.1, math.inf], [math.nan]):
            with self.assertRaises(ValueError):
                phi_factor(xi)

            with self.assertRaises(ValueError):
                optimal_weights(xi)

    def test_normalize_weights(self):
        np.testing.assert_allclose(normalize_weights([1, 1, 2]), [0.25, 0.25, 0.5])
        for weights in ([], [0, 0], [1, -1]):
            with self.assertRaises(ValueError):
                normalize_weights(weights)

    def test_block_plan(self):
        self.assertEqual(block_plan(10, [0.4, 0.4, 0.2]).lengths, (4, 4, 2))
        self.assertEqual(block_plan(3, [0.4, 0.4, 0.2]).lengths, (1, 1, 1))
        self.assertEqual(block_plan(7, [0.5, 0.3, 0.2]).lengths, (4, 2, 1))
        self.assertEqual(block_plan(5, [1.]).lengths, (5,))

    def test_block_plan_ties(self):
        # equal remainders go to the smaller index
        self.assertEqual(block_plan(4, [1 / 3] * 3).lengths, (2, 1, 1))
        self.assertEqual(block_plan(5, [1 / 3] * 3).lengths, (2, 2, 1))

    def test_block_plan_minimum_length(self):
        self.assertEqual(block_plan(3, [0.9, 0.05, 0.05]).lengths, (1, 1, 1))
        self.assertEqual(block_plan(10, [1., 0., 0.]).lengths, (8, 1, 1))

        rng = np.random.default_rng(3)
        for _ in range(100):
            weights = rng.dirichlet(np.ones(6))
            n = int(rng.integers(6, 60))
            lengths = block_plan(n, weights).lengths
            self.assertEqual(sum(lengths), n)
            self.assertGreaterEqual(min(lengths), 1)

    def test_invalid_plan(self):
        with self.assertRaises(ValueError):
            block_plan(2, [0.4, 0.4, 0.2])

        with self.assertRaises(ValueError):
            block_plan(10, [0.5, 0.4])

        with self.assertRaises(ValueError):
            block_plan(10, [1.5, -0.5])


if __name__ == '__main__':
    unittest.main()
