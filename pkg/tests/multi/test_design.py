import math
import unittest
import numpy as np
from qvote.binary.chernoff import chernoff_distance
from qvote.experiments.fixtures import markov_pair, qubit_triple, random_density
from qvote.linalg.functions import pure_state
from qvote.models.explicit_model import ExplicitSequenceModel
from qvote.models.product_model import ProductModel
from qvote.multi.design import PairDistance, design_test, pair_distance, pairwise_distances
from tests.helpers.states import KET_0, KET_PLUS


LN2 = math.log(2)


def _distances(values):
    pairs = [(0, 1), (0, 2), (1, 2)]
    return [PairDistance(pair, value, None, 'single-letter') for pair, value in zip(pairs, values)]


class TestDesign(unittest.TestCase):

    def test_optimal_design(self):
        design = design_test(qubit_triple(), distances=_distances([LN2, LN2, 2 * LN2]))

        np.testing.assert_allclose(design.weights, [0.4, 0.4, 0.2], atol=1e-12)
        self.assertEqual(design.weights_source, 'optimal')
        self.assertAlmostEqual(design.phi, 0.4, places=12)
        self.assertAlmostEqual(design.xi_min, LN2, places=12)
        self.assertEqual(design.least_favorable_pair, (0, 1))
        self.assertAlmostEqual(design.predicted_exponent, 0.4 * LN2, places=12)

    def test_manual_weights(self):
        design = design_test(qubit_triple(), weights=[1, 1, 2], distances=_distances([LN2, LN2, 2 * LN2]))

        np.testing.assert_allclose(design.weights, [0.25, 0.25, 0.5])
        self.assertEqual(design.weights_source, 'manual')
        self.assertAlmostEqual(design.predicted_exponent, 0.25 * LN2, places=12)

        with self.assertRaises(ValueError):
            design_test(qubit_triple(), weights=[0.5, 0.5], distances=_distances([LN2, LN2, 2 * LN2]))

    def test_infinite_distance(self):
        with self.assertLogs(level='WARNING'):
            design = design_test(qubit_triple(), distances=_distances([LN2, math.inf, 2 * LN2]))

        np.testing.assert_allclose(design.weights, [2 / 3, 0, 1 / 3], atol=1e-12)
        self.assertAlmostEqual(design.phi, 2 / 3, places=12)
        self.assertAlmostEqual(design.predicted_exponent, 2 / 3 * LN2, places=12)

    def test_all_distances_infinite(self):
        with self.assertLogs(level='WARNING'):
            design = design_test(qubit_triple(), distances=_distances([math.inf] * 3))

        np.testing.assert_allclose(design.weights, [1 / 3] * 3)
        self.assertEqual(design.phi, 1)
        self.assertEqual(design.xi_min, math.inf)
        self.assertIsNone(design.least_favorable_pair)

    def test_pair_distance_sources(self):
        model1, model2 = ProductModel(pure_state(KET_0)), ProductModel(pure_state(KET_PLUS))
        value, s_star, source = pair_distance(model1, model2)
        self.assertAlmostEqual(value, LN2, places=6)
        self.assertEqual(source, 'single-letter')

        hs = markov_pair()
        value, s_star, source = pair_distance(hs.models[0], hs.models[1])
        self.assertGreater(value, 0)
        self.assertIsNone(s_star)
        self.assertEqual(source, 'markov-oracle')

        rng = np.random.default_rng(12)
        base1, base2 = random_density(2, rng).entries, random_density(2, rng).entries
        model1 = ExplicitSequenceModel([base1, np.kron(base1, base1)])
        model2 = ExplicitSequenceModel([base2, np.kron(base2, base2)])
        value, _, source = pair_distance(model1, model2)
        self.assertEqual(source, 'mean-estimate')
        self.assertAlmostEqual(value, chernoff_distance(base1, base2).value, delta=1e-6)

    def test_pairwise_distances(self):
        distances = pairwise_distances(qubit_triple())
        self.assertEqual([distance.pair for distance in distances], [(0, 1), (0, 2), (1, 2)])
        self.assertEqual(distances[0].source, 'single-letter')

        design = design_test(qubit_triple(), distances=distances)
        self.assertEqual(design.least_favorable_pair, (0, 1))


if __name__ == '__main__':
    unittest.main()
