import os
import unittest
from qvote.config.config_utils import load_config
from qvote.errors.hypothesis_validation import HypothesisValidationError


DATA_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), 'data'))


class TestConfigUtils(unittest.TestCase):

    def test_experiment_file(self):
        config = load_config(os.path.join(DATA_DIR, 'experiment.yaml'))

        self.assertEqual(config.hypotheses_file, os.path.join(DATA_DIR, 'triple.yaml'))
        self.assertEqual(config.n_range, [6, 9, 12])
        self.assertEqual(config.method, 'monte-carlo')
        self.assertEqual(config.samples, 5000)
        self.assertEqual(config.seed, 7)
        self.assertEqual(config.fit_window, [6, 9, 12])
        self.assertIsNone(config.weights)

        hs = config.hypothesis_set
        self.assertEqual(hs.r, 3)
        self.assertEqual(hs.priors.tolist(), [0.2, 0.3, 0.5])
        self.assertIs(config.hypothesis_set, hs)

    def test_bare_hypothesis_set(self):
        config = load_config(os.path.join(DATA_DIR, 'triple.yaml'))
        self.assertIsNone(config.hypotheses_file)
        self.assertIsNone(config.n_range)
        self.assertEqual(config.method, 'factorized')
        self.assertEqual(config.hypothesis_set.r, 3)

    def test_overrides(self):
        overrides = {
            'nRange': {'min': 3, 'max': 4},
            'method': 'factorized',
            'samples': None,
            'weights': [1, 1, 2],
            'uniformPriors': True,
        }
        config = load_config(os.path.join(DATA_DIR, 'experiment.yaml'), overrides)

        self.assertEqual(config.n_range, [3, 4])
        self.assertEqual(config.method, 'factorized')
        self.assertEqual(config.samples, 5000)
        self.assertEqual(config.weights, [1, 1, 2])
        self.assertEqual(config.hypothesis_set.priors.tolist(), [1 / 3] * 3)

    def test_missing_file(self):
        with self.assertRaises(ValueError):
            load_config(os.path.join(DATA_DIR, 'missing.yaml'))

        with self.assertRaises(ValueError):
            load_config('')

    def test_invalid_file(self):
        with self.assertRaises(ValueError):
            load_config(os.path.join(DATA_DIR, 'invalid.yaml'))

        # the schema is fine, the states are identical
        config = load_config(os.path.join(DATA_DIR, 'invalid.yaml'), {'nRange': [2, 3]})
        with self.assertRaises(HypothesisValidationError):
            _ = config.hypothesis_set


if __name__ == '__main__':
    unittest.main()
