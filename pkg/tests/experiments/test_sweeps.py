import math
import unittest
from qvote.experiments.fixtures import markov_pair, qubit_triple
from qvote.experiments.sweeps import binary_sweep, fit_binary_sweep, fit_multi_sweep, multi_sweep
from qvote.multi.design import design_test
from tests.helpers.states import pure_product_pair


class TestSweeps(unittest.TestCase):

    def test_binary_closed_form(self):
        n_list = list(range(8, 15))
        rows = binary_sweep(pure_product_pair(), n_list)

        self.assertEqual([row.n for row in rows], n_list)
        for row in rows:
            self.assertAlmostEqual(row.error, (1 - math.sqrt(1 - 2. ** -row.n)) / 2, delta=1e-10)
            self.assertAlmostEqual(row.rate, -math.log(row.error) / row.n, places=12)

        fit = fit_binary_sweep(rows, window=n_list)
        self.assertLessEqual(abs(fit.slope - math.log(2)), 0.15 * math.log(2))

    def test_two_hypotheses_agree(self):
        hs = pure_product_pair(0.3)
        n_list = [2, 5, 9]
        binary_rows = binary_sweep(hs, n_list)
        multi_rows = multi_sweep(hs, design_test(hs), n_list)

        for binary_row, multi_row in zip(binary_rows, multi_rows):
            self.assertEqual(multi_row.lengths, (multi_row.n,))
            self.assertAlmostEqual(binary_row.error, multi_row.result.averaged_error, delta=1e-12)

    def test_binary_requires_pair(self):
        with self.assertRaises(ValueError):
            binary_sweep(qubit_triple(), [3])

    def test_markov_binary_sweep(self):
        rows = binary_sweep(markov_pair(), [2, 4, 6])
        errors = [row.error for row in rows]
        self.assertEqual(errors, sorted(errors, reverse=True))

    def test_multi_sweep(self):
        hs = qubit_triple()
        design = design_test(hs)
        rows = multi_sweep(hs, design, [6, 9, 12, 15])

        for row in rows:
            self.assertEqual(sum(row.lengths), row.n)
            for bound, error in zip(row.union_bound, row.result.errors):
                self.assertGreaterEqual(bound + 1e-12, error)

        fits = fit_multi_sweep(rows, window=[6, 9, 12, 15])
        self.assertEqual(len(fits.individual), 3)
        self.assertGreater(fits.averaged.slope, 0)

    def test_fit_not_available(self):
        hs = qubit_triple()
        rows = multi_sweep(hs, design_test(hs), [6, 9])
        with self.assertLogs(level='WARNING'):
            fits = fit_multi_sweep(rows)

        self.assertIsNone(fits.averaged)


if __name__ == '__main__':
    unittest.main()
