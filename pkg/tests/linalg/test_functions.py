import math
import unittest
from unittest import mock
import numpy as np
from scipy.linalg import LinAlgError
from qvote.errors.decomposition import DecompositionError
from qvote.errors.dimension_cap import DimensionCapError
from qvote.experiments.fixtures import random_density
from qvote.linalg.functions import bloch_vector, hermitize, kron_power, matrix_power, positive_part, \
    positive_support, pure_state, spectral_decompose, support, tensor, trace_distance, trace_inner, trace_norm
from qvote.linalg.operators import DensityMatrix, Projector
from tests.helpers.states import KET_0, KET_1, KET_PLUS, random_hermitian, random_projector


class TestFunctions(unittest.TestCase):

    def test_tensor_order(self):
        res = tensor(pure_state(KET_0), pure_state(KET_1))
        self.assertIsInstance(res, DensityMatrix)

        # the left factor is the most significant index
        np.testing.assert_allclose(res.entries, np.diag([0, 1, 0, 0]))

    def test_kron_power(self):
        rho = DensityMatrix(np.diag([0.5, 0.5]))
        np.testing.assert_allclose(kron_power(rho, 2).entries, np.eye(4) / 4)
        self.assertEqual(kron_power(rho, 1).dim, 2)

        with self.assertRaises(DimensionCapError):
            kron_power(rho, 14)

        with self.assertRaises(DimensionCapError):
            kron_power(rho, 3, max_dim=4)

        with self.assertRaises(ValueError):
            kron_power(rho, 0)

    def test_matrix_power(self):
        rho = np.diag([0.25, 0.75])
        np.testing.assert_allclose(matrix_power(rho, 0.5).entries, np.diag([0.5, np.sqrt(0.75)]), atol=1e-12)

        # the zero power is the support projector
        np.testing.assert_allclose(matrix_power(np.diag([1., 0.]), 0).entries, np.diag([1, 0]), atol=1e-12)

        with self.assertRaises(ValueError):
            matrix_power(rho, 1.5)

    def test_positive_part(self):
        operator = np.diag([0.7, -0.3])
        np.testing.assert_allclose(positive_part(operator).entries, np.diag([0.7, 0]), atol=1e-12)

        projector = positive_support(operator)
        self.assertIsInstance(projector, Projector)
        np.testing.assert_allclose(projector.entries, np.diag([1, 0]), atol=1e-12)

        # the kernel of the positive part is excluded
        np.testing.assert_allclose(positive_support(np.zeros((2, 2))).entries, np.zeros((2, 2)), atol=1e-12)

    def test_support(self):
        rho = pure_state(KET_PLUS)
        np.testing.assert_allclose(support(rho).entries, rho.entries, atol=1e-12)

    def test_trace_functions(self):
        self.assertAlmostEqual(trace_norm(np.diag([0.5, -0.3])), 0.8, places=12)
        self.assertAlmostEqual(trace_distance(pure_state(KET_0), pure_state(KET_1)), 1, places=12)
        self.assertAlmostEqual(trace_distance(pure_state(KET_0), pure_state(KET_PLUS)), math.sqrt(0.5), places=12)
        self.assertAlmostEqual(trace_inner(np.diag([1, 0]), np.diag([0.3, 0.7])), 0.3, places=12)

        with self.assertRaises(ValueError):
            trace_inner(np.eye(2), np.eye(3))

    def test_hermitize(self):
        operator = hermitize([[1, 2], [0, 1]])
        np.testing.assert_allclose(operator.entries, [[1, 1], [1, 1]])

    def test_pure_state(self):
        np.testing.assert_allclose(pure_state(KET_PLUS).entries, np.full((2, 2), 0.5), atol=1e-12)

        with self.assertRaises(ValueError):
            pure_state([1, 1])

    def test_bloch_vector(self):
        np.testing.assert_allclose(bloch_vector(0, 0), KET_0, atol=1e-12)
        np.testing.assert_allclose(bloch_vector(math.pi, 0), KET_1, atol=1e-12)
        np.testing.assert_allclose(bloch_vector(math.pi / 2, 0), KET_PLUS, atol=1e-12)

    def test_spectral_decompose(self):
        rng = np.random.default_rng(3)
        operator = random_hermitian(8, rng)
        eigenvalues, eigenvectors = spectral_decompose(operator)

        np.testing.assert_allclose((eigenvectors * eigenvalues) @ eigenvectors.conj().T, operator, atol=1e-10)
        np.testing.assert_allclose(eigenvectors.conj().T @ eigenvectors, np.eye(8), atol=1e-10)
        self.assertTrue(np.all(np.diff(eigenvalues) >= 0))

        pauli_x = np.array([[0, 1], [1, 0]])
        np.testing.assert_allclose(spectral_decompose(pauli_x).eigenvalues, [-1, 1], atol=1e-12)

    def test_decomposition_error(self):
        with mock.patch('qvote.linalg.functions.eigh', side_effect=LinAlgError('no convergence')):
            with self.assertRaises(DecompositionError):
                spectral_decompose(np.eye(2))

    def test_support_convention(self):
        # a valid density matrix with a round-off negative eigenvalue
        rho = DensityMatrix(np.diag([0.5, 0.5 + 8e-11, -8e-11]))
        expected = np.diag([1, 1, 0])

        np.testing.assert_allclose(matrix_power(rho, 0).entries, expected, atol=1e-12)
        np.testing.assert_allclose(support(rho).entries, expected, atol=1e-12)
        np.testing.assert_allclose(support(rho).entries, matrix_power(rho, 0).entries, atol=1e-14)

        rho = DensityMatrix(0.6 * pure_state(KET_0).entries + 0.4 * pure_state(KET_PLUS).entries)
        rho = tensor(rho, pure_state(KET_1))
        np.testing.assert_allclose(support(rho).entries, matrix_power(rho, 0).entries, atol=1e-12)

        rho = random_density(4, np.random.default_rng(4))
        np.testing.assert_allclose(support(rho).entries, np.eye(4), atol=1e-10)

        # a general Hermitian operator keeps its negative directions
        np.testing.assert_allclose(support(np.diag([0.5, -0.5, 0])).entries, np.diag([1, 1, 0]), atol=1e-12)

    def test_jordan_decomposition(self):
        rng = np.random.default_rng(6)
        for _ in range(10):
            operator = random_hermitian(5, rng)
            difference = positive_part(operator).entries - positive_part(-operator).entries
            np.testing.assert_allclose(difference, operator, atol=1e-10)

    def test_tensor_identities(self):
        rng = np.random.default_rng(7)
        a, c = random_hermitian(2, rng), random_hermitian(2, rng)
        b, d = random_hermitian(3, rng), random_hermitian(3, rng)

        left = tensor(a, b).entries @ tensor(c, d).entries
        np.testing.assert_allclose(left, tensor(a @ c, b @ d).entries, atol=1e-10)
        self.assertAlmostEqual(np.trace(tensor(a, b).entries), np.trace(a) * np.trace(b), places=10)

    def test_trace_inner_range(self):
        rng = np.random.default_rng(8)
        for _ in range(100):
            dim = int(rng.integers(2, 6))
            value = trace_inner(random_density(dim, rng), random_projector(dim, int(rng.integers(0, dim + 1)), rng))
            self.assertGreaterEqual(value, -1e-12)
            self.assertLessEqual(value, 1 + 1e-12)


if __name__ == '__main__':
    unittest.main()
