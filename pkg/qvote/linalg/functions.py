import logging
from functools import reduce
from typing import Union
import numpy as np
from scipy.linalg import eigh, LinAlgError
from qvote.errors.decomposition import DecompositionError
from qvote.errors.dimension_cap import DimensionCapError
from qvote.linalg.operators import ComplexMatrix, HermitianOperator, DensityMatrix, Projector, \
    SpectralDecomposition, EIGEN_THRESHOLD, DEFAULT_MAX_DIMENSION


MatrixLike = Union[ComplexMatrix, np.ndarray]

# largest imaginary part of tr(AB) that is attributed to round-off for Hermitian A and B
IMAGINARY_TOLERANCE = 1e-10


def as_array(matrix: MatrixLike) -> np.ndarray:
    if isinstance(matrix, ComplexMatrix):
        return matrix.entries

    return np.asarray(matrix, dtype=complex)


def check_dimension(dim: int, max_dim: int = DEFAULT_MAX_DIMENSION):
    """Raises an error if a matrix of the given dimension shouldn't be constructed."""
    if dim > max_dim:
        raise DimensionCapError(dim, max_dim)


def hermitize(matrix: MatrixLike) -> HermitianOperator:
    """Returns (M + M^†) / 2."""
    matrix = ComplexMatrix(as_array(matrix)).entries
    return HermitianOperator.from_trusted((matrix + matrix.conj().T) / 2)


def spectral_decompose(operator: MatrixLike) -> SpectralDecomposition:
    """Eigen-decomposition of a Hermitian operator: eigenvalues in ascending order
    and the unitary matrix of the corresponding eigenvectors (as columns)."""
    matrix = as_array(operator)
    try:
        eigenvalues, eigenvectors = eigh(matrix)
    except LinAlgError as e:
        raise DecompositionError('Eigen-decomposition of a %dx%d matrix failed: %s'
                                 % (matrix.shape[0], matrix.shape[0], str(e)))

    return SpectralDecomposition(eigenvalues, eigenvectors)


def kernel_threshold(eigenvalues: np.ndarray) -> float:
    """Eigenvalues with absolute values at or below the threshold belong to the kernel."""
    if not eigenvalues.size:
        return 0.

    return EIGEN_THRESHOLD * float(np.max(np.abs(eigenvalues)))


def spectral_function(decomposition: SpectralDecomposition, values: np.ndarray) -> np.ndarray:
    """Returns U diag(values) U^†."""
    vectors = decomposition.eigenvectors
    return (vectors * values) @ vectors.conj().T


def support_mask(eigenvalues: np.ndarray, positive: bool = True) -> np.ndarray:
    """Marks the eigenvalues outside the kernel. Negative eigenvalues of a positive operator
    are round-off and belong to the kernel."""
    values = np.maximum(eigenvalues, 0.) if positive else np.abs(eigenvalues)
    return values > kernel_threshold(eigenvalues)


def powered_eigenvalues(eigenvalues: np.ndarray, t: float) -> np.ndarray:
    """Maps eigenvalues to their t-th powers using the support convention:
    kernel eigenvalues map to 0 for every t, including t = 0."""
    clipped = np.maximum(eigenvalues, 0.)
    on_support = support_mask(eigenvalues)
    res = np.zeros_like(clipped)
    res[on_support] = clipped[on_support] ** t

    return res


def matrix_power(rho: MatrixLike, t: float) -> HermitianOperator:
    if not 0 <= t <= 1:
        raise ValueError('The exponent must be in the [0, 1] interval, got %g.' % t)

    decomposition = spectral_decompose(rho)
    return HermitianOperator.from_trusted(spectral_function(decomposition,
                                                            powered_eigenvalues(decomposition.eigenvalues, t)))


def positive_part(operator: MatrixLike) -> HermitianOperator:
    decomposition = spectral_decompose(operator)
    return HermitianOperator.from_trusted(spectral_function(decomposition,
                                                            np.maximum(decomposition.eigenvalues, 0.)))


def _projector_onto(vectors: np.ndarray) -> Projector:
    return Projector.from_trusted(vectors @ vectors.conj().T)


def support(operator: MatrixLike) -> Projector:
    """Projector onto the span of eigenvectors with non-negligible eigenvalues.

    Density matrices and projectors use the same kernel as matrix_power, so that
    support(rho) equals matrix_power(rho, 0).
    """
    eigenvalues, eigenvectors = spectral_decompose(operator)
    on_support = support_mask(eigenvalues, positive=isinstance(operator, (DensityMatrix, Projector)))

    return _projector_onto(eigenvectors[:, on_support])


def positive_support(operator: MatrixLike) -> Projector:
    """Same as support(positive_part(operator)), but with a single decomposition."""
    eigenvalues, eigenvectors = spectral_decompose(operator)
    positive = np.maximum(eigenvalues, 0.)
    on_support = positive > kernel_threshold(positive)

    return _projector_onto(eigenvectors[:, on_support])


def tensor(a: MatrixLike, b: MatrixLike, max_dim: int = DEFAULT_MAX_DIMENSION) -> ComplexMatrix:
    """Kronecker product, the left factor corresponds to the lower site indices."""
    dim = as_array(a).shape[0] * as_array(b).shape[0]
    check_dimension(dim, max_dim)

    # the Kronecker product preserves hermiticity, positivity, unit trace and idempotency
    for cls in (DensityMatrix, Projector, HermitianOperator):
        if isinstance(a, cls) and isinstance(b, cls):
            return cls.from_trusted(np.kron(as_array(a), as_array(b)))

    return ComplexMatrix.from_trusted(np.kron(as_array(a), as_array(b)))


def kron_power(matrix: MatrixLike, n: int, max_dim: int = DEFAULT_MAX_DIMENSION) -> ComplexMatrix:
    """The n-fold Kronecker power of a matrix."""
    if n < 1:
        raise ValueError('The number of factors must be positive.')

    if not isinstance(matrix, ComplexMatrix):
        matrix = ComplexMatrix(matrix)

    check_dimension(matrix.dim ** n, max_dim)
    logging.debug('Kronecker power: %d factors of dimension %d' % (n, matrix.dim))

    return reduce(lambda x, y: tensor(x, y, max_dim), [matrix] * n)


def trace_inner(a: MatrixLike, b: MatrixLike) -> float:
    """Returns Re tr(AB) for Hermitian A and B."""
    a, b = as_array(a), as_array(b)
    if a.shape != b.shape:
        raise ValueError('Dimension mismatch: %s and %s.' % (a.shape, b.shape))

    # tr(AB) without forming the product
    value = np.einsum('ij,ji->', a, b)
    if abs(value.imag) >= IMAGINARY_TOLERANCE:
        raise ValueError('tr(AB) has a non-negligible imaginary part (%.3g), the operators are not Hermitian.'
                         % value.imag)

    return float(value.real)


def trace_norm(operator: MatrixLike) -> float:
    """Sum of the absolute values of the eigenvalues."""
    return float(np.sum(np.abs(spectral_decompose(operator).eigenvalues)))


def trace_distance(rho1: MatrixLike, rho2: MatrixLike) -> float:
    a, b = as_array(rho1), as_array(rho2)
    if a.shape != b.shape:
        raise ValueError('Dimension mismatch: %s and %s.' % (a.shape, b.shape))

    return trace_norm(hermitize(a - b)) / 2


def pure_state(vector) -> DensityMatrix:
    """Returns |ψ><ψ| for a normalized vector."""
    vector = np.asarray(vector, dtype=complex).ravel()
    if abs(np.linalg.norm(vector) - 1) > 1e-10:
        raise ValueError('A normalized state vector was expected.')

    return DensityMatrix.from_trusted(np.outer(vector, vector.conj()))


def bloch_vector(theta: float, phi: float) -> np.ndarray:
    """Qubit state vector (cos(θ/2), e^{iφ} sin(θ/2)) for the Bloch angles in radians."""
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])
