import numpy as np
from qvote.linalg.functions import MatrixLike, as_array, hermitize, positive_support, trace_inner, trace_norm
from qvote.linalg.operators import Projector, PROJECTOR_TOLERANCE


PRIORS_TOLERANCE = 1e-12


class BinaryTest(object):
    """Two-outcome projective test: pi_1 accepts the first hypothesis, pi_2 the second one."""

    def __init__(self, pi_1: Projector, pi_2: Projector):
        if not np.allclose(pi_1.entries + pi_2.entries, np.eye(pi_1.dim), rtol=0, atol=PROJECTOR_TOLERANCE):
            raise ValueError('Projectors of a binary test must sum to the identity.')

        self._pi_1 = pi_1
        self._pi_2 = pi_2

    @classmethod
    def from_projector(cls, pi_1: Projector) -> 'BinaryTest':
        return cls(pi_1, Projector.from_trusted(np.eye(pi_1.dim) - pi_1.entries))

    @property
    def pi_1(self) -> Projector:
        return self._pi_1

    @property
    def pi_2(self) -> Projector:
        return self._pi_2

    @property
    def dim(self) -> int:
        return self._pi_1.dim


def helstrom_test(rho1: MatrixLike, rho2: MatrixLike, p1: float = 0.5, p2: float = 0.5) -> BinaryTest:
    """Holevo-Helstrom test: pi_1 is the support projector of the positive part of p1 rho1 - p2 rho2.

    With equal priors (the default) this is the support of (rho1 - rho2)_+, the test used
    by the block construction.
    """
    a, b = as_array(rho1), as_array(rho2)
    if a.shape != b.shape:
        raise ValueError('Dimension mismatch: %s and %s.' % (a.shape, b.shape))

    return BinaryTest.from_projector(positive_support(hermitize(p1 * a - p2 * b)))


def check_binary_priors(p1: float, p2: float):
    if not (0 < p1 < 1 and 0 < p2 < 1) or abs(p1 + p2 - 1) > PRIORS_TOLERANCE:
        raise ValueError('Priors must be in the (0, 1) interval and sum to 1, got %g and %g.' % (p1, p2))


def binary_error(rho1: MatrixLike, rho2: MatrixLike, p1: float, p2: float, test: BinaryTest) -> float:
    """Averaged error probability p1 tr[rho1 (1 - pi_1)] + p2 tr[rho2 pi_1]."""
    check_binary_priors(p1, p2)
    return p1 * (1 - trace_inner(rho1, test.pi_1)) + p2 * trace_inner(rho2, test.pi_1)


def helstrom_error(rho1: MatrixLike, rho2: MatrixLike, p1: float, p2: float) -> float:
    """Minimal averaged error probability (1 - ||p1 rho1 - p2 rho2||_1) / 2."""
    check_binary_priors(p1, p2)
    return (1 - trace_norm(hermitize(p1 * as_array(rho1) - p2 * as_array(rho2)))) / 2
