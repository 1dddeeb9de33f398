from collections import namedtuple
from typing import List, Sequence
import numpy as np
from qvote.linalg.functions import trace_distance
from qvote.models.abstract_state_model import AbstractStateModel


PRIORS_SUM_TOLERANCE = 1e-12
DISTINCTNESS_THRESHOLD = 1e-9


Violation = namedtuple('Violation', ['constraint', 'message'])


class HypothesisSet(object):
    """Hypothetic states with their prior probabilities. Hypotheses are indexed from 0."""

    def __init__(self, models: Sequence[AbstractStateModel], priors: Sequence[float]):
        self._models = list(models)
        self._priors = np.array(priors, dtype=float)
        self._priors.setflags(write=False)

    @property
    def models(self) -> List[AbstractStateModel]:
        return self._models

    @property
    def priors(self) -> np.ndarray:
        return self._priors

    @property
    def r(self) -> int:
        """Number of hypotheses."""
        return len(self._models)

    @property
    def site_dim(self) -> int:
        return self._models[0].site_dim

    @property
    def is_product(self) -> bool:
        return all(model.kind == 'product' for model in self._models)

    def with_uniform_priors(self) -> 'HypothesisSet':
        return HypothesisSet(self._models, [1. / self.r] * self.r)


class ValidationReport(object):

    def __init__(self, violations: List[Violation]):
        self._violations = violations

    @property
    def violations(self) -> List[Violation]:
        return self._violations

    @property
    def is_valid(self) -> bool:
        return not self._violations

    def __str__(self):
        return '\n'.join('- [%s] %s' % (violation.constraint, violation.message) for violation in self._violations)


def validate_hypothesis_set(hs: HypothesisSet, distinct_at_n: int = 1) -> ValidationReport:
    """Checks the hypothesis set constraints. Never raises, all violated constraints
    are listed in the report.

    Args:
        hs: Hypothesis set.
        distinct_at_n: Block size at which the pairwise distinctness is checked. Two different
            Markov chains can have the same single-site marginals, so a deeper check may be needed.
    """
    violations = []

    if hs.r < 2:
        violations.append(Violation('count', 'At least 2 hypotheses are required, got %d.' % hs.r))

    if len(hs.priors) != hs.r:
        violations.append(Violation('priors', 'Expected %d priors, got %d.' % (hs.r, len(hs.priors))))
    else:
        for i, prior in enumerate(hs.priors):
            if not 0 < prior < 1:
                violations.append(Violation('priors', 'The prior of the hypothesis %d must be in the (0, 1) '
                                                      'interval, got %g.' % (i + 1, prior)))

        if abs(hs.priors.sum() - 1) > PRIORS_SUM_TOLERANCE:
            violations.append(Violation('priors', 'Priors must sum to 1, got %.15g.' % hs.priors.sum()))

    if len(set(model.site_dim for model in hs.models)) > 1:
        violations.append(Violation('site-dim', 'All states must have the same site dimension, got %s.'
                                    % ', '.join(str(model.site_dim) for model in hs.models)))

    models_are_valid = True
    for i, model in enumerate(hs.models):
        for message in model.violations():
            models_are_valid = False
            violations.append(Violation('state', 'State %d (%s): %s' % (i + 1, model.kind, message)))

    # distinctness can be checked only for valid states of the same dimension
    if models_are_valid and not any(violation.constraint == 'site-dim' for violation in violations):
        violations += _check_distinctness(hs, distinct_at_n)

    return ValidationReport(violations)


def _check_distinctness(hs: HypothesisSet, n: int) -> List[Violation]:
    res = []
    densities = [model.local_density(n) for model in hs.models]
    for i in range(hs.r):
        for j in range(i + 1, hs.r):
            distance = trace_distance(densities[i], densities[j])
            if distance <= DISTINCTNESS_THRESHOLD:
                res.append(Violation('distinct', 'States %d and %d coincide at n=%d (trace distance %.3g).'
                                     % (i + 1, j + 1, n, distance)))

    return res
