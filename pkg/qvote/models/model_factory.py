import numpy as np
from qvote.config.validation import validate_hypothesis_set_data
from qvote.errors.hypothesis_validation import HypothesisValidationError
from qvote.linalg.functions import bloch_vector
from qvote.models.abstract_state_model import AbstractStateModel
from qvote.models.explicit_model import ExplicitSequenceModel
from qvote.models.hypothesis_set import HypothesisSet, validate_hypothesis_set
from qvote.models.markov_model import MarkovModel
from qvote.models.product_model import ProductModel


STATE_TYPE_PRODUCT = 'product'
STATE_TYPE_MARKOV = 'markov'
STATE_TYPE_PURE_QUBIT = 'pure_qubit'
STATE_TYPE_EXPLICIT = 'explicit'


class ModelFactory(object):

    SUPPORTED_TYPES = [
        STATE_TYPE_PRODUCT,
        STATE_TYPE_MARKOV,
        STATE_TYPE_PURE_QUBIT,
        STATE_TYPE_EXPLICIT,
    ]

    @classmethod
    def get_model(cls, state_config: dict) -> AbstractStateModel:
        state_type = state_config['type']
        if state_type not in cls.SUPPORTED_TYPES:
            raise ValueError('State type "%s" is not supported' % state_type)

        if state_type == STATE_TYPE_PRODUCT:
            return ProductModel(state_config['matrix'])

        if state_type == STATE_TYPE_MARKOV:
            initial = state_config.get('initial', 'stationary')
            return MarkovModel(state_config['transition'], None if initial == 'stationary' else initial)

        if state_type == STATE_TYPE_EXPLICIT:
            return ExplicitSequenceModel(state_config['densities'])

        theta, phi = state_config['bloch']
        vector = bloch_vector(theta, phi)

        return ProductModel(np.outer(vector, vector.conj()))


def load_hypothesis_set(data: dict, distinct_at_n: int = 1) -> HypothesisSet:
    """Builds a hypothesis set from its JSON representation.

    Raises:
        ValueError: If the document doesn't match the schema.
        HypothesisValidationError: If the hypotheses violate the model constraints.
    """
    data = validate_hypothesis_set_data(data)
    models = [ModelFactory.get_model(state_config) for state_config in data['states']]
    hypothesis_set = HypothesisSet(models, data['priors'])

    report = validate_hypothesis_set(hypothesis_set, distinct_at_n)
    if not report.is_valid:
        raise HypothesisValidationError(report)

    return hypothesis_set
