from schema import Schema, And, Use, Optional, Or, SchemaError
from qvote.linalg.operators import DEFAULT_MAX_DIMENSION


METHOD_FACTORIZED = 'factorized'
METHOD_DENSE = 'dense'
METHOD_MONTE_CARLO = 'monte-carlo'

EVALUATION_METHODS = [METHOD_FACTORIZED, METHOD_DENSE, METHOD_MONTE_CARLO]

DEFAULT_SAMPLES = 100000
DEFAULT_S_GRID_SIZE = 101
DEFAULT_CHERNOFF_GRID_SIZE = 201


def _number():
    return And(Or(int, float), Use(float))


def _positive_int():
    return And(int, lambda x: x > 0)


def validate_hypothesis_set_data(data):
    number = _number()

    # a complex entry is either a real number or a [re, im] pair
    complex_entry = Or(And([number], lambda x: len(x) == 2, Use(lambda x: complex(x[0], x[1]))),
                       And(number, Use(complex)))

    square_matrix = And([[complex_entry]], And(lambda x: len(x) and all(len(row) == len(x) for row in x),
                                               error='Matrices must be non-empty and square.'))

    state = Or(
        {
            'type': 'product',
            'matrix': square_matrix,
        },
        {
            'type': 'markov',
            'transition': And([[number]],
                              And(lambda x: len(x) and all(len(row) == len(x) for row in x),
                                  error='The "transition" field must be a non-empty square matrix.')),
            Optional('initial', default='stationary'): Or('stationary', And([number], len)),
        },
        {
            'type': 'pure_qubit',
            'bloch': And([number], And(lambda x: len(x) == 2, error='The "bloch" field must contain '
                                                                    'two angles: [theta, phi].')),
        },
        {
            'type': 'explicit',
            'densities': And([square_matrix], len, error='The "densities" field must be a non-empty list of '
                                                          'matrices for n = 1, 2, ...'),
        },
        error='Each state must be a "product", "markov", "pure_qubit" or "explicit" state with the corresponding '
              'fields.',
    )

    schema = Schema(And(
        {
            'priors': And([number], len, error='"priors" field must be a non-empty list of numbers.'),
            'states': And([state], error='"states" field must be a list.'),
        },
        And(lambda x: len(x['priors']) == len(x['states']),
            error='The number of priors must be equal to the number of states.'),
    ))

    return validate_config(schema, data)


def validate_experiment_config(data):
    schema = Schema(And(
        {
            Optional('hypotheses'): dict,
            Optional('hypothesesFile'): And(str, len),
            Optional('nRange', default=None): Or(
                None,
                And([_positive_int()], len,
                    And(lambda x: all(a < b for a, b in zip(x, x[1:])),
                        error='"nRange" values must be in ascending order.')),
                And(
                    {
                        'min': _positive_int(),
                        'max': _positive_int(),
                        Optional('step', default=1): _positive_int(),
                    },
                    And(lambda x: x['min'] <= x['max'], error='"nRange.min" cannot be greater than "nRange.max".'),
                    Use(lambda x: list(range(x['min'], x['max'] + 1, x['step']))),
                ),
                error='"nRange" must be a list of block sizes or an object with "min", "max" and "step" fields.',
            ),
            Optional('method', default=METHOD_FACTORIZED): And(str, lambda x: x in EVALUATION_METHODS,
                                                               error='"method" must be one of: %s.'
                                                                     % ', '.join(EVALUATION_METHODS)),
            Optional('samples', default=DEFAULT_SAMPLES): And(int, lambda x: x > 0,
                                                              error='"samples" must be a positive integer.'),
            Optional('seed', default=0): And(int, lambda x: 0 <= x < 2 ** 64,
                                             error='"seed" must be a 64-bit unsigned integer.'),
            Optional('sGridSize', default=DEFAULT_S_GRID_SIZE): And(int, lambda x: x >= 2),
            Optional('chernoffGridSize', default=DEFAULT_CHERNOFF_GRID_SIZE): And(int, lambda x: x >= 3),
            Optional('fitWindow', default=None): Or(None, And([_positive_int()], lambda x: len(x) >= 3,
                                                              error='"fitWindow" must contain at least 3 '
                                                                    'block sizes.')),
            Optional('maxDimension', default=DEFAULT_MAX_DIMENSION): _positive_int(),
            Optional('weights', default='optimal'): Or('optimal', And([_number()], len),
                                                       error='"weights" must be "optimal" or a list of numbers.'),
            Optional('uniformPriors', default=False): bool,
            Optional('distinctAtN', default=1): _positive_int(),
            Optional('output', default=None): Or(None, And(str, len)),
        },
        And(lambda x: ('hypotheses' in x) != ('hypothesesFile' in x),
            error='Either "hypotheses" or "hypothesesFile" should be specified.'),
    ))

    return validate_config(schema, data)


def is_hypothesis_set_document(data) -> bool:
    """Returns "True" if the document is a bare hypothesis set rather than an experiment config."""
    return isinstance(data, dict) and 'states' in data and 'priors' in data


def validate_config(schema: Schema, config):
    try:
        validated = schema.validate(config)
    except SchemaError as e:
        raise ValueError('Validation error: ' + (e.errors[-1] if e.errors[-1] else e.autos[-1]))

    return validated
