import os
from qvote.config.experiment_config import ExperimentConfig
from qvote.config.validation import is_hypothesis_set_document
from qvote.utils import read_document


def load_config(config_path: str, overrides: dict = None) -> ExperimentConfig:
    """Loads an experiment configuration.

    Args:
        config_path: Path to a YAML or JSON file with either an experiment configuration
            or a bare hypothesis set.
        overrides: Configuration values that replace the values from the file,
            "None" values are ignored.
    """
    if not config_path:
        raise ValueError('A configuration file is required, use the "--config" option.')

    if os.path.isabs(config_path):
        config_abs_path = config_path
    else:
        config_abs_path = os.path.abspath(os.path.join(os.getcwd(), config_path))

    if not os.path.exists(config_abs_path):
        raise ValueError('Configuration file "%s" not found.' % config_path)

    config = read_document(config_abs_path)
    if not isinstance(config, dict):
        raise ValueError('Configuration file "%s" must contain an object.' % config_path)

    # a bare hypothesis set
    if is_hypothesis_set_document(config):
        config = {'hypotheses': config}

    if overrides:
        config = _update_dict(config, {key: value for key, value in overrides.items() if value is not None})

    return ExperimentConfig(config, os.path.dirname(config_abs_path))


def _update_dict(d, u):
    for k, v in u.items():
        if isinstance(v, dict) and isinstance(d.get(k), dict):
            d[k] = _update_dict(d[k], v)
        else:
            d[k] = v

    return d
