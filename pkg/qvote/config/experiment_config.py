import os
from typing import List, Optional
from qvote.config.validation import validate_experiment_config
from qvote.models.hypothesis_set import HypothesisSet
from qvote.models.model_factory import load_hypothesis_set
from qvote.utils import read_document


class ExperimentConfig(object):

    def __init__(self, config: dict, config_dir: str):
        # validate the config
        config = validate_experiment_config(config)

        self._config_dir = config_dir
        self._config = config
        self._hypothesis_set = None

    @property
    def config_dir(self) -> str:
        return self._config_dir

    @property
    def hypotheses_data(self) -> dict:
        """Raw hypothesis set document, inline or read from the "hypothesesFile"."""
        if 'hypotheses' in self._config:
            return self._config['hypotheses']

        return read_document(self.hypotheses_file)

    @property
    def hypotheses_file(self) -> Optional[str]:
        file_path = self._config.get('hypothesesFile')
        if file_path and not os.path.isabs(file_path):
            file_path = os.path.join(self._config_dir, file_path)

        return file_path

    @property
    def hypothesis_set(self) -> HypothesisSet:
        if self._hypothesis_set is None:
            hypothesis_set = load_hypothesis_set(self.hypotheses_data, self.distinct_at_n)
            if self.uniform_priors:
                hypothesis_set = hypothesis_set.with_uniform_priors()

            self._hypothesis_set = hypothesis_set

        return self._hypothesis_set

    @property
    def n_range(self) -> Optional[List[int]]:
        return self._config['nRange']

    @property
    def method(self) -> str:
        return self._config['method']

    @property
    def samples(self) -> int:
        return self._config['samples']

    @property
    def seed(self) -> int:
        return self._config['seed']

    @property
    def s_grid_size(self) -> int:
        return self._config['sGridSize']

    @property
    def chernoff_grid_size(self) -> int:
        return self._config['chernoffGridSize']

    @property
    def fit_window(self) -> Optional[List[int]]:
        return self._config['fitWindow']

    @property
    def max_dimension(self) -> int:
        return self._config['maxDimension']

    @property
    def weights(self) -> Optional[List[float]]:
        """Manual block weights or None for the optimal ones."""
        weights = self._config['weights']
        return None if weights == 'optimal' else weights

    @property
    def uniform_priors(self) -> bool:
        return self._config['uniformPriors']

    @property
    def distinct_at_n(self) -> int:
        """Block size at which the hypotheses must differ."""
        return self._config['distinctAtN']

    @property
    def output(self) -> Optional[str]:
        return self._config['output']
