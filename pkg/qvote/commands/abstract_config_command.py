import io
from abc import abstractmethod
from argparse import Namespace, ArgumentParser, ArgumentTypeError
from typing import List, Union
from qvote.commands.abstract_command import AbstractCommand
from qvote.commands.writers.abstract_output_writer import AbstractOutputWriter
from qvote.config.config_utils import load_config
from qvote.config.experiment_config import ExperimentConfig
from qvote.config.validation import EVALUATION_METHODS
from qvote.experiments.report import write_csv


def parse_weights(value: str) -> Union[str, List[float]]:
    """Parses "optimal" or "manual:w1,w2,...,wm"."""
    if value == 'optimal':
        return value

    if not value.startswith('manual:'):
        raise ArgumentTypeError('Weights must be "optimal" or "manual:<comma-separated list>".')

    try:
        return [float(weight) for weight in value[len('manual:'):].split(',')]
    except ValueError:
        raise ArgumentTypeError('Manual weights must be numbers, got "%s".' % value)


def parse_int_list(value: str) -> List[int]:
    try:
        return [int(item) for item in value.split(',')]
    except ValueError:
        raise ArgumentTypeError('A comma-separated list of integers was expected, got "%s".' % value)


class AbstractConfigCommand(AbstractCommand):
    """Abstract class for a sub-command that works with an experiment configuration."""

    @abstractmethod
    def _run(self, config: ExperimentConfig, args: Namespace, output: AbstractOutputWriter):
        raise NotImplementedError

    def configure(self, parser: ArgumentParser):
        super().configure(parser)
        parser.add_argument('-c', '--config', type=str, required=True,
                            help='Path to the experiment configuration or to a hypothesis set (YAML or JSON)')
        parser.add_argument('-o', '--out', type=str, default=None, help='Path to the output CSV file')
        parser.add_argument('--method', type=str, choices=EVALUATION_METHODS, default=None,
                            help='Error evaluation method')
        parser.add_argument('--samples', type=int, default=None, help='Number of Monte Carlo samples')
        parser.add_argument('--seed', type=int, default=None, help='Monte Carlo seed')
        parser.add_argument('--n-min', type=int, default=None, help='The smallest block size of the sweep')
        parser.add_argument('--n-max', type=int, default=None, help='The largest block size of the sweep')
        parser.add_argument('--n-step', type=int, default=None, help='Block size step of the sweep')
        parser.add_argument('--weights', type=parse_weights, default=None,
                            help='Block weights: "optimal" or "manual:w1,w2,..." in the pair order')
        parser.add_argument('--s-grid', type=int, default=None, help='Number of grid points for "s"')
        parser.add_argument('--fit-window', type=parse_int_list, default=None,
                            help='Comma-separated block sizes used for the exponent fit')
        parser.add_argument('--max-dimension', type=int, default=None, help='Maximal matrix dimension')
        parser.add_argument('--uniform-priors', action='store_true', default=None,
                            help='Replace the priors with the uniform distribution')

    def run(self, args: Namespace, output: AbstractOutputWriter):
        config = load_config(args.config, self._get_overrides(args))
        self._run(config, args, output)

    @staticmethod
    def _get_overrides(args: Namespace) -> dict:
        n_range = {key: value for key, value in [('min', args.n_min), ('max', args.n_max), ('step', args.n_step)]
                   if value is not None}

        return {
            'nRange': n_range or None,
            'method': args.method,
            'samples': args.samples,
            'seed': args.seed,
            'weights': args.weights,
            'sGridSize': args.s_grid,
            'fitWindow': args.fit_window,
            'maxDimension': args.max_dimension,
            'uniformPriors': args.uniform_priors,
            'output': args.out,
        }

    @staticmethod
    def _write_csv(config: ExperimentConfig, header: list, rows: list, output: AbstractOutputWriter):
        """Writes the CSV to the output file or, if there is no file, to the command output."""
        if config.output:
            with open(config.output, 'w', newline='') as f:
                write_csv(f, header, rows)

            output.write('Results are saved to "%s".' % config.output)
        else:
            stream = io.StringIO()
            write_csv(stream, header, rows)
            output.write(stream.getvalue().rstrip('\n'))

    @staticmethod
    def _require_n_range(config: ExperimentConfig) -> List[int]:
        if not config.n_range:
            raise ValueError('Block sizes are not specified: use the "nRange" parameter or the "--n-min" and '
                             '"--n-max" options.')

        return config.n_range
