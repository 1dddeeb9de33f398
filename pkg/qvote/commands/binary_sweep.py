from argparse import Namespace
from qvote.commands.abstract_config_command import AbstractConfigCommand
from qvote.commands.writers.abstract_output_writer import AbstractOutputWriter
from qvote.config.experiment_config import ExperimentConfig
from qvote.experiments.report import binary_sweep_table, render_binary_summary
from qvote.experiments.sweeps import binary_sweep, fit_binary_sweep
from qvote.multi.design import pair_distance


class BinarySweepCommand(AbstractConfigCommand):

    name = 'binary-sweep'
    description = 'Error probabilities of the Helstrom test between two hypotheses for a range of block sizes'

    def _run(self, config: ExperimentConfig, args: Namespace, output: AbstractOutputWriter):
        hs = config.hypothesis_set
        rows = binary_sweep(hs, self._require_n_range(config), config.max_dimension)

        header, table = binary_sweep_table(rows)
        self._write_csv(config, header, table, output)

        reference, _, _ = pair_distance(hs.models[0], hs.models[1], config.chernoff_grid_size, config.s_grid_size,
                                        config.max_dimension)

        output.write()
        output.write(render_binary_summary(fit_binary_sweep(rows, config.fit_window), reference))
