from argparse import Namespace
from qvote.commands.abstract_config_command import AbstractConfigCommand
from qvote.commands.writers.abstract_output_writer import AbstractOutputWriter
from qvote.config.experiment_config import ExperimentConfig
from qvote.experiments.report import multi_sweep_table, render_multi_summary
from qvote.experiments.sweeps import fit_multi_sweep, multi_sweep
from qvote.multi.design import design_test


class MultiSweepCommand(AbstractConfigCommand):

    name = 'multi-sweep'
    description = 'Error probabilities of the voting test for a range of block sizes'

    def _run(self, config: ExperimentConfig, args: Namespace, output: AbstractOutputWriter):
        hs = config.hypothesis_set
        n_range = self._require_n_range(config)
        design = design_test(hs, config.weights, grid_size=config.chernoff_grid_size,
                             s_grid_size=config.s_grid_size, max_dim=config.max_dimension)

        rows = multi_sweep(hs, design, n_range, config.method, config.samples, config.seed, config.max_dimension)

        header, table = multi_sweep_table(rows, hs.r, config.method)
        self._write_csv(config, header, table, output)

        output.write()
        output.write(render_multi_summary(fit_multi_sweep(rows, config.fit_window), design))
