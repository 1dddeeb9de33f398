import math
from argparse import Namespace
from qvote.commands.abstract_config_command import AbstractConfigCommand
from qvote.commands.writers.abstract_output_writer import AbstractOutputWriter
from qvote.config.experiment_config import ExperimentConfig
from qvote.multi.design import design_test
from qvote.utils import render_table


def format_distance(value: float) -> str:
    return 'inf (orthogonal)' if value == math.inf else '%.10g' % value


class ChernoffCommand(AbstractConfigCommand):

    name = 'chernoff'
    description = 'Compute the pairwise Chernoff distances, the generalized distance and the phi factor'

    def _run(self, config: ExperimentConfig, args: Namespace, output: AbstractOutputWriter):
        hs = config.hypothesis_set
        design = design_test(hs, config.weights, grid_size=config.chernoff_grid_size,
                             s_grid_size=config.s_grid_size, max_dim=config.max_dimension)

        table = [('Pair', 'Distance', 's*', 'Source')]
        for distance in design.distances:
            i, j = distance.pair
            s_star = '' if distance.s_star is None else '%.6f' % distance.s_star
            table.append(('(%d, %d)' % (i + 1, j + 1), format_distance(distance.value), s_star, distance.source))

        output.write(render_table(table, separate_title=True))
        output.write()

        if design.least_favorable_pair is None:
            output.write('All pairs of states are perfectly distinguishable.')
        else:
            i, j = design.least_favorable_pair
            output.write('Generalized Chernoff distance: %.10g' % design.xi_min)
            output.write('Least favorable pair: (%d, %d)' % (i + 1, j + 1))
            output.write('Phi factor: %.10g' % design.phi)

        if config.output:
            rows = [[distance.pair[0] + 1, distance.pair[1] + 1, distance.value, distance.s_star, distance.source]
                    for distance in design.distances]
            self._write_csv(config, ['i', 'j', 'distance', 's_star', 'source'], rows, output)
