from argparse import Namespace, ArgumentParser
from qvote.commands.abstract_config_command import AbstractConfigCommand
from qvote.commands.chernoff import format_distance
from qvote.commands.writers.abstract_output_writer import AbstractOutputWriter
from qvote.config.experiment_config import ExperimentConfig
from qvote.multi.design import design_test, WEIGHTS_MANUAL
from qvote.multi.weights import block_plan
from qvote.utils import render_table


class PlanCommand(AbstractConfigCommand):

    name = 'plan'
    description = 'Show the block lengths of the voting test and its predicted error exponent'

    def configure(self, parser: ArgumentParser):
        super().configure(parser)
        parser.add_argument('-n', type=int, required=True, help='Total number of sites')

    def _run(self, config: ExperimentConfig, args: Namespace, output: AbstractOutputWriter):
        hs = config.hypothesis_set
        design = design_test(hs, config.weights, grid_size=config.chernoff_grid_size,
                             s_grid_size=config.s_grid_size, max_dim=config.max_dimension)
        plan = block_plan(args.n, design.weights)

        table = [('Block', 'Pair', 'Distance', 'Weight', 'Sites', 'Weight x Distance')]
        for k, (distance, weight, length) in enumerate(zip(design.distances, design.weights, plan.lengths)):
            i, j = distance.pair
            table.append((k + 1, '(%d, %d)' % (i + 1, j + 1), format_distance(distance.value), '%.6g' % weight,
                          length, format_distance(weight * distance.value) if weight else '0'))

        output.write(render_table(table, separate_title=True))
        output.write()

        if design.weights_source == WEIGHTS_MANUAL:
            output.write('Manual weights: %s' % ', '.join('%.6g' % weight for weight in design.weights))

        output.write('Predicted error exponent: %s' % format_distance(design.predicted_exponent))
        if design.least_favorable_pair is not None:
            output.write('Generalized distance x phi: %.10g' % (design.xi_min * design.phi))
