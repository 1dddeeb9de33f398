import sys
from argparse import Namespace
from qvote.commands.abstract_command import AbstractCommand
from qvote.commands.writers.abstract_output_writer import AbstractOutputWriter
from qvote.experiments.fixtures import run_checks
from qvote.utils import render_table


class VerifyCommand(AbstractCommand):

    name = 'verify'
    description = 'Run the built-in numerical checks'

    def run(self, args: Namespace, output: AbstractOutputWriter):
        checks = run_checks()

        table = [('#', 'Check', 'Result', 'Details')]
        for i, check in enumerate(checks):
            table.append((i + 1, check.name, 'PASS' if check.passed else 'FAIL', check.details))

        output.write(render_table(table, separate_title=True))

        failed = [check for check in checks if not check.passed]
        if failed:
            output.write('%d of %d checks failed:' % (len(failed), len(checks)))
            with output.prefix('  - '):
                for check in failed:
                    output.write(check.name)

            sys.exit(1)

        output.write('All checks passed.')
