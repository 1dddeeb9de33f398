import argparse
import logging
import sys
from typing import List, Type
from qvote import __version__
from qvote.commands.abstract_command import AbstractCommand
from qvote.commands.binary_sweep import BinarySweepCommand
from qvote.commands.chernoff import ChernoffCommand
from qvote.commands.multi_sweep import MultiSweepCommand
from qvote.commands.plan import PlanCommand
from qvote.commands.verify import VerifyCommand
from qvote.commands.writers.abstract_output_writer import AbstractOutputWriter
from qvote.commands.writers.output_writer import OutputWriter
from qvote.errors.dimension_cap import DimensionCapError


EXIT_CODE_ERROR = 1
EXIT_CODE_VALIDATION = 2
EXIT_CODE_RESOURCE_CAP = 3


def get_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='qvote')
    parser.add_argument('-V', '--version', action='store_true', help='Display the version of the qvote')

    command_classes = [
        ChernoffCommand,
        PlanCommand,
        BinarySweepCommand,
        MultiSweepCommand,
        VerifyCommand,
    ]

    # add commands to the parser
    add_subparsers(parser, command_classes)

    return parser


def add_subparsers(parser: argparse.ArgumentParser, command_classes: List[Type[AbstractCommand]]):
    """Adds commands to the parser."""
    subparsers = parser.add_subparsers()
    for command_class in command_classes:
        command = command_class()
        subparser = subparsers.add_parser(command.name, help=command.description, description=command.description)
        subparser.set_defaults(command=command, parser=subparser)
        command.configure(subparser)


def get_exit_code(error: Exception) -> int:
    if isinstance(error, DimensionCapError):
        return EXIT_CODE_RESOURCE_CAP

    # includes the hypothesis validation and the incompatible method errors
    if isinstance(error, ValueError):
        return EXIT_CODE_VALIDATION

    return EXIT_CODE_ERROR


def run_command(args: argparse.Namespace, output: AbstractOutputWriter) -> int:
    """Runs the sub-command and returns the exit code."""
    try:
        args.command.run(args, output)
    except Exception as e:
        if args.debug:
            raise

        output.write('Error:\n'
                     '------\n'
                     '%s' % str(e))

        return get_exit_code(e)

    return 0


def main(argv: List[str] = None):
    parser = get_parser()
    args = parser.parse_args(argv)

    if args.version:
        print(__version__)
        return

    if 'command' not in args:
        parser.print_help()
        sys.exit(EXIT_CODE_ERROR)

    logging.basicConfig(level=logging.DEBUG if args.debug else logging.WARNING,
                        format='%(levelname)s: %(message)s')

    sys.exit(run_command(args, OutputWriter()))
