import os
import unittest
from qvote.cli import get_parser, run_command
from qvote.commands.writers.buffered_output_writer import BufferedOutputWriter


DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')


class TestWriters(unittest.TestCase):

    def test_prefix(self):
        output = BufferedOutputWriter()
        output.write('Failed:')
        with output.prefix('  - '):
            output.write('first')
            output.write('second\nthird')

        output.write('done', newline=False)

        self.assertEqual(output.text, 'Failed:\n  - first\n  - second\n  - third\ndone')

    def test_exit_codes(self):
        parser = get_parser()
        args = parser.parse_args(['chernoff', '-c', os.path.join(DATA_DIR, 'pair.yaml')])
        self.assertEqual(run_command(args, BufferedOutputWriter()), 0)

        args = parser.parse_args(['plan', '-c', os.path.join(DATA_DIR, 'identical.yaml'), '-n', '4'])
        output = BufferedOutputWriter()
        self.assertEqual(run_command(args, output), 2)
        self.assertTrue(output.text)


if __name__ == '__main__':
    unittest.main()
