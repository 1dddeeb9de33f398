from typing import List
from qvote.commands.writers.abstract_output_writer import AbstractOutputWriter


class BufferedOutputWriter(AbstractOutputWriter):
    """Keeps the output in memory."""

    def __init__(self):
        super().__init__()
        self._chunks = []  # type: List[str]

    def _write(self, msg: str, newline: bool = True):
        self._chunks.append(msg + ('\n' if newline else ''))

    @property
    def text(self) -> str:
        return ''.join(self._chunks)
