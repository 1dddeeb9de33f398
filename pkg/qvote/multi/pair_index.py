from typing import List, Tuple


class PairIndex(object):
    """Lexicographic numbering of the hypothesis pairs: (0, 1), (0, 2), ..., (0, r-1), (1, 2), ...

    Hypotheses and pairs are indexed from 0.
    """

    def __init__(self, r: int):
        if r < 2:
            raise ValueError('At least 2 hypotheses are required, got %d.' % r)

        self._r = r
        self._pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]
        self._index = {pair: k for k, pair in enumerate(self._pairs)}

    @property
    def r(self) -> int:
        return self._r

    @property
    def m(self) -> int:
        """Number of pairs, r choose 2."""
        return len(self._pairs)

    @property
    def pairs(self) -> List[Tuple[int, int]]:
        return self._pairs

    def index(self, i: int, j: int) -> int:
        """Pair number for the unordered pair {i, j}."""
        if i == j:
            raise ValueError('A pair must consist of two different hypotheses.')

        key = (min(i, j), max(i, j))
        if key not in self._index:
            raise ValueError('Hypotheses %d and %d are out of range.' % key)

        return self._index[key]

    def __len__(self):
        return self.m

    def __iter__(self):
        return iter(self._pairs)


def pair_ordering(r: int) -> PairIndex:
    return PairIndex(r)
