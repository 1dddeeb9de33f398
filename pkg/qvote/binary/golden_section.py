import logging
import math
from typing import Callable, Tuple


INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2


def golden_section_minimize(f: Callable[[float], float], a: float, b: float, tol: float = 1e-8) \
        -> Tuple[float, float]:
    """Golden-section search for the minimum of a unimodal function on [a, b].

    Returns:
        The best point found and the function value at it. The final bracket is
        not wider than "tol".
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        x = (a + b) / 2
        return x, f(x)

    # required steps to achieve tolerance
    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))
    logging.debug('Golden-section search on [%.10g, %.10g]: %d steps' % (a, b, n))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(n - 1):
        if yc < yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    return (c, yc) if yc < yd else (d, yd)
