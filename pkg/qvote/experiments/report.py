import csv
import math
import os
from typing import List, Optional, TextIO
import chevron
from qvote.config.validation import METHOD_MONTE_CARLO
from qvote.experiments.exponent_fit import ExponentFit
from qvote.experiments.sweeps import BinarySweepRow, MultiSweepRow, SweepFits
from qvote.multi.design import TestDesign


def format_value(value) -> str:
    """CSV representation: 17 significant digits for floats, "inf" for infinity."""
    if value is None:
        return ''

    if isinstance(value, (tuple, list)):
        return ';'.join(format_value(item) for item in value)

    if isinstance(value, float):
        return 'inf' if value == math.inf else '%.17g' % value

    return str(value)


def write_csv(stream: TextIO, header: List[str], rows: List[list]):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(value) for value in row])


def binary_sweep_table(rows: List[BinarySweepRow]) -> (List[str], List[list]):
    return ['n', 'err', 'rate'], [[row.n, row.error, row.rate] for row in rows]


def multi_sweep_table(rows: List[MultiSweepRow], r: int, method: str) -> (List[str], List[list]):
    header = ['n', 'blocks'] + ['err_%d' % (i + 1) for i in range(r)] + ['err', 'rate'] \
        + ['union_bound_%d' % (i + 1) for i in range(r)]
    if method == METHOD_MONTE_CARLO:
        header += ['stderr_%d' % (i + 1) for i in range(r)] + ['stderr']

    table = []
    for row in rows:
        values = [row.n, row.lengths] + list(row.result.errors) + [row.result.averaged_error, row.rate] \
            + list(row.union_bound)
        if method == METHOD_MONTE_CARLO:
            values += list(row.result.standard_errors) + [row.result.averaged_standard_error]

        table.append(values)

    return header, table


def _render_template(name: str, data: dict) -> str:
    with open(os.path.join(os.path.dirname(__file__), 'data', name)) as f:
        content = f.read()

    return chevron.render(content, data).rstrip('\n')


def _number(value: Optional[float]) -> str:
    if value is None:
        return 'n/a'

    return 'inf' if value == math.inf else '%.6g' % value


def _ratio(value: Optional[float], bound: float) -> str:
    if value is None or not bound or not math.isfinite(bound):
        return 'n/a'

    return _number(value / bound)


def _fit_parameters(fit: Optional[ExponentFit]) -> dict:
    return {
        'HAS_FIT': fit is not None,
        'SLOPE': _number(fit.slope) if fit else '',
        'R_SQUARED': _number(fit.r_squared) if fit else '',
        'WINDOW': ', '.join(str(n) for n in fit.window) if fit and fit.window else 'n/a',
    }


def render_binary_summary(fit: Optional[ExponentFit], reference: Optional[float]) -> str:
    return _render_template('binary_summary.mustache', {
        **_fit_parameters(fit),
        'HAS_REFERENCE': reference is not None,
        'REFERENCE': _number(reference),
        'RATIO': _ratio(fit.slope if fit else None, reference),
    })


def render_multi_summary(fits: SweepFits, design: TestDesign) -> str:
    slope = fits.averaged.slope if fits.averaged else None
    lower_bound = design.xi_min * design.phi

    return _render_template('multi_summary.mustache', {
        **_fit_parameters(fits.averaged),
        'PAIR_ORDER': ', '.join('(%d,%d)' % (i + 1, j + 1) for i, j in design.pair_index.pairs),
        'WEIGHTS': ', '.join('%.6g' % weight for weight in design.weights),
        'LOWER_BOUND': _number(lower_bound),
        'LOWER_RATIO': _ratio(slope, lower_bound),
        'UPPER_BOUND': _number(design.xi_min),
        'UPPER_RATIO': _ratio(slope, design.xi_min),
        'INDIVIDUAL': [{'INDEX': i + 1, 'SLOPE': _number(fit.slope if fit else None)}
                       for i, fit in enumerate(fits.individual)],
    })
