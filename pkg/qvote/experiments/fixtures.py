import logging
import math
import time
from collections import namedtuple
from functools import lru_cache
from itertools import product
from typing import Callable, List
import numpy as np
from qvote.binary.chernoff import chernoff_distance
from qvote.binary.markov_oracle import markov_chernoff_oracle
from qvote.binary.mean_chernoff import mean_chernoff_estimate
from qvote.config.validation import METHOD_DENSE, METHOD_FACTORIZED
from qvote.experiments.exponent_fit import fit_exponent
from qvote.experiments.sweeps import binary_sweep, multi_sweep
from qvote.linalg.functions import bloch_vector, pure_state
from qvote.linalg.operators import DensityMatrix
from qvote.models.hypothesis_set import HypothesisSet
from qvote.models.markov_model import MarkovModel
from qvote.models.product_model import ProductModel
from qvote.multi.design import design_test
from qvote.multi.evaluation import dense_test_matrices, exact_error, monte_carlo_error
from qvote.multi.pair_index import PairIndex
from qvote.multi.voting import build_voting_test, vote_vectors, winners
from qvote.multi.weights import BlockPlan, block_plan, phi_factor


FixtureCheck = namedtuple('FixtureCheck', ['name', 'passed', 'details'])

FIXTURE_SEED = 2024


def random_density(dim: int, rng: np.random.Generator) -> DensityMatrix:
    """Full-rank random density matrix G G^† / tr(G G^†) with a complex Gaussian G."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T

    return DensityMatrix(rho / np.trace(rho).real)


def pure_qubit_model(theta: float, phi: float) -> ProductModel:
    return ProductModel(pure_state(bloch_vector(theta, phi)))


def qubit_triple() -> HypothesisSet:
    """Three pure qubit states at the Bloch angles (0, 0), (pi/3, 0) and (2pi/3, pi/2), equal priors."""
    models = [pure_qubit_model(0, 0), pure_qubit_model(math.pi / 3, 0), pure_qubit_model(2 * math.pi / 3, math.pi / 2)]
    return HypothesisSet(models, [1 / 3] * 3)


def random_qubit_triple(seed: int = FIXTURE_SEED) -> HypothesisSet:
    rng = np.random.default_rng(seed)
    return HypothesisSet([ProductModel(random_density(2, rng)) for _ in range(3)], [0.2, 0.3, 0.5])


def markov_pair() -> HypothesisSet:
    models = [MarkovModel([[0.8, 0.2], [0.7, 0.3]]), MarkovModel([[0.3, 0.7], [0.25, 0.75]])]
    return HypothesisSet(models, [0.5, 0.5])


def check_phi_factor() -> FixtureCheck:
    phi, _ = phi_factor([math.log(2), math.log(2), 2 * math.log(2)])
    passed = abs(phi - 0.4) <= 1e-12

    rng = np.random.default_rng(FIXTURE_SEED)
    for _ in range(1000):
        m = int(rng.integers(1, 11))
        value, _ = phi_factor(rng.uniform(0.01, 10., size=m))
        passed = passed and 1 / m - 1e-12 <= value <= 1 + 1e-12

    equal, _ = phi_factor([0.7] * 6)
    passed = passed and abs(equal - 1 / 6) <= 1e-12

    return FixtureCheck('phi closed form and bounds', passed, 'phi=%.15g' % phi)


def check_pure_chernoff() -> FixtureCheck:
    res = chernoff_distance(pure_state([1, 0]), pure_state(np.array([1, 1]) / math.sqrt(2)))
    values = [q for _, q in res.q_curve]
    passed = abs(res.value - math.log(2)) <= 1e-6 and max(values) - min(values) <= 1e-9

    return FixtureCheck('pure-state Chernoff distance', passed, 'xi=%.12g' % res.value)


def check_binary_attainment() -> FixtureCheck:
    hs = HypothesisSet([ProductModel(pure_state([1, 0])), ProductModel(pure_state(np.array([1, 1]) / math.sqrt(2)))],
                       [0.5, 0.5])
    n_list = list(range(8, 15))
    rows = binary_sweep(hs, n_list)

    closed_form = [(1 - math.sqrt(1 - 2. ** -n)) / 2 for n in n_list]
    max_deviation = max(abs(row.error - expected) for row, expected in zip(rows, closed_form))
    fit = fit_exponent(n_list, [row.error for row in rows], window=n_list)
    passed = max_deviation <= 1e-10 and abs(fit.slope - math.log(2)) <= 0.15 * math.log(2)

    return FixtureCheck('binary Chernoff attainment', passed,
                        'slope=%.6g, max deviation=%.3g' % (fit.slope, max_deviation))


def check_povm_validity() -> FixtureCheck:
    hs = random_qubit_triple()
    test = build_voting_test(hs, BlockPlan(6, np.full(3, 1 / 3), (2, 2, 2)))
    povm = [element.entries for element in dense_test_matrices(test)]

    completeness = np.max(np.abs(sum(povm) - np.eye(povm[0].shape[0])))
    min_eigenvalue = min(np.linalg.eigvalsh(element).min() for element in povm)
    orthogonality = max(np.max(np.abs(povm[i] @ povm[j])) for i in range(3) for j in range(3) if i != j)
    passed = completeness <= 1e-10 and min_eigenvalue >= -1e-9 and orthogonality <= 1e-9

    return FixtureCheck('voting POVM validity', passed, 'completeness=%.3g, orthogonality=%.3g'
                        % (completeness, orthogonality))


def check_factorized_dense() -> FixtureCheck:
    hs = random_qubit_triple()
    test = build_voting_test(hs, BlockPlan(6, np.full(3, 1 / 3), (2, 2, 2)))
    factorized = exact_error(hs, test, METHOD_FACTORIZED)
    dense = exact_error(hs, test, METHOD_DENSE)
    deviation = max(abs(a - b) for a, b in zip(factorized.errors, dense.errors))

    return FixtureCheck('factorized and dense errors', deviation <= 1e-9, 'max deviation=%.3g' % deviation)


@lru_cache(maxsize=None)
def _triple_sweep():
    hs = qubit_triple()
    design = design_test(hs)
    n_list = list(range(6, 31, 3))
    rows = multi_sweep(hs, design, n_list)
    fit = fit_exponent(n_list, [row.result.averaged_error for row in rows])

    return design, rows, fit


def check_lower_bound() -> FixtureCheck:
    design, rows, fit = _triple_sweep()
    bound = 0.8 * design.xi_min * design.phi
    # subexponential prefactors bend the finite-n rates, only their level is checked
    rates = [row.rate for row in rows[-3:]]
    passed = fit.slope >= bound and all(rate >= bound for rate in rates)
    trend = 'yes' if all(a <= b for a, b in zip(rates, rates[1:])) else 'no'

    details = 'slope=%.6g, bound=%.6g, last rates=%s (nondecreasing: %s)' \
              % (fit.slope, bound, ', '.join('%.5g' % rate for rate in rates), trend)

    return FixtureCheck('exponent above 0.8 xi phi', passed, details)


def check_upper_bound() -> FixtureCheck:
    design, rows, fit = _triple_sweep()
    bound = 1.1 * design.xi_min

    return FixtureCheck('exponent below 1.1 xi', fit.slope <= bound, 'slope=%.6g, bound=%.6g' % (fit.slope, bound))


def check_markov_convergence() -> FixtureCheck:
    hs = markov_pair()
    estimate = mean_chernoff_estimate(hs.models[0], hs.models[1], [12]).per_n[0].value
    oracle = markov_chernoff_oracle(hs.models[0], hs.models[1])
    passed = abs(estimate - oracle) <= 0.05 * oracle

    return FixtureCheck('Markov mean Chernoff convergence', passed, 'n=12: %.6g, limit: %.6g' % (estimate, oracle))


def check_monte_carlo() -> FixtureCheck:
    hs = qubit_triple()
    design = design_test(hs)
    test = build_voting_test(hs, block_plan(12, design.weights))

    exact = exact_error(hs, test)
    estimate = monte_carlo_error(hs, test, 100000, seed=FIXTURE_SEED)
    repeated = monte_carlo_error(hs, test, 100000, seed=FIXTURE_SEED)

    pairs = list(zip(exact.errors, estimate.errors, estimate.standard_errors)) \
        + [(exact.averaged_error, estimate.averaged_error, estimate.averaged_standard_error)]
    passed = all(abs(a - b) <= 4 * max(se, 1e-5) for a, b, se in pairs) and estimate == repeated

    return FixtureCheck('Monte Carlo consistency', passed, 'exact=%.6g, estimate=%.6g'
                        % (exact.averaged_error, estimate.averaged_error))


def _brute_force_assignment(b: tuple, r: int) -> int:
    counts = [0] * r
    k = 0
    for i in range(r):
        for j in range(i + 1, r):
            counts[i if b[k] == 0 else j] += 1
            k += 1

    members = []
    for i in range(r):
        if all(counts[i] > counts[j] for j in range(i)) and all(counts[i] >= counts[j] for j in range(i, r)):
            members.append(i)

    assert len(members) == 1
    return members[0]


def check_voting_combinatorics() -> FixtureCheck:
    passed = True
    for r in (3, 4):
        pair_index = PairIndex(r)
        assignment = winners(vote_vectors(pair_index.m), pair_index)
        expected = [_brute_force_assignment(b, r) for b in product((0, 1), repeat=pair_index.m)]
        passed = passed and len(assignment) == 2 ** pair_index.m and assignment.tolist() == expected

    return FixtureCheck('voting combinatorics', passed, 'r=3 and r=4, all vote vectors')


CHECKS = [
    check_phi_factor,
    check_pure_chernoff,
    check_binary_attainment,
    check_povm_validity,
    check_factorized_dense,
    check_lower_bound,
    check_upper_bound,
    check_markov_convergence,
    check_monte_carlo,
    check_voting_combinatorics,
]  # type: List[Callable[[], FixtureCheck]]


def run_checks(checks: List[Callable[[], FixtureCheck]] = None) -> List[FixtureCheck]:
    res = []
    for check in (checks or CHECKS):
        start = time.time()
        res.append(check())
        logging.debug('%s: %s (%.2fs)' % (res[-1].name, 'PASS' if res[-1].passed else 'FAIL', time.time() - start))

    return res
