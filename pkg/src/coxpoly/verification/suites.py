"""
Verification suites: every suite recomputes a family of statements about Coxeter polynomials with independent
computation paths and counts the checks that hold.
All suites share the signature suite(max_size, seed, cases, silent) -> SuiteResult
"""
import itertools
import typing
import warnings

import numpy

from coxpoly.classifier.confrontation import confrontation
from coxpoly.classifier.labels import TreeType, CanonicalType, NonTreeHereditary
from coxpoly.classifier.separation import separate_trace_minus_one, trace_trichotomy
from coxpoly.classifier.weights import canonical_triples
from coxpoly.coxeter.closed_forms import poly_linear_A, poly_D, poly_boldt_T, coeff_T_window, coeff_T_power, \
    poly_T_one, star_coxeter_blocks, m_cinv_vector, lemma_family, predicted_canonical_coeffs, \
    predicted_twisted_euler, m_phi_power_closed_form
from coxpoly.coxeter.coxeter_core import coxeter_data, coxeter_matrix, coxeter_polynomial, ope_coefficients, \
    ope_coxeter_matrix, twisted_euler_sequence
from coxpoly.homological.enveloping import enveloping_data
from coxpoly.homological.traces import trace_identity_rhs
from coxpoly.homological.waring import waring_coefficients, printed_sign_coefficients
from coxpoly.linalg.exact import char_poly, inverse_unimodular, power_trace, power_traces
from coxpoly.linalg.int_matrix import IntMatrix
from coxpoly.quiver.algebra import one_point_ext_cartan, canonical_cartan, canonical_module_vector
from coxpoly.quiver.quiver import Quiver, cartan_matrix, linear_quiver, build_star, random_acyclic_quiver
from coxpoly.quiver.trees import StarT, OtherTree, tree_shape, enumerate_trees, labeled_trees_via_prufer, \
    distinct_trees, all_orientations, tree_canonical_form
from coxpoly.utils.exceptions import CoxeterParameterError, CoxeterWarning, OutsideLemmaHypothesesError
from coxpoly.verification.results import SuiteResult

DEFAULT_MAX_SIZE = 10
DEFAULT_SEED = 0
DEFAULT_OPE_CASES = 200
DEFAULT_WARING_CASES = 100
DEFAULT_RANDOM_QUIVERS = 50

# number of unlabeled trees on n vertices, n = 1..14
FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159)
PRUFER_ORACLE_SIZE = 7
ORIENTATION_MAX_EDGES = 6


def _progress(silent: bool, *args):
    if not silent:
        print(*args)


def _triples(max_sum: int) -> typing.Iterator[typing.Tuple[int, int, int]]:
    # 1 <= a <= b <= c, a + b + c <= max_sum
    for a in range(1, max_sum // 3 + 1):
        for b in range(a, (max_sum - a) // 2 + 1):
            for c in range(b, max_sum - a - b + 1):
                yield a, b, c


def _in_hypotheses(a: int, b: int, c: int) -> bool:
    try:
        lemma_family(a, b, c)
    except OutsideLemmaHypothesesError:
        return False
    return True


def _m_phi_powers(cartan: IntMatrix, m: typing.Sequence[int], count: int) -> typing.List[typing.Tuple[int, ...]]:
    # [m phi, m phi^2, ..., m phi^count]
    phi = coxeter_matrix(cartan)
    result = []
    current = tuple(m)
    for _ in range(count):
        current = phi.vecmat(current)
        result.append(current)
    return result


def canonical_weights(max_size: int, min_branches: int = 2) -> typing.List[typing.Tuple[int, ...]]:
    """
    All weight sequences p_1 <= ... <= p_t (t >= min_branches, p_i >= 2) with sum(p_i - 1) + 2 <= max_size
    """
    result = []
    budget = max_size - 2

    def extend(prefix, remaining):
        if len(prefix) >= min_branches:
            result.append(tuple(prefix))
        start = prefix[-1] if prefix else 2
        for p in range(start, remaining + 2):
            extend(prefix + [p], remaining - (p - 1))

    extend([], budget)
    return result


def closed_forms_suite(max_size: int = DEFAULT_MAX_SIZE, seed: int = DEFAULT_SEED, cases: int = None,
                       silent: bool = False) -> SuiteResult:
    """
    Closed forms against the Cartan matrix computation:
    linear quivers, D_n, the product formula for stars, the coefficient windows, the T_{1,b,c} polynomial,
    the block Coxeter matrix of stars, m C^{-1}, and the predicted values for canonical algebras
    """
    result = SuiteResult(name="closed-forms")
    for n in range(1, max_size + 1):
        chi = coxeter_polynomial(cartan_matrix(linear_quiver(n)))
        result.check_polynomial(chi, "A{}".format(n))
        result.check_equal(chi, poly_linear_A(n), "A{}".format(n))
    for n in range(4, max_size + 1):
        result.check_equal(coxeter_polynomial(cartan_matrix(build_star((1, 1, n - 3)))), poly_D(n), "D{}".format(n))
    _progress(silent, "closed-forms: linear and D checked up to", max_size)

    for a, b, c in _triples(max_size - 1):
        name = "T{},{},{}".format(a, b, c)
        cartan = cartan_matrix(build_star((a, b, c)))
        chi = coxeter_polynomial(cartan)
        result.check_polynomial(chi, name)
        result.check_equal(poly_boldt_T(a, b, c), chi, name + " product formula")
        for ell in range(a + 1):
            result.check_equal(coeff_T_window(a, b, c, ell), chi.coefficient(a + b + c - ell),
                               name + " window l={}".format(ell))
        for p in range(b + c, a + b + c + 1):
            result.check_equal(coeff_T_power(a, b, c, p), chi.coefficient(p), name + " x^{}".format(p))
        if a == 1:
            result.check_equal(poly_T_one(b, c), chi, name + " explicit polynomial")
        result.check_equal(star_coxeter_blocks(a, b, c), coxeter_matrix(cartan), name + " block Coxeter matrix")
        m = canonical_module_vector((a, b, c))
        result.check_equal(m_cinv_vector(a, b, c), inverse_unimodular(cartan).vecmat(m), name + " m C^-1")
    _progress(silent, "closed-forms: stars checked up to", max_size, "vertices")

    for a, b, c in _triples(max_size - 2):
        if not _in_hypotheses(a, b, c):
            continue
        name = "C({},{},{})".format(a + 1, b + 1, c + 1)
        cartan_b = cartan_matrix(build_star((a, b, c)))
        m = canonical_module_vector((a, b, c))
        chi = ope_coefficients(cartan_b, m)
        n = a + b + c + 1
        for ell, value in predicted_canonical_coeffs(a, b, c).items():
            result.check_equal(value, chi.coefficient(n - ell), name + " lambda_(n-{})".format(ell))
        predicted = predicted_twisted_euler(a, b, c)
        twisted = twisted_euler_sequence(cartan_b, m, max(predicted))
        result.check_equal(twisted[0], 1, name + " <m, m>")
        for r, value in predicted.items():
            result.check_equal(value, twisted[r], name + " <m phi^{}, m>".format(r))
        family = lemma_family(a, b, c)
        if family != "fixed":
            count = b if family == "fibonacci" else a
            for r, vector in enumerate(_m_phi_powers(cartan_b, m, count), start=1):
                result.check_equal(m_phi_power_closed_form(a, b, c, r), vector, name + " m phi^{}".format(r))
    _progress(silent, "closed-forms: canonical coefficients checked up to", max_size, "vertices")
    return result


def ope_suite(max_size: int = DEFAULT_MAX_SIZE, seed: int = DEFAULT_SEED, cases: int = None,
              silent: bool = False) -> SuiteResult:
    """
    Recursion, block Coxeter matrix and Cartan matrix of random one-point extensions agree
    """
    if cases is None:
        cases = DEFAULT_OPE_CASES
    rng = numpy.random.default_rng(seed)
    result = SuiteResult(name="ope")
    base_size = max(1, min(8, max_size - 1))
    for case in range(cases):
        n = int(rng.integers(1, base_size + 1))
        base = random_acyclic_quiver(n, rng, density=0.4, max_multiplicity=2)
        m = tuple(int(x) for x in rng.integers(0, 4, size=n))
        cartan_b = cartan_matrix(base)
        name = "{} with m={}".format(base, list(m))
        from_recursion = ope_coefficients(cartan_b, m)
        from_block = char_poly(ope_coxeter_matrix(cartan_b, m))
        from_cartan = coxeter_polynomial(one_point_ext_cartan(cartan_b, m))
        result.check_equal(from_recursion, from_block, name + " recursion/block")
        result.check_equal(from_block, from_cartan, name + " block/cartan")
        result.check_equal(ope_coxeter_matrix(cartan_b, m), coxeter_matrix(one_point_ext_cartan(cartan_b, m)),
                           name + " block Coxeter matrix")
        result.check_polynomial(from_cartan, name)
        if (case + 1) % 50 == 0:
            _progress(silent, "ope: {}/{} extensions".format(case + 1, cases))
    return result


def _trace_checks(result: SuiteResult, cartan: IntMatrix, name: str, powers: typing.Sequence[int]):
    phi = coxeter_matrix(cartan)
    env = enveloping_data(cartan)
    result.check_equal(power_trace(phi, 1), -env.form(env.dim_A, env.dim_A), name + " k=1")
    result.check_equal(power_trace(phi, 2), env.form(env.dim_DA, env.dim_A), name + " k=2")
    for k in powers:
        result.check_equal(trace_identity_rhs(cartan, k), power_trace(phi, k), name + " k={}".format(k))


def traces_suite(max_size: int = DEFAULT_MAX_SIZE, seed: int = DEFAULT_SEED, cases: int = None,
                 silent: bool = False) -> SuiteResult:
    """
    Traces of powers of the Coxeter matrix against Euler forms of the enveloping algebra
    """
    if cases is None:
        cases = DEFAULT_RANDOM_QUIVERS
    result = SuiteResult(name="traces")
    a2 = cartan_matrix(linear_quiver(2))
    for k, expected in ((1, -1), (2, -1), (3, 2)):
        result.check_equal(trace_identity_rhs(a2, k), expected, "A2 k={}".format(k))
    for n in range(1, min(8, max_size) + 1):
        for tree in enumerate_trees(n):
            _trace_checks(result, cartan_matrix(tree), str(tree), (3, 4))
    _progress(silent, "traces: trees checked")
    for weights in canonical_weights(max_size):
        _trace_checks(result, canonical_cartan(weights), "C{}".format(weights), (3, 4))
    _progress(silent, "traces: canonical algebras checked")
    rng = numpy.random.default_rng(seed)
    for _ in range(cases):
        quiver = random_acyclic_quiver(int(rng.integers(1, 6)), rng, density=0.5, max_multiplicity=2)
        _trace_checks(result, cartan_matrix(quiver), str(quiver), (3, 4))
    _progress(silent, "traces: {} random quivers checked".format(cases))
    return result


def waring_suite(max_size: int = DEFAULT_MAX_SIZE, seed: int = DEFAULT_SEED, cases: int = None,
                 silent: bool = False) -> SuiteResult:
    """
    Characteristic polynomials recovered from power traces
    """
    if cases is None:
        cases = DEFAULT_WARING_CASES
    result = SuiteResult(name="waring")
    rng = numpy.random.default_rng(seed)
    for _ in range(cases):
        n = int(rng.integers(1, 8))
        matrix = IntMatrix(n, n, [int(x) for x in rng.integers(-3, 4, size=n * n)])
        result.check_equal(waring_coefficients(power_traces(matrix)), char_poly(matrix), repr(matrix))
    _progress(silent, "waring: {} random matrices checked".format(cases))
    for weights in canonical_weights(max_size):
        data = coxeter_data(canonical_cartan(weights))
        result.check_equal(waring_coefficients(power_traces(data.coxeter)), data.chi, "C{}".format(weights))
    # the sign (-1)^(p_1 + ... + p_r) misses x^2 + x + 1 at l = 2
    phi = coxeter_matrix(cartan_matrix(linear_quiver(2)))
    printed = printed_sign_coefficients(power_traces(phi))
    result.check(printed[0] == 0 and waring_coefficients(power_traces(phi)).coefficient(0) == 1,
                 "A2 printed sign: expected 0 against 1, got {}".format(printed))
    return result


def _separation_checks(result: SuiteResult, size: int) -> typing.Tuple[int, int]:
    tree_polys = {}
    for tree in enumerate_trees(size):
        chi = coxeter_polynomial(cartan_matrix(tree))
        result.check_polynomial(chi, str(tree))
        result.check_equal(chi.coefficient(size - 1), 1, "{} trace".format(tree))
        tree_polys.setdefault(chi, tree)
        result.check(isinstance(separate_trace_minus_one(chi), TreeType), "{} not labeled as tree".format(tree))
    canonical_polys = {}
    for weights in canonical_triples(size):
        chi = coxeter_polynomial(canonical_cartan(weights))
        result.check_polynomial(chi, "C{}".format(weights))
        result.check_equal(chi.coefficient(size - 1), 1, "C{} trace".format(weights))
        canonical_polys[chi] = weights
        label = separate_trace_minus_one(chi)
        result.check(isinstance(label, CanonicalType) and label.t == 3,
                     "C{} labeled {}".format(weights, label))
        common = tree_polys.get(chi)
        result.check(common is None, "C{} and tree {} share {}".format(weights, common, chi.wire()))
        conf = confrontation(*(p - 1 for p in weights))
        result.check(conf.separated, str(conf))
    return len(tree_polys), len(canonical_polys)


def separation_suite(max_size: int = DEFAULT_MAX_SIZE, seed: int = DEFAULT_SEED, cases: int = None,
                     silent: bool = False) -> SuiteResult:
    """
    Trees and canonical algebras with three branches and delta >= 0 have different Coxeter polynomials,
    and the trace -1 conditions label both sides correctly
    """
    result = SuiteResult(name="separation")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CoxeterWarning)
        for size in range(2, max_size + 1):
            trees, canonicals = _separation_checks(result, size)
            _progress(silent, "separation: size {}: {} tree polynomials, {} canonical polynomials".format(
                size, trees, canonicals))
    return result


def trees_suite(max_size: int = DEFAULT_MAX_SIZE, seed: int = DEFAULT_SEED, cases: int = None,
                silent: bool = False) -> SuiteResult:
    """
    Tree enumeration, shapes, orientation invariance and lambda_{n-1} <= -1 for trees other than A and T
    """
    result = SuiteResult(name="trees")
    for n in range(1, max_size + 1):
        trees = enumerate_trees(n)
        if n <= len(FREE_TREE_COUNTS):
            result.check_equal(len(trees), FREE_TREE_COUNTS[n - 1], "number of trees on {} vertices".format(n))
        if n <= PRUFER_ORACLE_SIZE:
            oracle = distinct_trees(labeled_trees_via_prufer(n))
            result.check_equal(sorted(oracle), [tree_canonical_form(t) for t in trees],
                               "canonical forms on {} vertices".format(n))
        for tree in trees:
            chi = coxeter_polynomial(cartan_matrix(tree))
            if isinstance(tree_shape(tree), OtherTree):
                result.check(chi.coefficient(n - 2) <= -1,
                             "{}: lambda_(n-1) = {} > -1".format(tree, chi.coefficient(n - 2)))
            if n - 1 <= ORIENTATION_MAX_EDGES:
                for oriented in all_orientations(tree):
                    result.check_equal(coxeter_polynomial(cartan_matrix(oriented)), chi, str(oriented))
        _progress(silent, "trees: {} trees on {} vertices".format(len(trees), n))
    for branches in itertools.product(range(1, 7), repeat=3):
        result.check_equal(tree_shape(build_star(branches)), StarT(*sorted(branches)), "star {}".format(branches))
    return result


def trichotomy_suite(max_size: int = DEFAULT_MAX_SIZE, seed: int = DEFAULT_SEED, cases: int = None,
                     silent: bool = False) -> SuiteResult:
    """
    Trace of the Coxeter matrix: 2 for the Kronecker quiver, -1 for trees and canonical algebras with three
    branches, below -1 for canonical algebras with more branches
    """
    result = SuiteResult(name="trichotomy")
    kronecker_quiver = Quiver(n=2, arrows=((1, 2), (1, 2)))
    trace = coxeter_data(cartan_matrix(kronecker_quiver)).trace
    result.check_equal(trace, 2, "Kronecker trace")
    result.check(isinstance(trace_trichotomy(trace), NonTreeHereditary), "Kronecker label")
    for weights in canonical_weights(max_size, min_branches=3):
        trace = coxeter_data(canonical_cartan(weights)).trace
        if len(weights) == 3:
            result.check_equal(trace, -1, "C{} trace".format(weights))
        else:
            result.check(trace < -1, "C{} trace {} >= -1".format(weights, trace))
            label = trace_trichotomy(trace)
            result.check(isinstance(label, CanonicalType) and not label.exact, "C{} label".format(weights))
    for n in range(1, max_size + 1):
        for tree in enumerate_trees(n):
            result.check_equal(coxeter_data(cartan_matrix(tree)).trace, -1, "{} trace".format(tree))
    _progress(silent, "trichotomy: checked up to", max_size, "vertices")
    return result


SUPPORTED_SUITES = {
    "closed-forms": closed_forms_suite,
    "ope": ope_suite,
    "traces": traces_suite,
    "waring": waring_suite,
    "separation": separation_suite,
    "trees": trees_suite,
    "trichotomy": trichotomy_suite,
}


def pick_suite(name: str) -> typing.Callable[..., SuiteResult]:
    if name not in SUPPORTED_SUITES:
        raise CoxeterParameterError(parameter_name="suite", parameter_value=name, choices=SUPPORTED_SUITES.keys(),
                                    called_from="pick_suite")
    return SUPPORTED_SUITES[name]


def run_suite(name: str, max_size: int = DEFAULT_MAX_SIZE, seed: int = DEFAULT_SEED, cases: int = None,
              silent: bool = False) -> SuiteResult:
    """
    Run one of SUPPORTED_SUITES

    Parameters
    ----------
    name:
        suite name, see SUPPORTED_SUITES
    max_size:
        largest number of vertices considered
    seed:
        seed of the random generator for the randomized suites
    cases:
        number of random cases, suite specific default if None
    silent:
        no progress output
    """
    return pick_suite(name)(max_size=max_size, seed=seed, cases=cases, silent=silent)
