from coxpoly.classifier import RepType, WeightType, weight_type, weight_defect, canonical_triples, \
    NonTreeHereditary, TreeType, CanonicalType, NeedsSeparation, trace_trichotomy, trace_minus_one_conditions, \
    separate_trace_minus_one, classify_chi, classify_algebra, confrontation, CONDITION_I_MIN_RANK
from coxpoly.coxeter import coxeter_polynomial, poly_boldt_T
from coxpoly.quiver import Quiver, cartan_matrix, build_star, linear_quiver, canonical_cartan, path_algebra, \
    canonical_algebra, enumerate_trees
from coxpoly.linalg import IntPoly
from coxpoly.utils import CoxeterWarning, TraceMismatchError, InvalidWeightsError, OutsideLemmaHypothesesError
import sympy, warnings, pytest

KRONECKER = Quiver(n=2, arrows=((1, 2), (1, 2)))


@pytest.mark.parametrize("weights, delta, kind", [
    ((2, 3, 5), sympy.Rational(-1, 30), RepType.DOMESTIC),
    ((2, 2, 7), sympy.Rational(-1, 7), RepType.DOMESTIC),
    ((3, 3, 3), 0, RepType.TUBULAR),
    ((2, 4, 4), 0, RepType.TUBULAR),
    ((2, 3, 6), 0, RepType.TUBULAR),
    ((2, 2, 2, 2), 0, RepType.TUBULAR),
    ((2, 3, 7), sympy.Rational(1, 42), RepType.WILD),
    ((2, 2, 2, 3), sympy.Rational(1, 6), RepType.WILD),
    ((5, 7), sympy.Rational(-12, 35), RepType.DOMESTIC),
])
def test_weight_type(weights, delta, kind):
    assert weight_defect(weights) == delta
    assert weight_type(weights) == WeightType(delta=delta, kind=kind)


def test_weight_type_str():
    assert str(weight_type((3, 3, 3))) == "tubular, delta=0"
    assert str(weight_type((2, 3, 7))) == "wild, delta=1/42"


@pytest.mark.parametrize("weights", [(1, 3, 3), (4,), (), (2, 0)])
def test_invalid_weights(weights):
    with pytest.raises(InvalidWeightsError):
        weight_type(weights)


@pytest.mark.parametrize("size, expected", [
    (7, []),
    (8, [(3, 3, 3)]),
    (9, [(2, 4, 4), (3, 3, 4)]),
    (10, [(2, 3, 6), (2, 4, 5), (3, 3, 5), (3, 4, 4)]),
])
def test_canonical_triples(size, expected):
    assert canonical_triples(size) == expected


def test_trace_trichotomy():
    assert trace_trichotomy(2) == NonTreeHereditary(trace=2)
    assert trace_trichotomy(0) == NonTreeHereditary(trace=0)
    assert trace_trichotomy(-1) == NeedsSeparation()
    label = trace_trichotomy(-2)
    assert isinstance(label, CanonicalType)
    assert not label.exact
    assert str(label) == "canonical t>3 (tr = -2)"


@pytest.mark.parametrize("weights, condition", [
    ((2, 3, 6), "i"),
    ((2, 3, 7), "i"),
    ((2, 4, 4), "ii"),
    ((2, 4, 5), "ii"),
    ((3, 3, 3), "iii"),
    ((3, 3, 4), "iii"),
])
def test_separate_canonical(weights, condition):
    label = separate_trace_minus_one(coxeter_polynomial(canonical_cartan(weights)))
    assert label == CanonicalType(trace=-1, t=3, condition=condition)


def test_separate_trees():
    assert separate_trace_minus_one(IntPoly.geometric(10)) == TreeType()
    for n in range(2, 9):
        for tree in enumerate_trees(n):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", CoxeterWarning)
                assert separate_trace_minus_one(coxeter_polynomial(cartan_matrix(tree))) == TreeType()


def test_condition_i_on_e7():
    chi = poly_boldt_T(1, 2, 3)
    assert chi == IntPoly([1, 1, 0, -1, -1, 0, 1, 1])
    report = trace_minus_one_conditions(chi)
    assert report.n == 6 < CONDITION_I_MIN_RANK
    assert report.condition_i
    assert report.fired == "i"
    with pytest.warns(CoxeterWarning):
        assert separate_trace_minus_one(chi) == TreeType()


def test_condition_report_witnesses():
    report = trace_minus_one_conditions(coxeter_polynomial(canonical_cartan((2, 4, 4))))
    assert report.condition_ii and report.witness_ii == 3
    assert not report.condition_iii and report.witness_iii is None
    report = trace_minus_one_conditions(coxeter_polynomial(canonical_cartan((3, 3, 3))))
    assert report.condition_iii and report.witness_iii == 2
    report = trace_minus_one_conditions(IntPoly.geometric(10))
    assert not report.any()
    assert report.fired is None


def test_trace_mismatch():
    with pytest.raises(TraceMismatchError):
        separate_trace_minus_one(IntPoly([1, -2, 1]))


def test_classify_chi():
    assert classify_chi(IntPoly([1, -2, 1])) == NonTreeHereditary(trace=2)
    assert classify_chi(IntPoly([1, 1, 0, 1, 1])) == TreeType()
    assert isinstance(classify_chi(coxeter_polynomial(canonical_cartan((2, 2, 2, 2)))), CanonicalType)


@pytest.mark.parametrize("spec, expected", [
    (path_algebra(KRONECKER), "non-tree hereditary type (tr = 2)"),
    (path_algebra(build_star((1, 1, 1))), "tree type (tr = -1, conditions i-iii fail)"),
    (path_algebra(linear_quiver(5)), "tree type (tr = -1, conditions i-iii fail)"),
    (canonical_algebra((2, 3, 7)), "canonical t=3 (condition i), wild, delta=1/42"),
    (canonical_algebra((2, 3, 6)), "canonical t=3 (condition i), tubular, delta=0"),
    (canonical_algebra((3, 3, 3)), "canonical t=3 (condition iii), tubular, delta=0"),
    (canonical_algebra((2, 4, 4)), "canonical t=3 (condition ii), tubular, delta=0"),
    (canonical_algebra((2, 2, 2)), "tree type (tr = -1, conditions i-iii fail), domestic, delta=-1/2"),
    (canonical_algebra((2, 3)), "non-tree hereditary type (tr = 0), domestic, delta=-5/6"),
])
def test_classify_algebra(spec, expected):
    assert str(classify_algebra(spec)) == expected


def test_classify_algebra_four_branches():
    label = classify_algebra(canonical_algebra((2, 2, 2, 2)))
    assert label.t == 4 and label.exact
    assert label.trace < -1
    assert label.weight_type == weight_type((2, 2, 2, 2))


def test_classify_domestic_canonical():
    assert classify_algebra(canonical_algebra((2, 2, 2))) == TreeType(weight_type=weight_type((2, 2, 2)))
    assert classify_algebra(canonical_algebra((2, 3))) == NonTreeHereditary(trace=0, weight_type=weight_type((2, 3)))
    assert classify_algebra(canonical_algebra((3, 3))).weight_type.kind == RepType.DOMESTIC


def test_classify_algebra_hints():
    spec = canonical_algebra((2, 3, 6))
    with pytest.warns(CoxeterWarning):
        label = classify_algebra(spec, hints=(2, 2, 2))
    assert label.weight_type == weight_type((2, 3, 6))
    with warnings.catch_warnings():
        warnings.simplefilter("error", CoxeterWarning)
        assert classify_algebra(spec, hints=(6, 3, 2)).weight_type.kind == RepType.TUBULAR
    # hints are not applied to algebras that are not separated as canonical
    assert classify_algebra(path_algebra(linear_quiver(3)), hints=(2, 3, 6)) == TreeType()


@pytest.mark.parametrize("triple, partner, exponent, tree_coefficient, canonical_coefficient", [
    ((2, 2, 2), "A8", 5, 1, -2),
    ((1, 2, 5), "T1,2,6", 5, -1, 0),
    ((1, 3, 3), "T1,1,6", 5, 0, -2),
])
def test_confrontation(triple, partner, exponent, tree_coefficient, canonical_coefficient):
    conf = confrontation(*triple)
    assert conf.partner_label == partner
    assert conf.exponent == exponent
    assert conf.tree_coefficient == tree_coefficient
    assert conf.canonical_coefficient == canonical_coefficient
    assert conf.separated


def test_confrontation_str():
    assert str(confrontation(2, 2, 2)) == "C(3, 3, 3) vs A8 at x^5: -2 vs 1"


@pytest.mark.parametrize("triple", [(1, 1, 1), (1, 1, 5), (1, 2, 4)])
def test_confrontation_outside(triple):
    with pytest.raises(OutsideLemmaHypothesesError):
        confrontation(*triple)


def _all_separated(max_size):
    for size in range(8, max_size + 1):
        for weights in canonical_triples(size):
            assert confrontation(*(p - 1 for p in weights)).separated


def test_all_confrontations_separated():
    _all_separated(12)


@pytest.mark.slow
def test_all_confrontations_separated_slow():
    _all_separated(20)
