"""
Classification from Coxeter data.
For a Coxeter polynomial chi of degree N = n + 1 we write lambda_{n-l} for the coefficient of x^{n-l}.

trace > -1          : hereditary of non-tree type
trace < -1          : canonical type with more than three branches
trace = -1          : tree type or canonical with three branches, decided by
    (i)   lambda_{n-1} = 0, lambda_{n-2} = lambda_{n-3} = -1, lambda_{n-4} = 0
    (ii)  lambda_{n-1} = lambda_{n-2} = 0 and lambda_{n-l} <= -1 for some l >= 3
    (iii) lambda_{n-1} = 1 and lambda_{n-l} <= 0 for some l >= 2
"""
import typing
import warnings
from dataclasses import dataclass, replace

from coxpoly.classifier.labels import ClassLabel, NonTreeHereditary, TreeType, CanonicalType, NeedsSeparation
from coxpoly.classifier.weights import weight_type
from coxpoly.coxeter.coxeter_core import coxeter_data
from coxpoly.linalg.int_poly import IntPoly
from coxpoly.quiver.algebra import AlgebraSpec, validate_weights
from coxpoly.utils.exceptions import TraceMismatchError, CoxeterWarning

# Condition (i) also holds for the tree E7 = T_{1,2,3} (n = 6).
# Canonical algebras realizing it are C(2,3,p) with p >= 6, all with n >= 9.
CONDITION_I_MIN_RANK = 9


@dataclass(frozen=True)
class ConditionReport:
    """
    Raw outcome of the three trace -1 conditions on a polynomial
    witness_ii / witness_iii: the smallest offset l that made (ii) / (iii) true
    """
    n: int
    condition_i: bool
    condition_ii: bool
    condition_iii: bool
    witness_ii: typing.Optional[int] = None
    witness_iii: typing.Optional[int] = None

    @property
    def fired(self) -> typing.Optional[str]:
        for name, value in (("i", self.condition_i), ("ii", self.condition_ii), ("iii", self.condition_iii)):
            if value:
                return name
        return None

    def any(self) -> bool:
        return self.condition_i or self.condition_ii or self.condition_iii


def trace_trichotomy(trace: int) -> ClassLabel:
    if trace > -1:
        return NonTreeHereditary(trace=trace)
    if trace < -1:
        return CanonicalType(trace=trace, t=4, exact=False)
    return NeedsSeparation()


def _lam(chi: IntPoly, n: int) -> typing.Callable[[int], int]:
    # offset l -> lambda_{n-l}
    return lambda ell: chi.coefficient(n - ell)


def trace_minus_one_conditions(chi: IntPoly) -> ConditionReport:
    """
    Evaluate the conditions (i), (ii), (iii) without any interpretation
    Offsets l range over every index with n - l >= 0
    """
    n = chi.degree - 1
    lam = _lam(chi, n)
    condition_i = n >= 4 and lam(1) == 0 and lam(2) == -1 and lam(3) == -1 and lam(4) == 0
    witness_ii = None
    if n >= 3 and lam(1) == 0 and lam(2) == 0:
        witness_ii = next((ell for ell in range(3, n + 1) if lam(ell) <= -1), None)
    witness_iii = None
    if n >= 2 and lam(1) == 1:
        witness_iii = next((ell for ell in range(2, n + 1) if lam(ell) <= 0), None)
    return ConditionReport(n=n, condition_i=condition_i, condition_ii=witness_ii is not None,
                           condition_iii=witness_iii is not None, witness_ii=witness_ii, witness_iii=witness_iii)


def separate_trace_minus_one(chi: IntPoly) -> ClassLabel:
    """
    Separate tree type from canonical type with three branches at trace -1

    Parameters
    ----------
    chi:
        Coxeter polynomial of a connected piecewise hereditary algebra with trace -1, degree >= 2

    Returns
    -------
    CanonicalType with t=3 if one of the conditions holds, TreeType otherwise
    Condition (i) is only counted for n >= CONDITION_I_MIN_RANK

    Raises
    ------
    TraceMismatchError
        if the coefficient of x^(N-1) is not 1
    """
    if chi.coefficient(chi.degree - 1) != 1:
        raise TraceMismatchError(chi.coefficient(chi.degree - 1))
    report = trace_minus_one_conditions(chi)
    condition = report.fired
    if condition == "i" and report.n < CONDITION_I_MIN_RANK:
        warnings.warn("condition (i) holds for {} with n = {} < {}, not counted (E7 has this pattern)".format(
            chi.wire(), report.n, CONDITION_I_MIN_RANK), CoxeterWarning)
        condition = "ii" if report.condition_ii else ("iii" if report.condition_iii else None)
    if condition is None:
        return TreeType()
    return CanonicalType(trace=-1, t=3, condition=condition)


def classify_chi(chi: IntPoly) -> ClassLabel:
    trace = -chi.coefficient(chi.degree - 1)
    label = trace_trichotomy(trace)
    if isinstance(label, NeedsSeparation):
        label = separate_trace_minus_one(chi)
    return label


def classify_algebra(spec: AlgebraSpec, hints: typing.Sequence[int] = None) -> ClassLabel:
    """
    Classify the algebra described by spec from its Coxeter polynomial
    The algebra is assumed to be piecewise hereditary, this is not checked

    Parameters
    ----------
    spec:
        the algebra
    hints:
        optional weights p_1, ..., p_t; the weights of a canonical construction take precedence
    """
    weights = spec.weights
    if hints is not None:
        hints = validate_weights(hints)
        if weights is None:
            weights = hints
        elif tuple(sorted(hints)) != tuple(sorted(weights)):
            warnings.warn("weight hints {} ignored, {} has weights {}".format(hints, spec, weights), CoxeterWarning)
    chi = coxeter_data(spec.cartan()).chi
    label = classify_chi(chi)
    if weights is None:
        return label
    if isinstance(label, CanonicalType):
        return replace(label, t=len(weights), exact=True, weight_type=weight_type(weights))
    # hints alone do not make a path algebra canonical
    if spec.weights is not None:
        return replace(label, weight_type=weight_type(weights))
    return label
