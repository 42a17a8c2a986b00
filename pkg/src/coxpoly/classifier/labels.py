"""
Outcomes of the classification of connected piecewise hereditary algebras by their Coxeter data
"""
import typing
from dataclasses import dataclass

from coxpoly.classifier.weights import WeightType


class ClassLabel:
    pass


def _with_weights(text: str, weight_type: typing.Optional[WeightType]) -> str:
    if weight_type is None:
        return text
    return text + ", " + str(weight_type)


@dataclass(frozen=True)
class NonTreeHereditary(ClassLabel):
    """
    derived equivalent to kQ for a quiver whose underlying graph is not a tree
    weight_type is attached when the algebra is a known canonical construction
    """
    trace: int
    weight_type: typing.Optional[WeightType] = None

    def __str__(self):
        return _with_weights("non-tree hereditary type (tr = {})".format(self.trace), self.weight_type)


@dataclass(frozen=True)
class TreeType(ClassLabel):
    """
    derived equivalent to kQ for a tree Q
    weight_type is attached when the algebra is a known canonical construction
    """
    trace: int = -1
    weight_type: typing.Optional[WeightType] = None

    def __str__(self):
        return _with_weights("tree type (tr = {}, conditions i-iii fail)".format(self.trace), self.weight_type)


@dataclass(frozen=True)
class CanonicalType(ClassLabel):
    """
    derived equivalent to a canonical algebra with t branches

    Attributes
    ----------
    trace:
        trace of the Coxeter matrix
    t:
        number of branches, a lower bound when exact is False
    exact:
        False when only t > 3 is known (trace < -1 without weights)
    condition:
        which of the trace -1 conditions ('i', 'ii', 'iii') fired, None if not separated by them
    weight_type:
        attached when the algebra is a known canonical construction
    """
    trace: int
    t: int = 3
    exact: bool = True
    condition: typing.Optional[str] = None
    weight_type: typing.Optional[WeightType] = None

    def __str__(self):
        result = "canonical t{}{}".format("=" if self.exact else ">", self.t if self.exact else 3)
        if self.condition is not None:
            result += " (condition {})".format(self.condition)
        else:
            result += " (tr = {})".format(self.trace)
        return _with_weights(result, self.weight_type)


@dataclass(frozen=True)
class NeedsSeparation(ClassLabel):
    """
    trace -1: trees and canonical algebras with three branches need the coefficient conditions
    """
    trace: int = -1

    def __str__(self):
        return "trace -1, tree type or canonical t=3"
