"""
Representation type of a canonical algebra C(p_1, ..., p_t) from the sign of
    delta_p = t - 2 - sum_i 1/p_i
"""
import typing
from dataclasses import dataclass
from enum import Enum

import sympy

from coxpoly.quiver.algebra import validate_weights


class RepType(Enum):
    DOMESTIC = "domestic"
    TUBULAR = "tubular"
    WILD = "wild"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class WeightType:
    delta: sympy.Rational
    kind: RepType

    def __str__(self):
        return "{}, delta={}".format(self.kind, self.delta)


def weight_defect(weights: typing.Sequence[int]) -> sympy.Rational:
    weights = validate_weights(weights)
    return sympy.Integer(len(weights) - 2) - sum((sympy.Rational(1, p) for p in weights), sympy.Integer(0))


def weight_type(weights: typing.Sequence[int]) -> WeightType:
    """
    Parameters
    ----------
    weights:
        p_1, ..., p_t with t >= 2 and every p_i >= 2 (a weight 1 is rejected, not dropped)

    Returns
    -------
    WeightType
        delta < 0 domestic, delta = 0 tubular, delta > 0 wild
    """
    delta = weight_defect(weights)
    if delta < 0:
        kind = RepType.DOMESTIC
    elif delta == 0:
        kind = RepType.TUBULAR
    else:
        kind = RepType.WILD
    return WeightType(delta=delta, kind=kind)


def canonical_triples(size: int) -> typing.List[typing.Tuple[int, int, int]]:
    """
    All weight triples p_1 <= p_2 <= p_3 with delta_p >= 0 whose canonical algebra has `size` vertices,
    i.e. p_1 + p_2 + p_3 = size + 1
    """
    total = size + 1
    result = []
    for p1 in range(2, total // 3 + 1):
        for p2 in range(p1, (total - p1) // 2 + 1):
            p3 = total - p1 - p2
            if weight_defect((p1, p2, p3)) >= 0:
                result.append((p1, p2, p3))
    return result
