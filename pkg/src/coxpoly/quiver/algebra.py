"""
Algebras described by their Cartan data: path algebras of acyclic quivers and one-point extensions
Canonical algebras are one-point extensions of a star by the module with dimension vector (1,...,1,2)
"""
import typing
from dataclasses import dataclass

import sympy

from coxpoly.linalg.int_matrix import IntMatrix
from coxpoly.quiver.quiver import Quiver, cartan_matrix, build_star
from coxpoly.utils.exceptions import DimensionMismatchError, InvalidWeightsError, NonSquareError, \
    CoxeterParameterError
from coxpoly.utils.misc import to_int_vector


def one_point_ext_cartan(cartan_b: IntMatrix, m: typing.Sequence[int]) -> IntMatrix:
    """
    Cartan matrix of B[M] with the extension vertex first:
        ( 1    0  )
        ( m^t  C_B)
    """
    if not cartan_b.is_square:
        raise NonSquareError(cartan_b.rows, cartan_b.cols, called_from="one_point_ext_cartan")
    m = to_int_vector(m, called_from="one_point_ext_cartan")
    n = cartan_b.rows
    if len(m) != n:
        raise DimensionMismatchError("dimension vector of length {} for a base with {} vertices".format(len(m), n))
    blocks = sympy.BlockMatrix([[sympy.ones(1, 1), sympy.zeros(1, n)],
                                [sympy.Matrix(n, 1, list(m)), cartan_b.to_sympy()]])
    return IntMatrix.from_sympy(blocks.as_explicit())


def validate_weights(weights: typing.Sequence[int]) -> typing.Tuple[int, ...]:
    weights = to_int_vector(weights, called_from="weights")
    if len(weights) < 2:
        raise InvalidWeightsError(weights, "need t >= 2 weights")
    if any(p < 2 for p in weights):
        raise InvalidWeightsError(weights, "every weight must be >= 2")
    return weights


def canonical_module_vector(branch_lengths: typing.Sequence[int]) -> typing.Tuple[int, ...]:
    """
    m = (1, ..., 1, 2), the 2 sits at the center omega
    """
    return (1,) * sum(branch_lengths) + (2,)


def canonical_cartan(weights: typing.Sequence[int]) -> IntMatrix:
    """
    Cartan matrix of the canonical algebra C(p_1, ..., p_t), of size sum(p_i - 1) + 2
    """
    weights = validate_weights(weights)
    branches = [p - 1 for p in weights]
    return one_point_ext_cartan(cartan_matrix(build_star(branches)), canonical_module_vector(branches))


class AlgebraSpec:
    """
    Recursive description of an algebra through its Cartan data
    weights is set for canonical constructions
    """
    weights: typing.Optional[typing.Tuple[int, ...]] = None

    @property
    def size(self) -> int:
        raise NotImplementedError()

    def cartan(self) -> IntMatrix:
        raise NotImplementedError()

    def is_canonical(self) -> bool:
        return self.weights is not None


@dataclass(frozen=True)
class PathAlgebra(AlgebraSpec):
    quiver: Quiver

    @property
    def size(self) -> int:
        return self.quiver.n

    def cartan(self) -> IntMatrix:
        return cartan_matrix(self.quiver)

    def __str__(self):
        return "kQ for {}".format(self.quiver)


@dataclass(frozen=True)
class OnePointExtension(AlgebraSpec):
    base: AlgebraSpec
    m: typing.Tuple[int, ...]
    weights: typing.Optional[typing.Tuple[int, ...]] = None

    def __post_init__(self):
        m = to_int_vector(self.m, called_from="OnePointExtension")
        if any(x < 0 for x in m):
            raise CoxeterParameterError("m", m, called_from="OnePointExtension, entries must be >= 0")
        if len(m) != self.base.size:
            raise DimensionMismatchError(
                "dimension vector of length {} for a base with {} vertices".format(len(m), self.base.size))
        object.__setattr__(self, "m", m)
        if self.weights is not None:
            object.__setattr__(self, "weights", validate_weights(self.weights))

    @property
    def size(self) -> int:
        return self.base.size + 1

    def cartan(self) -> IntMatrix:
        return one_point_ext_cartan(self.base.cartan(), self.m)

    def __str__(self):
        if self.weights is not None:
            return "C({})".format(",".join(str(p) for p in self.weights))
        return "{}[{}]".format(self.base, list(self.m))


def path_algebra(quiver: Quiver) -> PathAlgebra:
    return PathAlgebra(quiver=quiver)


def canonical_algebra(weights: typing.Sequence[int]) -> OnePointExtension:
    weights = validate_weights(weights)
    branches = [p - 1 for p in weights]
    return OnePointExtension(base=PathAlgebra(build_star(branches)), m=canonical_module_vector(branches),
                             weights=weights)
