"""
Recovery of the characteristic polynomial of a matrix M from its power traces S_k = tr(M^k):
    lambda_{N-l} = sum_{p partition of l} (-1)^{r(p)} alpha_p S_{p_1} ... S_{p_r}
    alpha_p      = 1 / (p_1 ... p_r  prod_a m_a(p)!)
with r(p) the number of parts and m_a(p) the number of parts equal to a.
"""
import math
import typing
from collections import Counter
from dataclasses import dataclass

import sympy
from sympy.utilities.iterables import partitions

from coxpoly.linalg.int_poly import IntPoly
from coxpoly.utils.exceptions import NonIntegerResultError, CoxeterParameterError, EmptyInputError
from coxpoly.utils.misc import to_int, to_int_vector


@dataclass(frozen=True)
class Partition:
    parts: typing.Tuple[int, ...]

    def __post_init__(self):
        parts = to_int_vector(self.parts, called_from="Partition")
        if len(parts) == 0 or any(p < 1 for p in parts):
            raise CoxeterParameterError("parts", parts, called_from="Partition, parts must be >= 1")
        if list(parts) != sorted(parts, reverse=True):
            raise CoxeterParameterError("parts", parts, called_from="Partition, parts must be non-increasing")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def multiplicities(self) -> typing.Dict[int, int]:
        return dict(Counter(self.parts))

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def partitions_of(total: int) -> typing.List[Partition]:
    """
    All partitions of total, starting with (total) and ending with (1, ..., 1)
    """
    total = to_int(total)
    if total < 1:
        raise CoxeterParameterError("total", total, called_from="partitions_of, need total >= 1")
    result = []
    # sympy reuses the yielded dictionary
    for parts in partitions(total):
        expanded = []
        for part, count in sorted(parts.items(), reverse=True):
            expanded += [part] * count
        result.append(Partition(tuple(expanded)))
    return result


def waring_alpha(partition: Partition) -> sympy.Rational:
    denominator = math.prod(partition.parts)
    for count in partition.multiplicities.values():
        denominator *= sympy.factorial(count)
    return sympy.Rational(1, denominator)


def _waring_sum(power_traces: typing.Sequence[int], sign) -> typing.List[sympy.Rational]:
    traces = to_int_vector(power_traces, called_from="waring")
    if len(traces) == 0:
        raise EmptyInputError("need at least one power trace")
    n = len(traces)
    # ascending coefficients, index N - l holds lambda_{N-l}
    coeffs = [sympy.Integer(0)] * (n + 1)
    coeffs[n] = sympy.Integer(1)
    for ell in range(1, n + 1):
        value = sympy.Integer(0)
        for partition in partitions_of(ell):
            product = math.prod(traces[p - 1] for p in partition.parts)
            value += sign(partition) * waring_alpha(partition) * product
        coeffs[n - ell] = value
    return coeffs


def waring_coefficients(power_traces: typing.Sequence[int]) -> IntPoly:
    """
    Characteristic polynomial of an N x N matrix from S_1, ..., S_N, sign (-1)^(number of parts)

    Raises
    ------
    NonIntegerResultError
        if a coefficient is not an integer, i.e. the traces are not the power traces of an integer matrix
    """
    coeffs = _waring_sum(power_traces, lambda p: (-1) ** p.length)
    for index, value in enumerate(coeffs):
        if not value.is_Integer:
            raise NonIntegerResultError("coefficient of x^{} is {}, traces {} are inconsistent".format(
                index, value, tuple(power_traces)))
    return IntPoly([int(c) for c in coeffs])


def printed_sign_coefficients(power_traces: typing.Sequence[int]) -> typing.List[sympy.Rational]:
    """
    Same sum with the sign (-1)^(p_1 + ... + p_r), ascending coefficients, may be non-integer
    This sign is constant on the partitions of l and does not give the characteristic polynomial
    (already wrong for x^2 + x + 1 at l = 2)
    """
    return _waring_sum(power_traces, lambda p: (-1) ** p.total)
