"""
Dimension vectors over the enveloping algebra A^e = A (x) A^op and the Euler form of A^e

Idempotents of A^e are ordered e_{1,1}, ..., e_{N,1}, e_{1,2}, ..., e_{N,N}: e_{i,j} sits at position (j-1) N + i
(1-based). In this ordering
    dim A  = (p(1), ..., p(N))   p(j) = j-th column of C
    dim DA = (q(1), ..., q(N))   q(i) = i-th row of C
and C_{A^e}^{-t} = C^{-1} (x) C^{-t}
"""
import itertools
import math
import typing
from dataclasses import dataclass

from coxpoly.linalg.exact import inverse_unimodular, kronecker
from coxpoly.linalg.int_matrix import IntMatrix
from coxpoly.utils.exceptions import NonSquareError, DimensionMismatchError, CoxeterParameterError
from coxpoly.utils.misc import to_int_vector


def simple_vector(n: int, v: int) -> typing.Tuple[int, ...]:
    """
    dimension vector e(v) of the simple module at vertex v (1-based)
    """
    if not 1 <= v <= n:
        raise CoxeterParameterError("v", v, called_from="simple_vector, vertices are 1..{}".format(n))
    return tuple(1 if k == v else 0 for k in range(1, n + 1))


def simple_bimodule_vector(n: int, i: int, j: int) -> typing.Tuple[int, ...]:
    """
    dimension vector e_{A^e}(i, j) of the simple A^e-module at the idempotent e_{i,j}, length n^2
    """
    for name, value in (("i", i), ("j", j)):
        if not 1 <= value <= n:
            raise CoxeterParameterError(name, value, called_from="simple_bimodule_vector, vertices are 1..{}".format(n))
    vector = [0] * (n * n)
    vector[(j - 1) * n + (i - 1)] = 1
    return tuple(vector)


def bimodule_dims(cartan: IntMatrix) -> typing.Tuple[typing.Tuple[int, ...], typing.Tuple[int, ...]]:
    """
    Returns
    -------
    (dim A, dim DA) as A^e-modules
    """
    if not cartan.is_square:
        raise NonSquareError(cartan.rows, cartan.cols, called_from="bimodule_dims")
    n = cartan.rows
    dim_a = tuple(itertools.chain.from_iterable(cartan.column(j) for j in range(n)))
    dim_da = tuple(itertools.chain.from_iterable(cartan.row(i) for i in range(n)))
    return dim_a, dim_da


@dataclass(frozen=True)
class EnvelopingData:
    """
    env_inv_trans: C^{-1} (x) C^{-t}, the transposed inverse Cartan matrix of A^e
    dim_A, dim_DA: dimension vectors of A and DA over A^e
    """
    env_inv_trans: IntMatrix
    dim_A: typing.Tuple[int, ...]
    dim_DA: typing.Tuple[int, ...]

    @property
    def size(self) -> int:
        """
        number of vertices of A
        """
        return math.isqrt(len(self.dim_A))

    def form(self, x: typing.Sequence[int], y: typing.Sequence[int]) -> int:
        """
        <x, y>_{A^e} = x C_{A^e}^{-t} y^t
        """
        y = to_int_vector(y, called_from="EnvelopingData.form")
        if len(y) != self.env_inv_trans.cols:
            raise DimensionMismatchError("vector of length {} for an enveloping algebra with {} idempotents".format(
                len(y), self.env_inv_trans.cols))
        return sum(a * b for a, b in zip(self.env_inv_trans.vecmat(x), y))

    def row(self, x: typing.Sequence[int]) -> typing.Tuple[int, ...]:
        """
        the linear form y -> <x, y>_{A^e} as a row vector
        """
        return self.env_inv_trans.vecmat(x)


def enveloping_data(cartan: IntMatrix) -> EnvelopingData:
    cartan_inv = inverse_unimodular(cartan)
    dim_a, dim_da = bimodule_dims(cartan)
    return EnvelopingData(env_inv_trans=kronecker(cartan_inv, cartan_inv.T), dim_A=dim_a, dim_DA=dim_da)


def env_euler_form(cartan: IntMatrix, x: typing.Sequence[int], y: typing.Sequence[int]) -> int:
    """
    x (C^{-1} (x) C^{-t}) y^t for vectors of length N^2

    Raises
    ------
    NotUnimodularError, DimensionMismatchError
    """
    data = enveloping_data(cartan)
    return data.form(x, y)
