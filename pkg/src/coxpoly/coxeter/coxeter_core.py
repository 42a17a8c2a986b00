"""
Coxeter matrix, Euler form and Coxeter polynomial of an algebra given by its Cartan matrix C:
    phi = -C^{-t} C
    <x, y> = x C^{-t} y^t
    chi(x) = det(x I - phi)
plus the one-point extension machinery (block Coxeter matrix and the coefficient recursion)
"""
import typing
from dataclasses import dataclass

import sympy

from coxpoly.linalg.exact import inverse_unimodular, char_poly
from coxpoly.linalg.int_matrix import IntMatrix
from coxpoly.linalg.int_poly import IntPoly
from coxpoly.utils.exceptions import DimensionMismatchError
from coxpoly.utils.misc import to_int_vector


@dataclass(frozen=True)
class CoxeterData:
    """
    cartan: C
    cartan_inv: C^{-1}
    coxeter: phi = -(C^{-1})^t C
    chi: characteristic polynomial of phi, monic with chi(0) = 1
    """
    cartan: IntMatrix
    cartan_inv: IntMatrix
    coxeter: IntMatrix
    chi: IntPoly

    @property
    def size(self) -> int:
        return self.cartan.rows

    @property
    def trace(self) -> int:
        return self.coxeter.trace()


def coxeter_matrix(cartan: IntMatrix) -> IntMatrix:
    return -(inverse_unimodular(cartan).T @ cartan)


def coxeter_data(cartan: IntMatrix) -> CoxeterData:
    cartan_inv = inverse_unimodular(cartan)
    coxeter = -(cartan_inv.T @ cartan)
    return CoxeterData(cartan=cartan, cartan_inv=cartan_inv, coxeter=coxeter, chi=char_poly(coxeter))


def coxeter_polynomial(cartan: IntMatrix) -> IntPoly:
    return char_poly(coxeter_matrix(cartan))


def _check_vector(vector, n: int, name: str) -> typing.Tuple[int, ...]:
    vector = to_int_vector(vector, called_from=name)
    if len(vector) != n:
        raise DimensionMismatchError("{} has length {}, expected {}".format(name, len(vector), n))
    return vector


def _euler(cartan_inv: IntMatrix, x, y) -> int:
    # x C^{-t} y^t
    return sum(a * b for a, b in zip(cartan_inv.T.vecmat(x), y))


def euler_form(cartan: IntMatrix, x: typing.Sequence[int], y: typing.Sequence[int]) -> int:
    """
    <x, y> = x C^{-t} y^t
    """
    cartan_inv = inverse_unimodular(cartan)
    n = cartan.rows
    return _euler(cartan_inv, _check_vector(x, n, "x"), _check_vector(y, n, "y"))


def twisted_euler_sequence(cartan_b: IntMatrix, m: typing.Sequence[int], length: int) -> typing.List[int]:
    """
    [<m phi_B^i, m> for i = 0..length]
    """
    cartan_inv = inverse_unimodular(cartan_b)
    m = _check_vector(m, cartan_b.rows, "m")
    phi = -(cartan_inv.T @ cartan_b)
    right = cartan_inv.T.matvec(m)
    result = []
    current = m
    for i in range(length + 1):
        if i > 0:
            current = phi.vecmat(current)
        result.append(sum(a * b for a, b in zip(current, right)))
    return result


def ope_coxeter_matrix(cartan_b: IntMatrix, m: typing.Sequence[int]) -> IntMatrix:
    """
    Coxeter matrix of B[M], extension vertex first:
        ( <m,m> - 1         -m phi_B )
        ( -C_B^{-t} m^t      phi_B   )
    """
    cartan_inv = inverse_unimodular(cartan_b)
    n = cartan_b.rows
    m = _check_vector(m, n, "m")
    phi = -(cartan_inv.T @ cartan_b)
    corner = _euler(cartan_inv, m, m) - 1
    top = [-v for v in phi.vecmat(m)]
    left = [-v for v in cartan_inv.T.matvec(m)]
    blocks = sympy.BlockMatrix([[sympy.Matrix([[corner]]), sympy.Matrix(1, n, top)],
                                [sympy.Matrix(n, 1, left), phi.to_sympy()]])
    return IntMatrix.from_sympy(blocks.as_explicit())


def ope_coefficients(cartan_b: IntMatrix, m: typing.Sequence[int]) -> IntPoly:
    """
    Coxeter polynomial of B[M] from the coefficients of chi_B and the twisted Euler values:
        lambda^A_{n+1-l} = lambda^B_{n-l} - (<m,m> - 1) lambda^B_{n-l+1}
                           - sum_{i=1}^{l-1} lambda^B_{n-l+i+1} <m phi_B^i, m>      for 0 <= l <= n
    lambda^B outside 0..n is 0; the constant term is 1 since chi_A(0) = det(-phi_A) = 1
    """
    n = cartan_b.rows
    m = _check_vector(m, n, "m")
    chi_b = coxeter_polynomial(cartan_b)
    twisted = twisted_euler_sequence(cartan_b, m, n)
    corner = twisted[0] - 1
    coeffs = [0] * (n + 2)
    coeffs[0] = 1
    for ell in range(n + 1):
        value = chi_b.coefficient(n - ell) - corner * chi_b.coefficient(n - ell + 1)
        value -= sum(chi_b.coefficient(n - ell + i + 1) * twisted[i] for i in range(1, ell))
        coeffs[n + 1 - ell] = value
    return IntPoly(coeffs)
