"""
Exact integer linear algebra on IntMatrix
determinant: fraction-free Bareiss elimination over ZZ
char_poly: Berkowitz algorithm over ZZ (division free)
inverse_unimodular: Gauss-Jordan over QQ, integrality of the result is checked
"""
import typing

from sympy.matrices.expressions.kronecker import kronecker_product
from sympy.polys.domains import QQ

from coxpoly.linalg.int_matrix import IntMatrix
from coxpoly.linalg.int_poly import IntPoly
from coxpoly.utils.exceptions import NonSquareError, NotUnimodularError, CoxeterTypeError, CoxeterParameterError
from coxpoly.utils.misc import to_int


def _require_square(matrix: IntMatrix, called_from: str):
    if not matrix.is_square:
        raise NonSquareError(matrix.rows, matrix.cols, called_from=called_from)


def determinant(matrix: IntMatrix) -> int:
    _require_square(matrix, "determinant")
    return to_int(matrix.to_domain().det())


def inverse_unimodular(matrix: IntMatrix) -> IntMatrix:
    """
    Exact inverse of an integer matrix with determinant +1 or -1

    Raises
    ------
    NonSquareError, NotUnimodularError
    """
    _require_square(matrix, "inverse_unimodular")
    det = determinant(matrix)
    if det not in (1, -1):
        raise NotUnimodularError(det)
    inverse = matrix.to_domain().convert_to(QQ).inv()
    try:
        return IntMatrix.from_sympy(inverse.to_Matrix())
    except CoxeterTypeError:
        # cannot happen for |det| = 1
        raise NotUnimodularError(det)


def char_poly(matrix: IntMatrix) -> IntPoly:
    """
    det(xI - M) as a monic IntPoly of degree N
    """
    _require_square(matrix, "char_poly")
    coeffs = [to_int(c) for c in matrix.to_domain().charpoly()]
    result = IntPoly.from_descending(coeffs)
    assert result.degree == matrix.rows and result.is_monic()
    return result


def kronecker(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """
    (p x q) (x) (r x s) -> (pr x qs), block (i,j) is a[i,j]*b
    """
    return IntMatrix.from_sympy(kronecker_product(a.to_sympy(), b.to_sympy()))


def matrix_power(matrix: IntMatrix, k: int) -> IntMatrix:
    _require_square(matrix, "matrix_power")
    k = to_int(k)
    if k < 0:
        raise CoxeterParameterError("k", k, called_from="matrix_power, need k >= 0")
    if k == 0:
        return IntMatrix.identity(matrix.rows)
    return IntMatrix.from_domain(matrix.to_domain() ** k)


def power_trace(matrix: IntMatrix, k: int) -> int:
    """
    tr(M^k), k=0 gives the size of M
    """
    _require_square(matrix, "power_trace")
    if to_int(k) == 0:
        return matrix.rows
    return matrix_power(matrix, k).trace()


def power_traces(matrix: IntMatrix, count: int = None) -> typing.List[int]:
    """
    [tr(M), tr(M^2), ..., tr(M^count)], count defaults to the size of M
    """
    _require_square(matrix, "power_traces")
    if count is None:
        count = matrix.rows
    result = []
    current = matrix.to_domain()
    power = current
    for k in range(1, count + 1):
        if k > 1:
            power = power.matmul(current)
        result.append(IntMatrix.from_domain(power).trace())
    return result
