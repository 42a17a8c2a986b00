from coxpoly.linalg import IntMatrix, IntPoly, determinant, inverse_unimodular, char_poly, kronecker, \
    matrix_power, power_trace, power_traces
from coxpoly.utils import NonSquareError, NotUnimodularError, DimensionMismatchError, EmptyInputError, \
    CoxeterTypeError
import numpy, pytest, sympy

A2_PHI = IntMatrix.from_rows([[0, 1], [-1, -1]])


def random_matrix(rows, cols, low=-3, high=3):
    return IntMatrix(rows, cols, [int(x) for x in numpy.random.randint(low, high + 1, size=rows * cols)])


def random_unimodular(n):
    lower = [[1 if i == j else (int(numpy.random.randint(-2, 3)) if i > j else 0) for j in range(n)] for i in
             range(n)]
    upper = [[1 if i == j else (int(numpy.random.randint(-2, 3)) if i < j else 0) for j in range(n)] for i in
             range(n)]
    return IntMatrix.from_rows(lower) @ IntMatrix.from_rows(upper)


@pytest.mark.parametrize("matrix, expected", [
    (IntMatrix.identity(3), 1),
    (IntMatrix.from_rows([[1, 0], [1, 1]]), 1),
    (A2_PHI, 1),
    (IntMatrix.from_rows([[2, 0], [0, 1]]), 2),
])
def test_determinant(matrix, expected):
    assert determinant(matrix) == expected


def test_non_square():
    matrix = IntMatrix(2, 3, range(6))
    for function in [determinant, inverse_unimodular, char_poly]:
        with pytest.raises(NonSquareError):
            function(matrix)
    with pytest.raises(NonSquareError):
        power_trace(matrix, 1)


def test_inverse_unimodular():
    assert inverse_unimodular(IntMatrix.identity(4)) == IntMatrix.identity(4)
    assert inverse_unimodular(IntMatrix.from_rows([[1, 0], [1, 1]])) == IntMatrix.from_rows([[1, 0], [-1, 1]])
    with pytest.raises(NotUnimodularError):
        inverse_unimodular(IntMatrix.from_rows([[2, 0], [0, 1]]))
    with pytest.raises(NotUnimodularError):
        inverse_unimodular(IntMatrix.zeros(3))


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_inverse_random(n):
    matrix = random_unimodular(n)
    inverse = inverse_unimodular(matrix)
    assert inverse @ matrix == IntMatrix.identity(n)
    assert matrix @ inverse == IntMatrix.identity(n)


@pytest.mark.parametrize("matrix, expected", [
    (IntMatrix.zeros(2), [0, 0, 1]),
    (A2_PHI, [1, 1, 1]),
    (IntMatrix.from_rows([[3, 2], [-2, -1]]), [1, -2, 1]),
])
def test_char_poly(matrix, expected):
    assert char_poly(matrix) == IntPoly(expected)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_char_poly_random(n):
    matrix = random_matrix(n, n)
    chi = char_poly(matrix)
    assert chi.degree == n
    assert chi.is_monic()
    assert chi(0) == (-1) ** n * determinant(matrix)
    assert chi.coefficient(n - 1) == -matrix.trace()
    # against sympy's dense implementation
    assert chi == IntPoly.from_sympy(matrix.to_sympy().charpoly(sympy.Symbol("x")).as_expr())


def test_kronecker():
    b = random_matrix(2, 3)
    assert kronecker(IntMatrix.identity(1), b) == b
    assert kronecker(random_matrix(2, 2), random_matrix(2, 2)).shape == (4, 4)
    result = kronecker(IntMatrix.from_rows([[1, 0], [-1, 1]]), IntMatrix.from_rows([[1, -1], [0, 1]]))
    assert result == IntMatrix.from_rows([[1, -1, 0, 0], [0, 1, 0, 0], [-1, 1, 1, -1], [0, -1, 0, 1]])


def test_kronecker_mixed_product():
    for i in range(5):
        p, q, r, s, t, u = [int(x) for x in numpy.random.randint(1, 4, size=6)]
        a, b = random_matrix(p, q), random_matrix(r, s)
        c, d = random_matrix(q, t), random_matrix(s, u)
        assert kronecker(a, b) @ kronecker(c, d) == kronecker(a @ c, b @ d)


def test_power_trace():
    assert power_trace(A2_PHI, 0) == 2
    assert power_trace(A2_PHI, 1) == -1
    assert power_trace(A2_PHI, 2) == -1
    assert power_trace(A2_PHI, 3) == 2
    assert matrix_power(A2_PHI, 3) == IntMatrix.identity(2)
    assert power_traces(A2_PHI, 6) == [-1, -1, 2, -1, -1, 2]


def test_power_trace_newton():
    # p_1 = e_1, p_2 = e_1 p_1 - 2 e_2, p_3 = e_1 p_2 - e_2 p_1 + 3 e_3
    for i in range(10):
        matrix = random_matrix(4, 4)
        chi = char_poly(matrix)
        e1, e2, e3 = -chi.coefficient(3), chi.coefficient(2), -chi.coefficient(1)
        p1, p2, p3 = power_traces(matrix, 3)
        assert p1 == e1
        assert p2 == e1 * p1 - 2 * e2
        assert p3 == e1 * p2 - e2 * p1 + 3 * e3


def test_large_entries():
    # powers of the Kronecker Coxeter matrix grow linearly, powers of [[1,1],[1,0]] like Fibonacci numbers
    fib = IntMatrix.from_rows([[1, 1], [1, 0]])
    assert matrix_power(fib, 200)[0, 1] == int(sympy.fibonacci(200))


def test_int_matrix():
    with pytest.raises(DimensionMismatchError):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(DimensionMismatchError):
        IntMatrix(2, 2, [1, 2, 3])
    with pytest.raises(EmptyInputError):
        IntMatrix.from_rows([])
    with pytest.raises(CoxeterTypeError):
        IntMatrix(1, 1, [0.5])
    matrix = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert matrix.T == IntMatrix.from_rows([[1, 4], [2, 5], [3, 6]])
    assert matrix.vecmat([1, -1]) == (-3, -3, -3)
    assert matrix.matvec([1, 0, 1]) == (4, 10)
    assert matrix.row(1) == (4, 5, 6)
    assert matrix.column(2) == (3, 6)
    assert 2 * matrix == matrix + matrix
    assert -matrix + matrix == IntMatrix.zeros(2, 3)
    with pytest.raises(DimensionMismatchError):
        matrix @ matrix
    with pytest.raises(DimensionMismatchError):
        matrix.vecmat([1, 2, 3])
    assert str(IntMatrix.identity(2)) == "[1, 0]\n[0, 1]"


def test_int_poly():
    assert IntPoly.geometric(2) == IntPoly([1, 1, 1])
    assert IntPoly.geometric(-1).is_zero()
    assert IntPoly([1, 2, 0, 0]).degree == 1
    assert IntPoly([1, 1]) * IntPoly([1, 1]) == IntPoly([1, 2, 1])
    assert IntPoly([1, 1]) - IntPoly([1, 1]) == IntPoly([0])
    assert 1 - IntPoly([1, 1]) == IntPoly([0, -1])
    assert IntPoly([1, 0, 3]).coefficient(5) == 0
    assert IntPoly([1, 1, 1])(2) == 7
    assert IntPoly([1, 1, 0, 1, 1]).is_palindromic()
    assert not IntPoly([1, 2, 1, 1]).is_palindromic()
    assert IntPoly([1, 1, 1]).wire() == "[1, 1, 1]"
    assert IntPoly.from_descending([1, 0, -1]) == IntPoly([-1, 0, 1])
    assert IntPoly.from_dict({3: 1, 0: 1}) == IntPoly([1, 0, 0, 1])
    assert IntPoly([1, 2]).reversed() == IntPoly([2, 1])
