"""
Dense matrices of arbitrary precision integers
All arithmetic stays exact: entries are python ints, heavy lifting is delegated to sympy's DomainMatrix over ZZ
"""
import typing

import sympy
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from coxpoly.utils.exceptions import DimensionMismatchError, EmptyInputError
from coxpoly.utils.misc import to_int, to_int_vector


class IntMatrix:
    """
    Immutable dense integer matrix

    Attributes
    ----------
    rows:
        number of rows
    cols:
        number of columns
    entries:
        row-major tuple of python ints, length rows*cols
    """

    __slots__ = ("_rows", "_cols", "_entries")

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def entries(self) -> typing.Tuple[int, ...]:
        return self._entries

    @property
    def shape(self) -> typing.Tuple[int, int]:
        return (self._rows, self._cols)

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    def __init__(self, rows: int, cols: int, entries: typing.Iterable[int]):
        rows = to_int(rows)
        cols = to_int(cols)
        if rows < 1 or cols < 1:
            raise EmptyInputError("matrix needs at least one row and one column, got {}x{}".format(rows, cols))
        entries = to_int_vector(entries, called_from="IntMatrix")
        if len(entries) != rows * cols:
            raise DimensionMismatchError(
                "{} entries given for a {}x{} matrix".format(len(entries), rows, cols))
        self._rows = rows
        self._cols = cols
        self._entries = entries

    @classmethod
    def from_rows(cls, rows: typing.Sequence[typing.Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if len(rows) == 0:
            raise EmptyInputError("matrix needs at least one row")
        ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatchError("ragged rows: lengths {}".format([len(x) for x in rows]))
        return cls(len(rows), ncols, [v for r in rows for v in r])

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int = None) -> "IntMatrix":
        if cols is None:
            cols = rows
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def from_sympy(cls, matrix) -> "IntMatrix":
        matrix = sympy.Matrix(matrix)
        return cls(matrix.rows, matrix.cols, [to_int(v) for v in matrix])

    @classmethod
    def from_domain(cls, matrix: DomainMatrix) -> "IntMatrix":
        return cls.from_sympy(matrix.to_Matrix())

    def to_sympy(self) -> sympy.ImmutableMatrix:
        return sympy.ImmutableMatrix(self._rows, self._cols, list(self._entries))

    def to_domain(self) -> DomainMatrix:
        return DomainMatrix([[ZZ(v) for v in self.row(i)] for i in range(self._rows)], self.shape, ZZ)

    def to_rows(self) -> typing.List[typing.List[int]]:
        return [list(self.row(i)) for i in range(self._rows)]

    def row(self, i: int) -> typing.Tuple[int, ...]:
        return self._entries[i * self._cols:(i + 1) * self._cols]

    def column(self, j: int) -> typing.Tuple[int, ...]:
        return self._entries[j::self._cols]

    def diagonal(self) -> typing.Tuple[int, ...]:
        return tuple(self[i, i] for i in range(min(self._rows, self._cols)))

    def __getitem__(self, item) -> int:
        i, j = item
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError("index ({}, {}) out of range for shape {}".format(i, j, self.shape))
        return self._entries[i * self._cols + j]

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self._cols, self._rows, [v for j in range(self._cols) for v in self.column(j)])

    def trace(self) -> int:
        return sum(self.diagonal())

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self._rows, self._cols, [-v for v in self._entries])

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other, "+")
        return IntMatrix(self._rows, self._cols, [a + b for a, b in zip(self._entries, other._entries)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other, "-")
        return IntMatrix(self._rows, self._cols, [a - b for a, b in zip(self._entries, other._entries)])

    def __mul__(self, other) -> "IntMatrix":
        # scalar multiplication only, use @ for matrix products
        factor = to_int(other)
        return IntMatrix(self._rows, self._cols, [factor * v for v in self._entries])

    __rmul__ = __mul__

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self._cols != other._rows:
            raise DimensionMismatchError(
                "can not multiply shapes {} and {}".format(self.shape, other.shape))
        return IntMatrix.from_domain(self.to_domain().matmul(other.to_domain()))

    def vecmat(self, vector: typing.Sequence[int]) -> typing.Tuple[int, ...]:
        """
        row vector times matrix
        """
        vector = to_int_vector(vector, called_from="vecmat")
        if len(vector) != self._rows:
            raise DimensionMismatchError(
                "row vector of length {} against matrix with {} rows".format(len(vector), self._rows))
        return tuple(sum(x * y for x, y in zip(vector, self.column(j)) if x) for j in range(self._cols))

    def matvec(self, vector: typing.Sequence[int]) -> typing.Tuple[int, ...]:
        """
        matrix times column vector
        """
        vector = to_int_vector(vector, called_from="matvec")
        if len(vector) != self._cols:
            raise DimensionMismatchError(
                "column vector of length {} against matrix with {} columns".format(len(vector), self._cols))
        return tuple(sum(x * y for x, y in zip(self.row(i), vector) if x) for i in range(self._rows))

    def _check_same_shape(self, other, op):
        if not isinstance(other, IntMatrix) or other.shape != self.shape:
            raise DimensionMismatchError("shapes do not match for '{}': {} and {}".format(
                op, self.shape, getattr(other, "shape", None)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return False
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._entries))

    def __repr__(self) -> str:
        return "IntMatrix(" + repr(self.to_rows()) + ")"

    def __str__(self) -> str:
        return "\n".join(str(list(self.row(i))) for i in range(self._rows))
