"""
Polynomials with arbitrary precision integer coefficients, stored ascending by degree
Arithmetic goes through sympy.Poly over ZZ
"""
import typing

import sympy

from coxpoly.utils.misc import to_int, to_int_vector

X = sympy.Symbol("x")


def _normalize(coeffs: typing.Sequence[int]) -> typing.Tuple[int, ...]:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) == 0:
        coeffs = [0]
    return tuple(coeffs)


class IntPoly:
    """
    coeffs[i] is the coefficient of x^i
    Normalized: no trailing zeros, the zero polynomial is (0,)
    """

    __slots__ = ("_coeffs",)

    @property
    def coeffs(self) -> typing.Tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading(self) -> int:
        return self._coeffs[-1]

    def __init__(self, coeffs: typing.Iterable[int]):
        self._coeffs = _normalize(to_int_vector(coeffs, called_from="IntPoly"))

    @classmethod
    def from_descending(cls, coeffs: typing.Sequence[int]) -> "IntPoly":
        return cls(reversed(list(coeffs)))

    @classmethod
    def from_sympy(cls, poly) -> "IntPoly":
        if not isinstance(poly, sympy.Poly):
            poly = sympy.Poly(poly, X, domain="ZZ")
        return cls.from_descending(poly.all_coeffs())

    @classmethod
    def from_dict(cls, terms: typing.Dict[int, int]) -> "IntPoly":
        if not terms:
            return cls([0])
        coeffs = [0] * (max(terms.keys()) + 1)
        for power, value in terms.items():
            coeffs[power] += value
        return cls(coeffs)

    @classmethod
    def monomial(cls, power: int, coefficient: int = 1) -> "IntPoly":
        return cls([0] * power + [coefficient])

    @classmethod
    def geometric(cls, degree: int) -> "IntPoly":
        """
        sum_{i=0}^{degree} x^i, the zero polynomial for negative degree
        """
        if degree < 0:
            return cls([0])
        return cls([1] * (degree + 1))

    def to_sympy(self, symbol=X) -> sympy.Poly:
        return sympy.Poly(list(reversed(self._coeffs)), symbol, domain="ZZ")

    def coefficient(self, power: int) -> int:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return 0

    __getitem__ = coefficient

    def __call__(self, value):
        result = self.to_sympy().eval(value)
        if result.is_Integer:
            return int(result)
        return result

    def reversed(self) -> "IntPoly":
        return IntPoly(reversed(self._coeffs))

    def is_zero(self) -> bool:
        return self._coeffs == (0,)

    def is_monic(self) -> bool:
        return self.leading == 1

    def is_palindromic(self) -> bool:
        return self._coeffs == self._coeffs[::-1]

    def __add__(self, other) -> "IntPoly":
        return IntPoly.from_sympy(self.to_sympy() + _as_poly(other).to_sympy())

    __radd__ = __add__

    def __sub__(self, other) -> "IntPoly":
        return IntPoly.from_sympy(self.to_sympy() - _as_poly(other).to_sympy())

    def __rsub__(self, other) -> "IntPoly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "IntPoly":
        return IntPoly.from_sympy(self.to_sympy() * _as_poly(other).to_sympy())

    __rmul__ = __mul__

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self._coeffs])

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self._coeffs == other._coeffs
        return False

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def wire(self) -> str:
        """
        ascending coefficient list, e.g. [1, 1, 1] for x^2 + x + 1
        """
        return "[" + ", ".join(str(c) for c in self._coeffs) + "]"

    def __repr__(self) -> str:
        return "IntPoly(" + self.wire() + ")"

    def __str__(self) -> str:
        return str(self.to_sympy().as_expr())


def _as_poly(other) -> IntPoly:
    if isinstance(other, IntPoly):
        return other
    return IntPoly([to_int(other)])
