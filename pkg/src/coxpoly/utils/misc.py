import numbers
from fractions import Fraction

import sympy

from coxpoly.utils.exceptions import CoxeterTypeError


def to_int(number) -> int:
    """
    Cast an exact numeric type to a python int
    Never goes through floating point
    """
    if isinstance(number, bool):
        raise CoxeterTypeError(attr=number, type=type(number), expected=int)
    if isinstance(number, numbers.Integral):
        return int(number)
    if isinstance(number, sympy.Basic):
        if number.is_Integer:
            return int(number)
        if number.is_Rational and number.q == 1:
            return int(number.p)
    if isinstance(number, Fraction) and number.denominator == 1:
        return int(number.numerator)
    if hasattr(number, "numerator") and hasattr(number, "denominator") and not isinstance(number, float):
        # domain elements (PythonMPQ, gmpy2.mpq)
        if number.denominator == 1:
            return int(number.numerator)
    raise CoxeterTypeError(attr=number, type=type(number), expected=int)


def to_int_vector(vector, called_from: str = "") -> tuple:
    """
    Cast a sequence of exact numbers to a tuple of python ints
    """
    if vector is None:
        raise CoxeterTypeError(attr=called_from + " vector", type=type(vector), expected="sequence of int")
    return tuple(to_int(v) for v in vector)


def parse_int_list(text: str) -> tuple:
    """
    Parse comma separated integers like '2,3,6'
    """
    items = [x.strip() for x in str(text).split(",") if x.strip() != ""]
    try:
        return tuple(int(x) for x in items)
    except ValueError:
        raise CoxeterTypeError(attr=text, type=str, expected="comma separated integers")
