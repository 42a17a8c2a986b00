"""
Closed forms for Coxeter data of linear quivers, of the stars T_{a,b,c} and of the canonical algebras
C(a+1, b+1, c+1) built on them.
Notation: a <= b <= c are branch lengths, n + 1 = a + b + c + 2 is the size of the canonical algebra,
lambda_{n-l} is the coefficient of x^{n-l} in its Coxeter polynomial.
"""
import typing

import sympy

from coxpoly.linalg.int_matrix import IntMatrix
from coxpoly.linalg.int_poly import IntPoly
from coxpoly.utils.exceptions import OutOfWindowError, OutsideLemmaHypothesesError, CoxeterParameterError
from coxpoly.utils.misc import to_int


def _sorted_triple(a, b, c) -> typing.Tuple[int, int, int]:
    a, b, c = sorted(to_int(v) for v in (a, b, c))
    if a < 1:
        raise CoxeterParameterError("branch length", a, called_from="closed_forms, branch lengths must be >= 1")
    return a, b, c


def poly_linear_A(n: int) -> IntPoly:
    """
    Coxeter polynomial of a linear quiver with n vertices: sum_{i=0}^{n} x^i
    """
    return IntPoly.geometric(n)


def poly_D(n: int) -> IntPoly:
    """
    x^n + x^(n-1) + x + 1, Coxeter polynomial of D_n (n >= 4 vertices)
    """
    if n < 4:
        raise CoxeterParameterError("n", n, called_from="poly_D, need n >= 4")
    return IntPoly.from_dict({n: 1, n - 1: 1, 1: 1, 0: 1})


def poly_boldt_T(a: int, b: int, c: int) -> IntPoly:
    """
    chi_T(x) = A_a(x) A_{b+c+1}(x) - x A_{a-1}(x) A_b(x) A_c(x) with A_k(x) = sum_{i=0}^k x^i
    """
    a, b, c = _sorted_triple(a, b, c)
    geo = IntPoly.geometric
    return geo(a) * geo(b + c + 1) - IntPoly.monomial(1) * geo(a - 1) * geo(b) * geo(c)


def coeff_T_window(a: int, b: int, c: int, ell: int) -> int:
    """
    coefficient of x^{(a+b+c)-l} in chi_T for 0 <= l <= a: (1 - l)(2 + l)/2
    """
    a, b, c = _sorted_triple(a, b, c)
    if not 0 <= ell <= a:
        raise OutOfWindowError("offset {} outside the window 0..{}".format(ell, a))
    return (1 - ell) * (2 + ell) // 2


def coeff_T_power(a: int, b: int, c: int, p: int) -> int:
    """
    coefficient of x^p in chi_T for b + c <= p <= a + b + c: -(a+b+c-1-p)(a+b+c+2-p)/2
    """
    a, b, c = _sorted_triple(a, b, c)
    if not b + c <= p <= a + b + c:
        raise OutOfWindowError("power {} outside the window {}..{}".format(p, b + c, a + b + c))
    s = a + b + c
    return -((s - 1 - p) * (s + 2 - p)) // 2


def poly_T_one(b: int, c: int) -> IntPoly:
    """
    chi of T_{1,b,c}:
    x^{b+c+2} + sum_{j=c+1}^{b+c+1} (j-b-c) x^j + sum_{j=b+1}^{c} (1-b) x^j + sum_{j=1}^{b} (2-j) x^j + 1
    """
    _, b, c = _sorted_triple(1, b, c)
    terms = {b + c + 2: 1, 0: 1}
    for j in range(c + 1, b + c + 2):
        terms[j] = terms.get(j, 0) + (j - b - c)
    for j in range(b + 1, c + 1):
        terms[j] = terms.get(j, 0) + (1 - b)
    for j in range(1, b + 1):
        terms[j] = terms.get(j, 0) + (2 - j)
    return IntPoly.from_dict(terms)


def _branch_lengths(a, b, c) -> typing.List[int]:
    branches = [to_int(v) for v in (a, b, c)]
    if any(p < 1 for p in branches):
        raise CoxeterParameterError("branch lengths", tuple(branches), called_from="closed_forms, need >= 1")
    return branches


def _j_block(p: int) -> sympy.Matrix:
    # subdiagonal identity
    return sympy.Matrix(p, p, lambda i, j: 1 if i == j + 1 else 0)


def _k_block(p: int, q: int) -> sympy.Matrix:
    # first row ones
    return sympy.Matrix(p, q, lambda i, j: 1 if i == 0 else 0)


def star_coxeter_blocks(a: int, b: int, c: int) -> IntMatrix:
    """
    Coxeter matrix of the star T_{a,b,c} in block form
        ( J_a      K_{a,b}   K_{a,c}   K_{a,1} )
        ( K_{b,a}  J_b       K_{b,c}   K_{b,1} )
        ( K_{c,a}  K_{c,b}   J_c       K_{c,1} )
        ( -K_{1,a} -K_{1,b}  -K_{1,c}  -1      )
    branches are taken in the given order
    """
    branches = _branch_lengths(a, b, c)
    rows = []
    for i, p in enumerate(branches):
        rows.append([_j_block(p) if i == j else _k_block(p, q) for j, q in enumerate(branches)] + [_k_block(p, 1)])
    rows.append([-_k_block(1, q) for q in branches] + [-sympy.ones(1, 1)])
    return IntMatrix.from_sympy(sympy.BlockMatrix(rows).as_explicit())


def _head_vector(p: int, value: int) -> typing.List[int]:
    return [value] + [0] * (p - 1)


def m_cinv_vector(a: int, b: int, c: int) -> typing.Tuple[int, ...]:
    """
    m C_B^{-1} = (-e_1^(a), -e_1^(b), -e_1^(c), 2) for B = T_{a,b,c} and m = (1, ..., 1, 2)
    """
    result = []
    for p in _branch_lengths(a, b, c):
        result += _head_vector(p, -1)
    return tuple(result + [2])


def _delta(x: int, y: int) -> int:
    return 1 if x == y else 0


def lemma_family(a: int, b: int, c: int) -> str:
    """
    'fixed' for (1,2,c) with c >= 5, 'fibonacci' for (1,b,c) with b >= 3, 'doubling' for a >= 2
    """
    a, b, c = _sorted_triple(a, b, c)
    if a == 1 and b == 2 and c >= 5:
        return "fixed"
    if a == 1 and b >= 3:
        return "fibonacci"
    if a >= 2:
        return "doubling"
    raise OutsideLemmaHypothesesError(a, b, c)


def fibonacci(r: int) -> int:
    """
    F_0 = F_1 = 1, F_{r+2} = F_{r+1} + F_r
    """
    return int(sympy.fibonacci(r + 1))


def predicted_canonical_coeffs(a: int, b: int, c: int) -> typing.Dict[int, int]:
    """
    Predicted coefficients lambda_{n-l} of the canonical algebra C(a+1, b+1, c+1), keyed by l
    l = -1 is the leading coefficient and l = 0 is -trace
    """
    a, b, c = _sorted_triple(a, b, c)
    family = lemma_family(a, b, c)
    result = {-1: 1, 0: 1}
    if family == "fixed":
        result.update({1: 0, 2: -1, 3: -1, 4: 0})
    elif family == "fibonacci":
        for r in range(1, b):
            result[r] = 0
        result[b] = -_delta(b, c) - 1
    else:
        for r in range(1, a):
            result[r] = 1
        result[a] = -_delta(a, b) - _delta(a, c)
    return result


def predicted_twisted_euler(a: int, b: int, c: int) -> typing.Dict[int, int]:
    """
    Predicted values <m phi_B^r, m> for B = T_{a,b,c} and m = (1, ..., 1, 2), keyed by r >= 1
    """
    a, b, c = _sorted_triple(a, b, c)
    family = lemma_family(a, b, c)
    if family == "fixed":
        return {1: 0, 2: 0, 3: 0, 4: -1}
    if family == "fibonacci":
        result = {1: 0}
        for r in range(2, b):
            result[r] = -fibonacci(r - 2)
        result[b] = -fibonacci(b - 2) + 1 + _delta(b, c)
        return result
    result = {r: -2 ** (r - 1) for r in range(1, a)}
    result[a] = -2 ** (a - 1) + 1 + _delta(a, b) + _delta(a, c)
    return result


def _unit(p: int, index: int) -> typing.List[int]:
    # epsilon_index^(p), 1-based
    vector = [0] * p
    vector[index - 1] = 1
    return vector


def _branch_part(p: int, r: int, weight) -> typing.List[int]:
    # weight(r-1) v_p - sum_{k=0}^{r-2} weight(r-2-k) e_{p-k} - e_{p-r+1}
    vector = [weight(r - 1)] * p
    for k in range(r - 1):
        vector = [x - weight(r - 2 - k) * e for x, e in zip(vector, _unit(p, p - k))]
    return [x - e for x, e in zip(vector, _unit(p, p - r + 1))]


def m_phi_power_closed_form(a: int, b: int, c: int, r: int) -> typing.Tuple[int, ...]:
    """
    Closed form of the row vector m phi_B^r for B = T_{a,b,c}, m = (1, ..., 1, 2)

    (1, b, c) with b >= 3 and 1 <= r <= b:
        r = 1:  (0, v_b - e_b, v_c - e_c, 1)
        r >= 2: (F_{r-2}, F_{r-1} v_b - sum_k F_{r-2-k} e_{b-k} - e_{b-r+1}, same for c, F_{r-1})
    a >= 2 and 1 <= r <= a:
        (2^{r-1} v_p - sum_j 2^{r-2-j} e_{p-j} - e_{p-r+1} for p = a, b, c, 2^{r-1})
    """
    a, b, c = _sorted_triple(a, b, c)
    r = to_int(r)
    family = lemma_family(a, b, c)
    if family == "fibonacci" and 1 <= r <= b:
        if r == 1:
            return tuple([0] + _branch_part(b, 1, lambda k: 1) + _branch_part(c, 1, lambda k: 1) + [1])
        return tuple([fibonacci(r - 2)] + _branch_part(b, r, fibonacci) + _branch_part(c, r, fibonacci)
                     + [fibonacci(r - 1)])
    if family == "doubling" and 1 <= r <= a:
        doubling = lambda k: 2 ** k
        return tuple(_branch_part(a, r, doubling) + _branch_part(b, r, doubling) + _branch_part(c, r, doubling)
                     + [2 ** (r - 1)])
    raise OutOfWindowError("no closed form for m phi^{} on T_{{{},{},{}}}".format(r, a, b, c))
