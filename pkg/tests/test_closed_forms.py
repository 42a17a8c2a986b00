from coxpoly.coxeter.closed_forms import poly_linear_A, poly_D, poly_boldt_T, coeff_T_window, coeff_T_power, \
    poly_T_one, star_coxeter_blocks, m_cinv_vector, predicted_canonical_coeffs, predicted_twisted_euler, \
    m_phi_power_closed_form, fibonacci
from coxpoly.coxeter import coxeter_matrix, coxeter_polynomial, ope_coefficients, twisted_euler_sequence
from coxpoly.quiver import cartan_matrix, linear_quiver, build_star, canonical_module_vector, canonical_cartan
from coxpoly.linalg import IntMatrix, IntPoly, inverse_unimodular
from coxpoly.utils import OutOfWindowError, OutsideLemmaHypothesesError
import itertools, pytest

CORNER_CASES = [(1, 3, 3), (1, 3, 4), (2, 2, 2), (2, 2, 3), (2, 3, 3), (1, 2, 5), (1, 2, 6), (3, 3, 5)]


def triples(max_sum):
    for a in range(1, max_sum + 1):
        for b in range(a, max_sum + 1):
            for c in range(b, max_sum - a - b + 1):
                yield a, b, c


def star_poly(a, b, c):
    return coxeter_polynomial(cartan_matrix(build_star((a, b, c))))


def test_poly_linear_A():
    assert poly_linear_A(1) == IntPoly([1, 1])
    assert poly_linear_A(2) == IntPoly([1, 1, 1])
    for n in range(1, 31):
        assert poly_linear_A(n).coeffs == (1,) * (n + 1)
        assert poly_linear_A(n) == coxeter_polynomial(cartan_matrix(linear_quiver(n)))


def test_poly_D():
    assert poly_D(4) == IntPoly([1, 1, 0, 1, 1])
    for n in range(4, 31):
        assert poly_D(n) == star_poly(1, 1, n - 3)


def test_poly_boldt_T():
    assert poly_boldt_T(1, 1, 1) == IntPoly([1, 1, 0, 1, 1])
    assert poly_boldt_T(1, 2, 2) == IntPoly([1, 1, 0, -1, 0, 1, 1])
    assert poly_boldt_T(5, 2, 1) == poly_boldt_T(1, 2, 5)
    for n in range(4, 11):
        assert poly_boldt_T(1, 1, n - 2) == poly_D(n + 1)


def _closed_form_checks(max_sum):
    for a, b, c in triples(max_sum):
        chi = star_poly(a, b, c)
        assert poly_boldt_T(a, b, c) == chi
        assert chi.degree == a + b + c + 1
        for ell in range(a + 1):
            assert coeff_T_window(a, b, c, ell) == chi.coefficient(a + b + c - ell)
        for p in range(b + c, a + b + c + 1):
            assert coeff_T_power(a, b, c, p) == chi.coefficient(p)
        if a == 1:
            assert poly_T_one(b, c) == chi


def test_closed_forms_against_cartan():
    _closed_form_checks(8)


@pytest.mark.slow
def test_closed_forms_against_cartan_slow():
    _closed_form_checks(14)


def test_coeff_T_window():
    assert coeff_T_window(2, 2, 2, 0) == 1
    assert coeff_T_window(2, 2, 2, 1) == 0
    assert coeff_T_window(2, 2, 2, 2) == -2
    with pytest.raises(OutOfWindowError):
        coeff_T_window(2, 2, 2, 3)
    with pytest.raises(OutOfWindowError):
        coeff_T_power(1, 2, 3, 2)


def test_poly_T_one():
    assert poly_T_one(1, 1) == IntPoly([1, 1, 0, 1, 1])
    assert poly_T_one(2, 2) == IntPoly([1, 1, 0, -1, 0, 1, 1])
    for n in range(4, 11):
        assert poly_T_one(1, n - 2) == poly_D(n + 1)


def test_star_coxeter_blocks():
    expected = IntMatrix.from_rows([[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [-1, -1, -1, -1]])
    assert star_coxeter_blocks(1, 1, 1) == expected
    blocks = star_coxeter_blocks(3, 4, 5)
    assert all(blocks[i, i] == 0 for i in range(3))


@pytest.mark.parametrize("branches", list(itertools.product(range(1, 4), repeat=3)))
def test_star_coxeter_blocks_orientation(branches):
    assert star_coxeter_blocks(*branches) == coxeter_matrix(cartan_matrix(build_star(branches)))


@pytest.mark.slow
@pytest.mark.parametrize("branches", list(itertools.product(range(1, 6), repeat=3)))
def test_star_coxeter_blocks_orientation_slow(branches):
    assert star_coxeter_blocks(*branches) == coxeter_matrix(cartan_matrix(build_star(branches)))


def test_m_cinv_vector():
    assert m_cinv_vector(1, 1, 1) == (-1, -1, -1, 2)
    assert m_cinv_vector(2, 2, 2) == (-1, 0, -1, 0, -1, 0, 2)
    for branches in itertools.product(range(1, 6), repeat=3):
        cartan = cartan_matrix(build_star(branches))
        m = canonical_module_vector(branches)
        assert m_cinv_vector(*branches) == inverse_unimodular(cartan).vecmat(m)


def test_predicted_canonical_coeffs():
    assert predicted_canonical_coeffs(1, 2, 5) == {-1: 1, 0: 1, 1: 0, 2: -1, 3: -1, 4: 0}
    assert predicted_canonical_coeffs(1, 3, 3) == {-1: 1, 0: 1, 1: 0, 2: 0, 3: -2}
    assert predicted_canonical_coeffs(2, 2, 2) == {-1: 1, 0: 1, 1: 1, 2: -2}
    for triple in [(1, 1, 4), (1, 2, 4), (1, 1, 1), (1, 2, 2)]:
        with pytest.raises(OutsideLemmaHypothesesError):
            predicted_canonical_coeffs(*triple)


@pytest.mark.parametrize("triple", CORNER_CASES)
def test_predicted_against_recursion(triple):
    a, b, c = triple
    n = a + b + c + 1
    chi = ope_coefficients(cartan_matrix(build_star(triple)), canonical_module_vector(triple))
    assert chi == coxeter_polynomial(canonical_cartan((a + 1, b + 1, c + 1)))
    for ell, value in predicted_canonical_coeffs(a, b, c).items():
        assert chi.coefficient(n - ell) == value


@pytest.mark.parametrize("triple", CORNER_CASES)
def test_predicted_twisted_euler(triple):
    predicted = predicted_twisted_euler(*triple)
    values = twisted_euler_sequence(cartan_matrix(build_star(triple)), canonical_module_vector(triple),
                                    max(predicted))
    assert values[0] == 1
    for r, value in predicted.items():
        assert values[r] == value


def test_fibonacci():
    assert [fibonacci(r) for r in range(7)] == [1, 1, 2, 3, 5, 8, 13]


@pytest.mark.parametrize("triple", [(1, 3, 3), (1, 3, 5), (1, 4, 4), (2, 2, 2), (2, 3, 5), (3, 3, 4), (4, 4, 4)])
def test_m_phi_power_closed_form(triple):
    a, b, c = triple
    phi = coxeter_matrix(cartan_matrix(build_star(triple)))
    vector = canonical_module_vector(triple)
    count = b if a == 1 else a
    for r in range(1, count + 1):
        vector = phi.vecmat(vector)
        assert m_phi_power_closed_form(a, b, c, r) == vector
    with pytest.raises(OutOfWindowError):
        m_phi_power_closed_form(a, b, c, count + 1)
