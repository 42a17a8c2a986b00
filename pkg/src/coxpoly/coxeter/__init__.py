from coxpoly.coxeter.coxeter_core import CoxeterData, coxeter_matrix, coxeter_data, coxeter_polynomial, euler_form, \
    twisted_euler_sequence, ope_coxeter_matrix, ope_coefficients
from coxpoly.coxeter.closed_forms import poly_linear_A, poly_D, poly_boldt_T, coeff_T_window, coeff_T_power, \
    poly_T_one, star_coxeter_blocks, m_cinv_vector, lemma_family, fibonacci, predicted_canonical_coeffs, \
    predicted_twisted_euler, m_phi_power_closed_form
