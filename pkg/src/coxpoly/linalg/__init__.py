from coxpoly.linalg.int_matrix import IntMatrix
from coxpoly.linalg.int_poly import IntPoly, X
from coxpoly.linalg.exact import determinant, inverse_unimodular, char_poly, kronecker, matrix_power, \
    power_trace, power_traces
