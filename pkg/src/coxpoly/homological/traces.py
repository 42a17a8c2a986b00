"""
Traces of powers of the Coxeter matrix phi = -C^{-t} C from Euler form data only

    tr(phi)   = -<dim A, dim A>_{A^e}
    tr(phi^2) =  <dim DA, dim A>_{A^e}
    tr(phi^k) = (-1)^k sum_{v_1..v_{k-1}} <q(v_1), p(v_{k-1})> <q(v_2), e(v_1)> ... <q(v_{k-2}), e(v_{k-3})>
                                         <dim DA, e_{A^e}(v_{k-2}, v_{k-1})>_{A^e}          for k >= 3

with p(j), q(i) the projective and injective dimension vectors of A and e(v) the simple ones.
"""
import itertools
import typing

from coxpoly.homological.enveloping import enveloping_data, simple_vector
from coxpoly.linalg.exact import inverse_unimodular
from coxpoly.linalg.int_matrix import IntMatrix
from coxpoly.utils.exceptions import CoxeterParameterError
from coxpoly.utils.misc import to_int


def _gram(cartan_inv_t: IntMatrix, left: typing.Sequence[typing.Sequence[int]],
          right: typing.Sequence[typing.Sequence[int]]) -> typing.List[typing.List[int]]:
    # table[a][b] = <left[a], right[b]>_A
    table = []
    for x in left:
        row = cartan_inv_t.vecmat(x)
        table.append([sum(u * v for u, v in zip(row, y)) for y in right])
    return table


def trace_identity_rhs(cartan: IntMatrix, k: int) -> int:
    """
    tr(phi^k) assembled from Euler forms of A and A^e

    Parameters
    ----------
    cartan:
        unimodular Cartan matrix of A, N x N
    k:
        power, k >= 1; for k >= 3 the sum has N^(k-1) terms

    Raises
    ------
    NotUnimodularError
    """
    k = to_int(k)
    if k < 1:
        raise CoxeterParameterError("k", k, called_from="trace_identity_rhs, need k >= 1")
    env = enveloping_data(cartan)
    if k == 1:
        return -env.form(env.dim_A, env.dim_A)
    if k == 2:
        return env.form(env.dim_DA, env.dim_A)

    n = cartan.rows
    cartan_inv_t = inverse_unimodular(cartan).T
    injectives = [cartan.row(i) for i in range(n)]
    projectives = [cartan.column(j) for j in range(n)]
    simples = [simple_vector(n, v) for v in range(1, n + 1)]
    q_p = _gram(cartan_inv_t, injectives, projectives)
    q_e = _gram(cartan_inv_t, injectives, simples)
    # <dim DA, e_{A^e}(i, j)> is the entry (j-1) N + (i-1) of the row dim DA C_{A^e}^{-t}
    da_row = env.row(env.dim_DA)
    last = [[da_row[j * n + i] for j in range(n)] for i in range(n)]

    total = 0
    for v in itertools.product(range(n), repeat=k - 1):
        term = q_p[v[0]][v[-1]] * last[v[-2]][v[-1]]
        for s in range(1, k - 2):
            if term == 0:
                break
            term *= q_e[v[s]][v[s - 1]]
        total += term
    return (-1) ** k * total
