"""
Replays the comparison of a canonical algebra C(a+1, b+1, c+1) with the unique tree whose Coxeter polynomial
agrees with it in the leading coefficients:
    a >= 2           : A_{n+1}          at x^{n-a}   (1 against a non-positive value)
    (1, 2, c >= 5)   : T_{1,2,c+1}      at x^c       (-1 against 0)
    (1, b >= 3, c)   : D_{b+c+3}        at x^{c+2}   (0 against a negative value)
"""
from dataclasses import dataclass

from coxpoly.coxeter.closed_forms import lemma_family
from coxpoly.coxeter.coxeter_core import coxeter_polynomial
from coxpoly.quiver.algebra import canonical_cartan
from coxpoly.quiver.quiver import Quiver, cartan_matrix, linear_quiver, build_star
from coxpoly.quiver.trees import tree_label


@dataclass(frozen=True)
class Confrontation:
    triple: tuple
    partner: Quiver
    exponent: int
    tree_coefficient: int
    canonical_coefficient: int

    @property
    def partner_label(self) -> str:
        return tree_label(self.partner)

    @property
    def separated(self) -> bool:
        return self.tree_coefficient != self.canonical_coefficient

    def __str__(self):
        return "C{} vs {} at x^{}: {} vs {}".format(
            tuple(p + 1 for p in self.triple), self.partner_label, self.exponent, self.canonical_coefficient,
            self.tree_coefficient)


def confrontation(a: int, b: int, c: int) -> Confrontation:
    """
    Compare C(a+1, b+1, c+1) with its tree partner, both polynomials are computed from Cartan matrices

    Raises
    ------
    OutsideLemmaHypothesesError
        for triples not covered, e.g. (1, 1, c) or (1, 2, c) with c < 5
    """
    a, b, c = sorted((a, b, c))
    family = lemma_family(a, b, c)
    n = a + b + c + 1
    if family == "doubling":
        partner, exponent = linear_quiver(n + 1), n - a
    elif family == "fixed":
        partner, exponent = build_star((1, 2, c + 1)), c
    else:
        partner, exponent = build_star((1, 1, b + c)), c + 2
    chi_tree = coxeter_polynomial(cartan_matrix(partner))
    chi_canonical = coxeter_polynomial(canonical_cartan((a + 1, b + 1, c + 1)))
    return Confrontation(triple=(a, b, c), partner=partner, exponent=exponent,
                         tree_coefficient=chi_tree.coefficient(exponent),
                         canonical_coefficient=chi_canonical.coefficient(exponent))
