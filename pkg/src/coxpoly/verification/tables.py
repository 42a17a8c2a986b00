"""
Coxeter polynomials of all trees and of all canonical algebras with three branches and delta >= 0, by size
"""
import csv
import typing
from dataclasses import dataclass

from coxpoly.classifier.weights import canonical_triples
from coxpoly.coxeter.coxeter_core import coxeter_polynomial
from coxpoly.linalg.int_poly import IntPoly
from coxpoly.quiver.algebra import canonical_cartan
from coxpoly.quiver.quiver import cartan_matrix
from coxpoly.quiver.trees import enumerate_trees, tree_label
from coxpoly.verification.suites import DEFAULT_MAX_SIZE

TABLE_HEADER = ("n", "kind", "params", "coefficients")


@dataclass(frozen=True)
class TableRow:
    n: int
    kind: str
    params: str
    chi: IntPoly

    def as_tuple(self) -> typing.Tuple[int, str, str, str]:
        return (self.n, self.kind, self.params, self.chi.wire())


def polynomial_table(max_size: int = DEFAULT_MAX_SIZE) -> typing.List[TableRow]:
    """
    rows for every size 1..max_size, trees first (sorted by canonical form), then canonical algebras
    """
    rows = []
    for n in range(1, max_size + 1):
        for tree in enumerate_trees(n):
            rows.append(TableRow(n=n, kind="tree", params=tree_label(tree),
                                 chi=coxeter_polynomial(cartan_matrix(tree))))
        for weights in canonical_triples(n):
            rows.append(TableRow(n=n, kind="canonical", params="C({},{},{})".format(*weights),
                                 chi=coxeter_polynomial(canonical_cartan(weights))))
    return rows


def write_table(rows: typing.Iterable[TableRow], stream: typing.TextIO):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    for row in rows:
        writer.writerow(row.as_tuple())
