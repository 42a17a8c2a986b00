"""
Quivers (finite directed multigraphs) and Cartan matrices of their path algebras
Vertices are 1..n, arrows are (source, target) pairs, parallel arrows are allowed
"""
import json
import typing
from dataclasses import dataclass, field

import networkx as nx

from coxpoly.linalg.int_matrix import IntMatrix
from coxpoly.utils.exceptions import InvalidQuiverError, CyclicQuiverError, EmptyInputError, CoxeterTypeError
from coxpoly.utils.misc import to_int


@dataclass(frozen=True)
class Quiver:
    """
    n: number of vertices, indexed 1..n
    arrows: tuple of (source, target) pairs, duplicates encode parallel arrows
    """
    n: int
    arrows: typing.Tuple[typing.Tuple[int, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        try:
            n = to_int(self.n)
            arrows = tuple((to_int(s), to_int(t)) for s, t in self.arrows)
        except (TypeError, ValueError, CoxeterTypeError) as error:
            raise InvalidQuiverError("arrows must be pairs of integers: {}".format(error))
        if n < 1:
            raise InvalidQuiverError("a quiver needs at least one vertex, got n={}".format(n))
        for s, t in arrows:
            if not (1 <= s <= n and 1 <= t <= n):
                raise InvalidQuiverError("arrow ({}, {}) leaves the vertex range 1..{}".format(s, t, n))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arrows", arrows)

    @property
    def vertices(self) -> typing.List[int]:
        return list(range(1, self.n + 1))

    @property
    def n_arrows(self) -> int:
        return len(self.arrows)

    @classmethod
    def from_dict(cls, data: dict) -> "Quiver":
        if not isinstance(data, dict) or "n" not in data:
            raise InvalidQuiverError("quiver document needs the keys 'n' and 'arrows'")
        arrows = data.get("arrows", [])
        if not isinstance(arrows, (list, tuple)):
            raise InvalidQuiverError("arrows must be a list of [source, target] pairs, got {}".format(arrows))
        for arrow in arrows:
            if not isinstance(arrow, (list, tuple)) or len(arrow) != 2:
                raise InvalidQuiverError("arrow {} is not a [source, target] pair".format(arrow))
        return cls(n=data["n"], arrows=tuple(tuple(a) for a in arrows))

    @classmethod
    def from_json(cls, text: str) -> "Quiver":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as error:
            raise InvalidQuiverError("malformed quiver json: {}".format(error))
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        return {"n": self.n, "arrows": [list(a) for a in self.arrows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.arrows)
        return graph

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.to_networkx())

    def __str__(self):
        return "Quiver(n={}, arrows={})".format(self.n, list(self.arrows))


def path_counts(quiver: Quiver) -> typing.Dict[int, typing.Dict[int, int]]:
    """
    counts[j][i] = number of directed paths from j to i, the trivial path included
    """
    graph = quiver.to_networkx()
    if not nx.is_directed_acyclic_graph(graph):
        raise CyclicQuiverError("path algebra of {} is infinite dimensional: the quiver has a cycle".format(quiver))
    order = list(nx.topological_sort(graph))
    counts = {}
    for j in quiver.vertices:
        paths = dict.fromkeys(quiver.vertices, 0)
        paths[j] = 1
        for v in order:
            if paths[v]:
                for _, w in graph.out_edges(v):
                    paths[w] += paths[v]
        counts[j] = paths
    return counts


def cartan_matrix(quiver: Quiver) -> IntMatrix:
    """
    Cartan matrix of the path algebra: entry (i,j) counts the paths j -> i
    so column j is the dimension vector of the projective P(j)
    """
    counts = path_counts(quiver)
    n = quiver.n
    return IntMatrix(n, n, [counts[j][i] for i in range(1, n + 1) for j in range(1, n + 1)])


def path_algebra_dimension(quiver: Quiver) -> int:
    return sum(cartan_matrix(quiver).entries)


def linear_quiver(n: int) -> Quiver:
    """
    1 -> 2 -> ... -> n
    """
    return Quiver(n=n, arrows=tuple((i, i + 1) for i in range(1, n)))


def build_star(branch_lengths: typing.Sequence[int]) -> Quiver:
    """
    Star quiver with t linear branches oriented toward the center omega

    Vertices are numbered branch by branch, omega gets the last index.
    Inside a branch the first index is the neighbour of omega and arrows run from the tip toward omega:
    tip -> ... -> first -> omega

    Parameters
    ----------
    branch_lengths:
        number of vertices on each branch, all >= 1

    Returns
    -------
    Quiver with sum(branch_lengths) + 1 vertices
    """
    lengths = [to_int(x) for x in branch_lengths]
    if len(lengths) == 0:
        raise EmptyInputError("a star needs at least one branch")
    if any(x < 1 for x in lengths):
        raise InvalidQuiverError("branch lengths must be >= 1, got {}".format(lengths))
    omega = sum(lengths) + 1
    arrows = []
    start = 1
    for length in lengths:
        branch = list(range(start, start + length))
        arrows.append((branch[0], omega))
        for k in range(1, length):
            arrows.append((branch[k], branch[k - 1]))
        start += length
    return Quiver(n=omega, arrows=tuple(arrows))


def random_acyclic_quiver(n: int, rng, density: float = 0.5, max_multiplicity: int = 1) -> Quiver:
    """
    Random acyclic quiver: a random vertex order, each forward pair carries an arrow with probability density
    (1..max_multiplicity parallel arrows)

    Parameters
    ----------
    rng:
        numpy.random.Generator
    """
    order = [int(v) + 1 for v in rng.permutation(n)]
    arrows = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                multiplicity = int(rng.integers(1, max_multiplicity + 1))
                arrows.extend([(order[i], order[j])] * multiplicity)
    return Quiver(n=n, arrows=tuple(arrows))
