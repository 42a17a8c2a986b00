"""
Trees: shape analysis (A_n / T_{a,b,c} / other), enumeration of unlabeled trees, orientations
"""
import itertools
import typing
import warnings
from dataclasses import dataclass

import networkx as nx

from coxpoly.quiver.quiver import Quiver
from coxpoly.utils.exceptions import NotATreeError, CoxeterWarning, CoxeterParameterError

TREE_ENUMERATION_WARN_SIZE = 16


class TreeShape:
    """
    Base class of the shapes a tree can have
    """
    pass


@dataclass(frozen=True)
class LinearA(TreeShape):
    n: int

    def __str__(self):
        return "A{}".format(self.n)


@dataclass(frozen=True)
class StarT(TreeShape):
    """
    exactly one vertex of valency 3, branch lengths sorted a <= b <= c
    """
    a: int
    b: int
    c: int

    @property
    def branches(self) -> typing.Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self):
        return "T{},{},{}".format(self.a, self.b, self.c)


@dataclass(frozen=True)
class OtherTree(TreeShape):
    n: int = None

    def __str__(self):
        return "other"


def tree_graph(quiver: Quiver) -> nx.Graph:
    """
    underlying simple graph of a quiver whose underlying graph is a tree
    """
    graph = nx.Graph()
    graph.add_nodes_from(quiver.vertices)
    for s, t in quiver.arrows:
        if s == t or graph.has_edge(s, t):
            raise NotATreeError("{} has a loop or a multiple edge".format(quiver))
        graph.add_edge(s, t)
    if not nx.is_tree(graph):
        raise NotATreeError("underlying graph of {} is not a tree".format(quiver))
    return graph


def tree_shape(quiver: Quiver) -> TreeShape:
    graph = tree_graph(quiver)
    degrees = dict(graph.degree())
    if max(degrees.values(), default=0) <= 2:
        return LinearA(quiver.n)
    branching = [v for v, d in degrees.items() if d >= 3]
    if len(branching) == 1 and degrees[branching[0]] == 3:
        center = branching[0]
        rest = graph.copy()
        rest.remove_node(center)
        a, b, c = sorted(len(component) for component in nx.connected_components(rest))
        return StarT(a, b, c)
    return OtherTree(quiver.n)


def _rooted_code(graph: nx.Graph, root, parent=None) -> str:
    children = sorted(_rooted_code(graph, child, root) for child in graph.neighbors(root) if child != parent)
    return "(" + "".join(children) + ")"


def tree_canonical_form(quiver: Quiver) -> str:
    """
    AHU encoding of the underlying tree rooted at its center (minimum over two centers)
    equal strings <=> isomorphic underlying trees
    """
    graph = tree_graph(quiver)
    return min(_rooted_code(graph, center) for center in nx.center(graph))


def _graph_to_quiver(graph: nx.Graph) -> Quiver:
    index = {v: k + 1 for k, v in enumerate(sorted(graph.nodes()))}
    arrows = sorted(tuple(sorted((index[u], index[v]))) for u, v in graph.edges())
    return Quiver(n=len(index), arrows=tuple(arrows))


def enumerate_trees(n: int) -> typing.List[Quiver]:
    """
    One quiver per isomorphism class of unlabeled trees on n vertices
    Every edge is oriented from the smaller to the larger label, the result is sorted by canonical form

    Parameters
    ----------
    n:
        number of vertices, >= 1
    """
    if n < 1:
        raise CoxeterParameterError("n", n, called_from="enumerate_trees, need n >= 1")
    if n > TREE_ENUMERATION_WARN_SIZE:
        warnings.warn("enumerating all trees on {} vertices, this grows exponentially".format(n), CoxeterWarning)
    if n <= 2:
        graphs = [nx.path_graph(n)]
    else:
        graphs = list(nx.nonisomorphic_trees(n))
    quivers = [_graph_to_quiver(g) for g in graphs]
    return sorted(quivers, key=tree_canonical_form)


def labeled_trees_via_prufer(n: int) -> typing.Iterator[Quiver]:
    """
    All labeled trees on n vertices, decoded from Prufer sequences (n^(n-2) of them)
    Only meant as an oracle for small n
    """
    if n <= 2:
        yield _graph_to_quiver(nx.path_graph(n))
        return
    for sequence in itertools.product(range(n), repeat=n - 2):
        yield _graph_to_quiver(nx.from_prufer_sequence(list(sequence)))


def distinct_trees(quivers: typing.Iterable[Quiver]) -> typing.Dict[str, Quiver]:
    """
    deduplicate trees by canonical form, keeps the first representative of each class
    """
    result = {}
    for quiver in quivers:
        result.setdefault(tree_canonical_form(quiver), quiver)
    return result


def all_orientations(quiver: Quiver) -> typing.List[Quiver]:
    """
    All 2^e orientations of the edges of a tree quiver
    """
    graph = tree_graph(quiver)
    edges = [tuple(sorted(e)) for e in graph.edges()]
    result = []
    for flips in itertools.product((False, True), repeat=len(edges)):
        arrows = tuple((t, s) if flip else (s, t) for (s, t), flip in zip(edges, flips))
        result.append(Quiver(n=quiver.n, arrows=arrows))
    return result


def tree_label(quiver: Quiver) -> str:
    shape = tree_shape(quiver)
    if isinstance(shape, OtherTree):
        return "tree:" + ";".join("{}-{}".format(s, t) for s, t in quiver.arrows)
    return str(shape)
