from coxpoly.quiver.quiver import Quiver, cartan_matrix, path_counts, path_algebra_dimension, linear_quiver, \
    build_star, random_acyclic_quiver
from coxpoly.quiver.trees import TreeShape, LinearA, StarT, OtherTree, tree_shape, tree_graph, \
    tree_canonical_form, enumerate_trees, labeled_trees_via_prufer, distinct_trees, all_orientations, tree_label
from coxpoly.quiver.algebra import AlgebraSpec, PathAlgebra, OnePointExtension, one_point_ext_cartan, \
    canonical_cartan, canonical_module_vector, validate_weights, path_algebra, canonical_algebra
