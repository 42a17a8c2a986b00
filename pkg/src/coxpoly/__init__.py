from coxpoly.utils import CoxeterException, CoxeterWarning, to_int, to_int_vector
from coxpoly.linalg import IntMatrix, IntPoly, determinant, inverse_unimodular, char_poly, kronecker, power_trace, \
    power_traces
from coxpoly.quiver import Quiver, cartan_matrix, linear_quiver, build_star, random_acyclic_quiver, tree_shape, \
    enumerate_trees, all_orientations, LinearA, StarT, OtherTree, AlgebraSpec, PathAlgebra, OnePointExtension, \
    one_point_ext_cartan, canonical_cartan, canonical_module_vector, path_algebra, canonical_algebra
from coxpoly.coxeter import CoxeterData, coxeter_matrix, coxeter_data, coxeter_polynomial, euler_form, \
    twisted_euler_sequence, ope_coxeter_matrix, ope_coefficients
import coxpoly.coxeter.closed_forms as closed_forms  # shortcut
from coxpoly.classifier import RepType, WeightType, weight_type, ClassLabel, NonTreeHereditary, TreeType, \
    CanonicalType, NeedsSeparation, trace_trichotomy, separate_trace_minus_one, classify_algebra
from coxpoly.homological import enveloping_data, bimodule_dims, env_euler_form, trace_identity_rhs, \
    partitions_of, waring_alpha, waring_coefficients
from coxpoly.verification import SUPPORTED_SUITES, pick_suite, run_suite, polynomial_table, write_table

import warnings

warnings.filterwarnings("default", category=CoxeterWarning)
