from coxpoly.homological.enveloping import EnvelopingData, enveloping_data, bimodule_dims, env_euler_form, \
    simple_vector, simple_bimodule_vector
from coxpoly.homological.traces import trace_identity_rhs
from coxpoly.homological.waring import Partition, partitions_of, waring_alpha, waring_coefficients, \
    printed_sign_coefficients
