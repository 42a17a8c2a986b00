from coxpoly.utils.exceptions import CoxeterException, CoxeterWarning, CoxeterTypeError, CoxeterParameterError, \
    NonSquareError, NotUnimodularError, DimensionMismatchError, InvalidQuiverError, CyclicQuiverError, \
    EmptyInputError, NotATreeError, InvalidWeightsError, OutOfWindowError, OutsideLemmaHypothesesError, \
    TraceMismatchError, NonIntegerResultError
from coxpoly.utils.misc import to_int, to_int_vector, parse_int_list
