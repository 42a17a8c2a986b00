class CoxeterException(Exception):
    """
    Base class for other exceptions
    reason is a short machine readable tag (used by the command line interface)
    """
    reason = "coxeter_error"

    def __init__(self, msg):
        self.message = msg

    def __str__(self):
        return self.message


class CoxeterWarning(UserWarning):
    """
    Base class for warnings in coxpoly
    Will not be raised as exceptions
    """

    def __init__(self, msg):
        self.message = msg

    def __str__(self):
        return self.message


class CoxeterParameterError(CoxeterException):
    """
    Raised when a specific choice of a parameter is not accepted
    """
    reason = "unknown_parameter"

    def __init__(self, parameter_name, parameter_value, choices=None, called_from=""):
        self.message = "ParameterError:" + called_from + " invalid parameter value: " + str(
            parameter_name) + "=" + str(parameter_value)
        if choices is not None:
            self.message += " (choose from " + ", ".join(str(c) for c in choices) + ")"


class CoxeterTypeError(CoxeterException):
    """
    Raised when a value can not be used as an exact integer
    """
    reason = "type_error"

    def __init__(self, attr, type, expected):
        self.message = "TypeError: " + "expected type: " + str(expected) + " but got type " + str(
            type) + " for " + str(attr)


class NonSquareError(CoxeterException):
    reason = "non_square"

    def __init__(self, rows, cols, called_from=""):
        self.message = "{}square matrix expected, got shape {}x{}".format(
            called_from + ": " if called_from else "", rows, cols)


class NotUnimodularError(CoxeterException):
    reason = "not_unimodular"

    def __init__(self, determinant):
        self.determinant = determinant
        self.message = "matrix is not invertible over the integers: determinant = {}".format(determinant)


class DimensionMismatchError(CoxeterException):
    reason = "dimension_mismatch"


class InvalidQuiverError(CoxeterException):
    reason = "invalid_quiver"


class CyclicQuiverError(CoxeterException):
    reason = "cyclic_quiver"


class EmptyInputError(CoxeterException):
    reason = "empty_input"


class NotATreeError(CoxeterException):
    reason = "not_a_tree"


class InvalidWeightsError(CoxeterException):
    reason = "invalid_weights"

    def __init__(self, weights, msg=None):
        self.weights = tuple(weights)
        if msg is None:
            msg = "weights need t >= 2 entries, all >= 2"
        self.message = "invalid weights {}: {}".format(self.weights, msg)


class OutOfWindowError(CoxeterException):
    reason = "out_of_window"


class OutsideLemmaHypothesesError(CoxeterException):
    reason = "outside_lemma_hypotheses"

    def __init__(self, a, b, c):
        self.message = "triple ({}, {}, {}) is not (1,2,c) with c >= 5, (1,b,c) with b >= 3, " \
                       "or (a,b,c) with a >= 2".format(a, b, c)


class TraceMismatchError(CoxeterException):
    reason = "trace_mismatch"

    def __init__(self, coefficient):
        self.message = "separation needs trace -1 (coefficient of x^(N-1) equal to 1), got {}".format(coefficient)


class NonIntegerResultError(CoxeterException):
    reason = "non_integer_result"
