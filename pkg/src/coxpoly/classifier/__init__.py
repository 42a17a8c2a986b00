from coxpoly.classifier.weights import RepType, WeightType, weight_type, weight_defect, canonical_triples
from coxpoly.classifier.labels import ClassLabel, NonTreeHereditary, TreeType, CanonicalType, NeedsSeparation
from coxpoly.classifier.separation import ConditionReport, CONDITION_I_MIN_RANK, trace_trichotomy, \
    trace_minus_one_conditions, separate_trace_minus_one, classify_chi, classify_algebra
from coxpoly.classifier.confrontation import Confrontation, confrontation
