from coxpoly.verification.results import SuiteResult
from coxpoly.verification.suites import SUPPORTED_SUITES, pick_suite, run_suite, canonical_weights, \
    closed_forms_suite, ope_suite, traces_suite, waring_suite, separation_suite, trees_suite, trichotomy_suite, \
    DEFAULT_MAX_SIZE, DEFAULT_SEED, DEFAULT_OPE_CASES, DEFAULT_WARING_CASES, DEFAULT_RANDOM_QUIVERS, \
    FREE_TREE_COUNTS
from coxpoly.verification.tables import TableRow, TABLE_HEADER, polynomial_table, write_table
