"""
coxpoly command line interface

exit codes: 0 success, 1 verification failure, 2 usage or parse error, 3 domain error
domain errors print one line '<reason>: <message>' to stderr
"""
import argparse
import sys
import typing

from coxpoly.classifier.separation import classify_algebra, trace_minus_one_conditions
from coxpoly.coxeter.coxeter_core import coxeter_data
from coxpoly.quiver.algebra import AlgebraSpec, path_algebra, canonical_algebra
from coxpoly.quiver.quiver import Quiver, linear_quiver, build_star
from coxpoly.utils.exceptions import CoxeterException, CoxeterTypeError
from coxpoly.utils.misc import parse_int_list
from coxpoly.verification.suites import SUPPORTED_SUITES, DEFAULT_MAX_SIZE, DEFAULT_SEED, run_suite
from coxpoly.verification.tables import polynomial_table, write_table

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> typing.Tuple[int, ...]:
    try:
        values = parse_int_list(text)
    except CoxeterTypeError:
        raise argparse.ArgumentTypeError("expected comma separated integers, got '{}'".format(text))
    if len(values) == 0:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def _add_input_flags(parser: argparse.ArgumentParser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--quiver", metavar="FILE", help='quiver as JSON: {"n": 3, "arrows": [[1, 2], [2, 3]]}')
    group.add_argument("--tree", metavar="a,b,c", type=_int_list,
                       help="star T_{a,b,c}: a, b, c are the numbers of vertices on each branch, center not counted")
    group.add_argument("--linear", metavar="n", type=int, help="linear quiver A_n with n vertices")
    group.add_argument("--canonical", metavar="p1,p2,...", type=_int_list,
                       help="canonical algebra C(p1,...,pt): weights p_i are the branch vertex counts + 1")


def _read_spec(args) -> AlgebraSpec:
    if args.quiver is not None:
        try:
            with open(args.quiver, "r", encoding="utf-8") as f:
                text = f.read()
        except (OSError, UnicodeDecodeError) as error:
            raise UsageError("can not read {}: {}".format(args.quiver, error))
        return path_algebra(Quiver.from_json(text))
    if args.tree is not None:
        return path_algebra(build_star(args.tree))
    if args.linear is not None:
        return path_algebra(linear_quiver(args.linear))
    return canonical_algebra(args.canonical)


def _print_matrix(name: str, matrix):
    print(name + ":")
    print(matrix)


def cmd_coxeter(args) -> int:
    spec = _read_spec(args)
    data = coxeter_data(spec.cartan())
    if args.cartan:
        _print_matrix("cartan", data.cartan)
    if args.matrix:
        _print_matrix("coxeter", data.coxeter)
    print("poly: " + data.chi.wire())
    print("trace: {}".format(data.trace))
    return EXIT_OK


def cmd_classify(args) -> int:
    spec = _read_spec(args)
    label = classify_algebra(spec, hints=args.weights)
    print(label)
    if args.verbose:
        chi = coxeter_data(spec.cartan()).chi
        print("poly: " + chi.wire())
        if chi.coefficient(chi.degree - 1) == 1:
            print("conditions: {}".format(trace_minus_one_conditions(chi)))
    return EXIT_OK


def cmd_verify(args) -> int:
    result = run_suite(args.suite, max_size=args.max_size, seed=args.seed, cases=args.cases, silent=args.silent)
    print(result)
    return EXIT_OK if result.ok else EXIT_VERIFICATION_FAILED


def cmd_tables(args) -> int:
    rows = polynomial_table(args.max_size)
    if args.output is None:
        write_table(rows, sys.stdout)
    else:
        try:
            with open(args.output, "w", newline="") as f:
                write_table(rows, f)
        except OSError as error:
            raise UsageError("can not write {}: {}".format(args.output, error))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxpoly",
                                     description="Coxeter polynomials of path algebras and canonical algebras")
    commands = parser.add_subparsers(dest="command", required=True)

    coxeter = commands.add_parser("coxeter", help="Cartan matrix, Coxeter matrix and Coxeter polynomial")
    _add_input_flags(coxeter)
    coxeter.add_argument("--cartan", action="store_true", help="print the Cartan matrix")
    coxeter.add_argument("--matrix", action="store_true", help="print the Coxeter matrix")
    coxeter.set_defaults(func=cmd_coxeter)

    classify = commands.add_parser("classify", help="derived type from the Coxeter polynomial")
    _add_input_flags(classify)
    classify.add_argument("--weights", metavar="p1,p2,...", type=_int_list, default=None,
                          help="weights to report the representation type with")
    classify.add_argument("--verbose", action="store_true", help="also print the polynomial and raw conditions")
    classify.set_defaults(func=cmd_classify)

    verify = commands.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", required=True, choices=sorted(SUPPORTED_SUITES))
    verify.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE)
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    verify.add_argument("--cases", type=int, default=None, help="number of random cases")
    verify.add_argument("--silent", action="store_true", help="no progress output")
    verify.set_defaults(func=cmd_verify)

    tables = commands.add_parser("tables", help="CSV of tree and canonical Coxeter polynomials")
    tables.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE)
    tables.add_argument("--output", metavar="FILE", default=None)
    tables.set_defaults(func=cmd_tables)
    return parser


def main(argv: typing.Sequence[str] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return EXIT_OK if error.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as error:
        print("usage_error: {}".format(error), file=sys.stderr)
        return EXIT_USAGE
    except CoxeterException as error:
        print("{}: {}".format(error.reason, error), file=sys.stderr)
        return EXIT_DOMAIN
