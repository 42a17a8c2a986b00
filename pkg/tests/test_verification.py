from coxpoly.verification import SuiteResult, SUPPORTED_SUITES, pick_suite, run_suite, canonical_weights, \
    polynomial_table, write_table, TABLE_HEADER, TableRow, FREE_TREE_COUNTS
from coxpoly.linalg import IntPoly
from coxpoly.utils import CoxeterParameterError
import csv, io, os, pytest


def test_suite_result():
    result = SuiteResult(name="demo")
    assert result.ok and result.total == 0
    assert result.check(True, "fine")
    assert not result.check_equal(1, 2, "numbers")
    assert result.check_polynomial(IntPoly([1, 1, 1]), "A2")
    assert not result.check_polynomial(IntPoly([1, -2, 2]), "bad")
    assert (result.passed, result.failed) == (2, 2)
    assert result.counterexamples[0] == "numbers: 1 != 2"
    other = SuiteResult(name="other", passed=3)
    result.merge(other)
    assert result.total == 7 and not result.ok
    assert str(result).splitlines()[0] == "demo: passed 5, failed 2"
    assert str(result).splitlines()[1] == "counterexample: numbers: 1 != 2"


def test_pick_suite():
    assert set(SUPPORTED_SUITES) == {"closed-forms", "ope", "traces", "waring", "separation", "trees",
                                     "trichotomy"}
    for name, suite in SUPPORTED_SUITES.items():
        assert pick_suite(name) is suite
    with pytest.raises(CoxeterParameterError):
        pick_suite("nonsense")


def test_canonical_weights():
    assert canonical_weights(4) == [(2, 2)]
    assert sorted(canonical_weights(5)) == [(2, 2), (2, 2, 2), (2, 3)]
    assert sorted(canonical_weights(5, min_branches=3)) == [(2, 2, 2)]
    assert all(sum(p - 1 for p in w) + 2 <= 9 for w in canonical_weights(9))


@pytest.mark.parametrize("name, max_size, cases", [
    ("closed-forms", 9, None),
    ("ope", 6, 20),
    ("traces", 6, 5),
    ("waring", 7, 10),
    ("separation", 10, None),
    ("trees", 8, None),
    ("trichotomy", 8, None),
])
def test_run_suite(name, max_size, cases):
    result = run_suite(name, max_size=max_size, seed=3, cases=cases, silent=True)
    assert result.name == name
    assert result.ok, str(result)
    assert result.passed > 0


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(SUPPORTED_SUITES))
def test_run_suite_defaults(name):
    result = run_suite(name, silent=True)
    assert result.ok, str(result)


def test_progress_output(capsys):
    run_suite("trichotomy", max_size=4, silent=False)
    assert "trichotomy" in capsys.readouterr().out
    run_suite("trichotomy", max_size=4, silent=True)
    assert capsys.readouterr().out == ""


def test_polynomial_table():
    rows = polynomial_table(4)
    assert len(rows) == sum(FREE_TREE_COUNTS[:4])
    assert all(row.kind == "tree" for row in rows)
    assert rows[0] == TableRow(n=1, kind="tree", params="A1", chi=IntPoly([1, 1]))
    rows = polynomial_table(10)
    canonical = [row for row in rows if row.kind == "canonical"]
    assert [row.params for row in canonical] == ["C(3,3,3)", "C(2,4,4)", "C(3,3,4)", "C(2,3,6)", "C(2,4,5)",
                                                 "C(3,3,5)", "C(3,4,4)"]
    assert len(rows) == sum(FREE_TREE_COUNTS[:10]) + 7
    trees = {row.chi for row in rows if row.kind == "tree"}
    assert not any(row.chi in trees for row in canonical)


def test_write_table():
    stream = io.StringIO()
    write_table(polynomial_table(3), stream)
    lines = stream.getvalue().splitlines()
    assert lines[0] == ",".join(TABLE_HEADER)
    assert lines[1] == '1,tree,A1,"[1, 1]"'
    assert len(lines) == 4


def test_write_table_file():
    with open("coxpoly_table.csv", "w", newline="") as f:
        write_table(polynomial_table(5), f)
    with open("coxpoly_table.csv", "r", newline="") as f:
        rows = list(csv.reader(f))
    assert tuple(rows[0]) == TABLE_HEADER
    assert len(rows) == 1 + sum(FREE_TREE_COUNTS[:5])
    assert rows[-1][0] == "5"
    assert os.path.exists("coxpoly_table.csv")
