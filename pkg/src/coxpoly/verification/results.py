import typing
from dataclasses import dataclass, field

from coxpoly.linalg.int_poly import IntPoly


@dataclass
class SuiteResult:
    """
    Pass/fail bookkeeping of a verification suite

    Attributes
    ----------
    name:
        name of the suite
    passed:
        number of checks that held
    failed:
        number of checks that did not hold
    counterexamples:
        one line per failed check
    """
    name: str
    passed: int = 0
    failed: int = 0
    counterexamples: typing.List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    @property
    def total(self) -> int:
        return self.passed + self.failed

    def check(self, condition: bool, description: str) -> bool:
        if condition:
            self.passed += 1
        else:
            self.failed += 1
            self.counterexamples.append(description)
        return bool(condition)

    def check_equal(self, left, right, description: str) -> bool:
        return self.check(left == right, "{}: {} != {}".format(description, left, right))

    def check_polynomial(self, chi: IntPoly, description: str) -> bool:
        """
        every Coxeter polynomial is monic, palindromic and has chi(0) = 1
        """
        return self.check(chi.is_monic() and chi.coefficient(0) == 1 and chi.is_palindromic(),
                          "{}: {} is not monic and palindromic with chi(0) = 1".format(description, chi.wire()))

    def merge(self, other: "SuiteResult"):
        self.passed += other.passed
        self.failed += other.failed
        self.counterexamples += other.counterexamples

    def __str__(self):
        lines = ["{}: passed {}, failed {}".format(self.name, self.passed, self.failed)]
        lines += ["counterexample: " + c for c in self.counterexamples]
        return "\n".join(lines)
