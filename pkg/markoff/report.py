"""
Check reports returned by the identity and certificate suites.
"""

from dataclasses import dataclass, field
from typing import Any, List

from markoff.errors import IdentityViolation


@dataclass
class Check:
    clause: str
    """Name of the checked clause."""

    passed: bool
    """Whether both sides agreed."""

    detail: str = ""
    """Both sides, rendered for humans."""


@dataclass
class CheckReport:
    """
    Collected outcome of a group of exact checks.

    Attributes:
        name (str): Name of the suite or operation.
        checks (List[Check]): Every clause that was evaluated, in order.
        payload (Any): Input that the checks were evaluated on.
    """

    name: str
    checks: List[Check] = field(default_factory=list)
    payload: Any = None

    def add(self, clause: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(clause, bool(passed), detail))
        return bool(passed)

    def equal(self, clause: str, lhs: Any, rhs: Any) -> bool:
        return self.add(clause, lhs == rhs, f"{lhs} == {rhs}")

    def extend(self, other: "CheckReport") -> None:
        for check in other.checks:
            self.checks.append(Check(f"{other.name}:{check.clause}", check.passed, check.detail))

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [check for check in self.checks if not check.passed]

    def require(self) -> "CheckReport":
        """
        Raise on the first failing clause.

        Returns:
            CheckReport: The report itself, when every clause holds.
        """

        for check in self.checks:
            if not check.passed:
                raise IdentityViolation(f"{self.name}:{check.clause}", self.payload)
        return self

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} failed"
        return f"{self.name}: {len(self.checks)} checks, {status}"
