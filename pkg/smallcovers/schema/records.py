"""The machine readable records emitted by the command line front end."""
from enum import Enum
import typing


from pydantic import validator


from smallcovers.schema.base import CustomBase
from smallcovers.util.json import to_cell


class Quantity(Enum):
    """An enum of the counted quantities."""

    DJ_CLASSES = "dj_classes"
    EQUIVARIANT_CLASSES = "equivariant_classes"
    UNLABELED_DAG_BOUND = "unlabeled_dag_bound"
    LABELED_DAGS = "labeled_dags"
    GL_ORDER = "gl_order"
    FIXED_SET = "fixed_set"


class Method(Enum):
    """An enum of how a count was obtained."""

    FORMULA = "formula"
    RECURRENCE = "recurrence"
    BRUTEFORCE = "bruteforce"
    TABLE = "table"


def _decimal(value: typing.Any) -> str:
    if isinstance(value, int) and not isinstance(value, bool):
        value = str(value)

    if not isinstance(value, str) or not value.isdigit() or not value.isascii():
        raise ValueError(f"{value!r} is not a non-negative decimal integer")

    return value


class CountRecord(CustomBase):
    """
    One exact count.

    Attributes:
        quantity (smallcovers.schema.records.Quantity): What was counted.
        polytope (str): The polytope descriptor, e.g. `cube(3)` or `simplices(1,2)`.
        value (str): The exact count in decimal, kept as a string so no consumer truncates it.
        method (smallcovers.schema.records.Method): The code path that produced the value.
        runtime_ms (float): Wall clock time spent computing the value.
    """

    quantity: Quantity
    polytope: str
    value: str
    method: Method
    runtime_ms: float

    _value = validator("value", pre=True, allow_reuse=True)(_decimal)

    @property
    def count(self) -> int:
        return int(self.value)

    def __repr__(self) -> str:
        return f"<CountRecord({self.quantity.value}:{self.polytope}={self.value}:{self.method.value})>"


class CheckResult(CustomBase):
    """
    The outcome of one check in a verification.

    Attributes:
        name (str): What was checked.
        expected (str): The expected value.
        actual (str): The observed value.
        passed (bool): Whether they agree.
    """

    name: str
    expected: str
    actual: str
    passed: bool

    @classmethod
    def compare(cls, name: str, expected: typing.Any, actual: typing.Any) -> "CheckResult":
        """Build a check from two values, passing when they are equal; values are rendered as flat cells."""
        return cls(name=name, expected=to_cell(expected), actual=to_cell(actual), passed=expected == actual)


class VerificationReport(CustomBase):
    """
    A pass/fail report over a group of checks.

    Attributes:
        verification (str): The verification that was run, e.g. `bijection`.
        polytope (str): The polytope descriptor the checks are about.
        passed (bool): True when every check passed.
        checks (tuple): The `smallcovers.schema.records.CheckResult` objects in the order they ran.
        runtime_ms (float): Wall clock time spent on the checks.
    """

    verification: str
    polytope: str
    passed: bool
    checks: typing.Tuple[CheckResult, ...]
    runtime_ms: float

    @classmethod
    def from_checks(
        cls, verification: str, polytope: str, checks: typing.Sequence[CheckResult], runtime_ms: float
    ) -> "VerificationReport":
        return cls(
            verification=verification,
            polytope=polytope,
            passed=all(check.passed for check in checks),
            checks=tuple(checks),
            runtime_ms=runtime_ms,
        )


class DumpManifest(CustomBase):
    """
    The header line of a dump file.

    Attributes:
        polytope (str): The polytope descriptor, `cube(n)` for both matrix and digraph dumps of size n.
        kind (str): `mn` for matrix dumps or `dags` for digraph dumps.
        count (str): The number of records that follow, in decimal.
        generator (str): The name and version of the program that wrote the dump.
    """

    polytope: str
    kind: str
    count: str
    generator: str

    _count = validator("count", pre=True, allow_reuse=True)(_decimal)


__all__ = ["Quantity", "Method", "CountRecord", "CheckResult", "VerificationReport", "DumpManifest"]
