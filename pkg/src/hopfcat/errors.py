"""Exception hierarchy shared by every hopfcat module."""

from __future__ import annotations


class HopfError(Exception):
    """Base class for all library errors."""


class FieldMismatchError(HopfError):
    pass


class DimensionMismatchError(HopfError):
    pass


class MalformedInputError(HopfError):
    """Structurally inconsistent input (wrong shapes, bad indices).

    Distinct from an axiom failure: a malformed object cannot even be checked.
    """


class AxiomFailure(HopfError):
    """Raised when a well-formed object violates an axiom it is required to satisfy."""

    def __init__(self, report):
        self.report = report
        failed = report.first_failure()
        msg = f"axiom failure: {failed.name}" if failed else "axiom failure"
        if failed is not None and failed.witness is not None:
            msg += f" (witness {failed.witness})"
        super().__init__(msg)


class FormatError(MalformedInputError):
    """Syntax or schema error in a serialized file, with a source position when known."""

    def __init__(self, msg: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = f" at line {line} column {column}" if line is not None else ""
        super().__init__(msg + where)


class FormatVersionError(FormatError):
    pass


class InvalidGroupError(HopfError):
    pass


class UnknownGroupError(HopfError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown group"


class InvalidHomError(HopfError):
    pass


class InvalidPrimeError(HopfError, ValueError):
    pass


class NormalityError(HopfError):
    pass


class DiagramError(HopfError):
    pass


class NotCat1Error(HopfError):
    pass


class InternalError(HopfError):
    """A theorem the library relies on was observed to fail; indicates a bug."""
