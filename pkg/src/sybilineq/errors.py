"""Typed errors raised across the package."""


class SybilineqError(Exception):
    """Base class for all package errors."""


class EmptyDistributionError(SybilineqError):
    """A wealth distribution needs at least one entry."""


class NegativeWealthError(SybilineqError):
    def __init__(self, index: int, value: float, line: int | None = None):
        self.index = index
        self.value = value
        self.line = line
        where = f"line {line}" if line is not None else f"index {index}"
        super().__init__(f"negative wealth {value!r} at {where}")


class DimensionMismatchError(SybilineqError):
    def __init__(self, expected: int, actual: int, what: str = "rows"):
        self.expected = expected
        self.actual = actual
        super().__init__(f"expected {expected} {what}, got {actual}")


class InvalidSplitCountError(SybilineqError):
    """Per-actor identity counts must be >= 1, one per hidden actor."""


class KTooSmallError(SybilineqError):
    """Aggregation needs an input of length >= 2."""


class NotProgressiveError(SybilineqError):
    """Transfer violates the rank-preserving progressive-transfer bounds."""


class MeasureDomainError(SybilineqError):
    """Input lies outside a measure's domain."""


class ZeroTotalWealthError(MeasureDomainError):
    """Ratio-based measures are undefined when total wealth is zero."""


class ZeroEntryError(MeasureDomainError):
    def __init__(self, measure_id: str, index: int):
        self.measure_id = measure_id
        self.index = index
        super().__init__(
            f"{measure_id} requires strictly positive entries (zero at index {index})"
        )


class UnknownMeasureError(SybilineqError):
    def __init__(self, token: str):
        self.token = token
        super().__init__(f"unknown measure id {token!r}")


class UnknownCaseError(SybilineqError):
    def __init__(self, case_id: str):
        self.case_id = case_id
        super().__init__(f"unknown witness case {case_id!r}")


class InfeasibleFamilyError(SybilineqError):
    """Requested manipulation family cannot be realized, e.g. fewer identities than actors."""


class DatasetParseError(SybilineqError):
    def __init__(self, line: int, column: int, detail: str):
        self.line = line
        self.column = column
        self.detail = detail
        super().__init__(f"line {line}, column {column}: {detail}")
