#!/usr/bin/env python3
"""
Exception hierarchy for Cartesian Lab.

Usage errors map to exit code 1, mathematical failures to exit code 2.
"""

from typing import Any, Dict, Optional


class LabError(Exception):
    """Base class for every error raised by the library."""

    exit_code = 1

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": self.__class__.__name__,
            "message": self.message,
            **{key: str(value) for key, value in self.details.items()},
        }


class UsageError(LabError, ValueError):
    """Bad input: malformed text, wrong variables, violated preconditions."""


class MathematicalFailure(LabError):
    """A certified negative outcome, e.g. a grid that is not contained in Z(F)."""

    exit_code = 2


# Algebra

class ZeroPolynomialError(UsageError):
    def __init__(self, operation: str):
        super().__init__(f"{operation} requires a nonzero polynomial", {"operation": operation})


class ZeroDivisorError(UsageError, ZeroDivisionError):
    def __init__(self, operation: str = "division"):
        super().__init__(f"{operation}: divisor is zero", {"operation": operation})


class BothZeroError(UsageError):
    def __init__(self):
        super().__init__("gcd of two zero polynomials is undefined")


class ConstantInputError(UsageError):
    def __init__(self, operation: str):
        super().__init__(f"{operation} requires a nonconstant polynomial", {"operation": operation})


class ConstantDivisorError(UsageError):
    def __init__(self, name: str):
        super().__init__(f"{name} must be nonconstant", {"polynomial": name})


class NotSquarefreeError(UsageError):
    def __init__(self, name: str, polynomial: Any):
        super().__init__(f"{name} is not squarefree", {"polynomial": polynomial})


class MissingVariableError(UsageError):
    def __init__(self, missing):
        names = ",".join(sorted(missing))
        super().__init__(f"assignment is missing variables: {names}", {"missing": names})
        self.missing = frozenset(missing)


class VariableScopeError(UsageError):
    def __init__(self, name: str, allowed, found):
        super().__init__(
            f"{name} may only use variables {','.join(allowed)}; found {','.join(sorted(found))}",
            {"polynomial": name},
        )


# Geometry / search

class ComplexityGuardError(UsageError):
    def __init__(self, operation: str, required: int, budget: int):
        super().__init__(
            f"{operation} needs {required} steps, budget is {budget}",
            {"operation": operation, "required": required, "budget": budget},
        )


class DuplicatePointError(UsageError):
    def __init__(self, row: int, point: Any = None):
        super().__init__(f"duplicate point at row {row}", {"row": row, "point": point})
        self.row = row


class BoundViolationError(MathematicalFailure):
    def __init__(self, statement: str, observed: int, bound: int):
        super().__init__(
            f"{statement}: observed {observed} exceeds bound {bound}",
            {"observed": observed, "bound": bound},
        )


class GridNotContainedError(MathematicalFailure):
    def __init__(self, p: Any, q: Any, value: Any):
        super().__init__(
            f"grid is not contained in Z(F): F({p}, {q}) = {value}",
            {"p": p, "q": q, "value": value},
        )


class GridTooSmallError(MathematicalFailure):
    def __init__(self, sizes, threshold: int):
        super().__init__(
            f"grid sides {sizes[0]}x{sizes[1]} must both exceed d^2 = {threshold}",
            {"threshold": threshold},
        )


# Text formats

class PolynomialSyntaxError(UsageError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}",
                         {"line": line, "column": column})
        self.line = line
        self.column = column


class UnknownVariableError(PolynomialSyntaxError):
    def __init__(self, name: str, line: int, column: int):
        super().__init__(f"unknown variable '{name}' (allowed: x, y, s, t, i)", line, column)
        self.name = name


class PointParseError(UsageError):
    def __init__(self, message: str, row: int, column: int):
        super().__init__(f"{message} at row {row}, column {column}",
                         {"row": row, "column": column})
        self.row = row
        self.column = column
