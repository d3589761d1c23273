"""Exceptions and verdict sentinels shared across the package.

Verdict-style outcomes (NoSolution, NotCoboundary, NotRoot, Nondiagonal, ...)
are ordinary return values, not exceptions: a failed resolution or a
nondiagonal module is an answer, not an error.
"""

from __future__ import annotations


class YDError(Exception):
    """Base class for all errors raised by this package."""


class InvalidElement(YDError):
    """Group element does not fit the group (wrong length, bad entry)."""


class NotNormalForm(YDError):
    """Operation requires a normal-form cocycle."""


class NotProjectiveCharacter(YDError):
    """Character data violates the projective-character relations."""


class ConstraintViolated(YDError):
    """Module parameters violate a named construction constraint."""

    def __init__(self, constraint: str, detail: str = ""):
        self.constraint = constraint
        super().__init__(f"{constraint}" + (f": {detail}" if detail else ""))


class MixedCategory(YDError):
    """Direct sum of modules over different (group, cocycle) pairs."""


class NotHomogeneous(YDError):
    """Tensor element is not homogeneous for the required grading."""


class NondiagonalInput(YDError):
    """Operation defined only for diagonal modules."""


class UndefinedReflection(YDError):
    """Reflection at a vertex with an undefined Cartan entry."""

    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"Cartan entry a[{i}][{j}] undefined")


class EmptyFamily(YDError):
    """Requested module family is empty for these inputs."""


class ParseError(YDError):
    """Instance file is syntactically malformed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(message + where)


class ValidationError(YDError):
    """Instance file parsed but describes invalid data."""


class _Sentinel:
    """Singleton verdict values with a readable repr."""

    _name = "sentinel"

    def __repr__(self):
        return self._name

    def __reduce__(self):
        return (self.__class__, ())


class _NoSolution(_Sentinel):
    _name = "NoSolution"


class _NotCoboundary(_Sentinel):
    _name = "NotCoboundary"


class _NotRoot(_Sentinel):
    _name = "NotRoot"


NoSolution = _NoSolution()
NotCoboundary = _NotCoboundary()
NotRoot = _NotRoot()
