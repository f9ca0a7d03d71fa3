"""Exception hierarchy shared by all modules.

The CLI maps each family onto an exit code, so every error carries enough
context (line, vertex, arrow, letter position) to be reported verbatim.
"""
from __future__ import annotations


class StringAlgebraError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class PresentationError(StringAlgebraError):
    """Text that does not describe a quiver with relations."""

    exit_code = 1


class ParseError(PresentationError):
    def __init__(self, line: int, col: int, msg: str):
        self.line = line
        self.col = col
        self.msg = msg
        super().__init__(f"line {line}, col {col}: {msg}")


class UnknownVertex(PresentationError):
    def __init__(self, name: str, line: int | None = None):
        self.name = name
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"UnknownVertex({name!r}){where}")


class UnknownArrow(PresentationError):
    def __init__(self, name: str, line: int | None = None):
        self.name = name
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"UnknownArrow({name!r}){where}")


class NotAStringAlgebra(StringAlgebraError):
    """A well-formed presentation that fails the string-algebra axioms."""

    exit_code = 2


class NotAdmissible(NotAStringAlgebra):
    def __init__(self, cycle: tuple[str, ...]):
        self.cycle = cycle
        super().__init__(
            "NotAdmissible: arbitrarily long nonzero paths repeat "
            + ".".join(cycle)
        )


class DegreeViolation(NotAStringAlgebra):
    def __init__(self, vertex: str, direction: str, count: int):
        self.vertex = vertex
        self.direction = direction
        self.count = count
        super().__init__(
            f"DegreeViolation: vertex {vertex} has {count} {direction} arrows"
        )


class StringConditionViolation(NotAStringAlgebra):
    def __init__(self, arrow: str, side: str, partners: tuple[str, ...]):
        self.arrow = arrow
        self.side = side
        self.partners = partners
        super().__init__(
            f"StringConditionViolation: arrow {arrow} has {side} "
            + ", ".join(partners)
        )


class WordError(StringAlgebraError):
    """Invalid word or module literal."""

    exit_code = 3


class NotAWord(WordError):
    def __init__(self, position: int, constraint: str):
        self.position = position
        self.constraint = constraint
        super().__init__(f"NotAWord at letter {position}: {constraint}")


class MalformedBandWord(WordError):
    pass


class InfiniteModule(WordError):
    pass


class NotFinite(InfiniteModule):
    pass


class ZeroModule(StringAlgebraError):
    exit_code = 3


class OracleMismatch(StringAlgebraError):
    exit_code = 4


class ConstructionInvariantViolation(AssertionError):
    """Internal consistency failure of the characteristic-word builder."""
