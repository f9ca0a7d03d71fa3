"""Combinatorial homological algebra for string algebras."""
from __future__ import annotations

from .presentation import (
    Arrow,
    Path,
    QuiverPresentation,
    StringAlgebra,
    Vertex,
    format_presentation,
    load_algebra,
    parse_presentation,
    projective_word,
    validate,
)
from .words import (
    CenteredWord,
    EventuallyPeriodicWord,
    FiniteWord,
    canonical,
    expand,
    invert,
    is_primitive,
    parse_word,
    validate_word,
)

__version__ = "0.1.0"
