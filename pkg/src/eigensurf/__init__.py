"""Exact invariants and counting asymptotics for genus-two eigenform
translation surfaces over real quadratic fields."""

from .qfield import Discriminant, QuadNum, decompose, parse_quadnum, format_quadnum
from .prototypes import Prototype, enumerate_prototypes

__all__ = [
    "Discriminant",
    "QuadNum",
    "decompose",
    "parse_quadnum",
    "format_quadnum",
    "Prototype",
    "enumerate_prototypes",
]
