"""Coroot MCP Tools - one module per tool family"""

from . import roots
from . import kostant
from . import oscillators
from . import diagonal
from . import hopf
from . import verification

__all__ = [
    "roots",
    "kostant",
    "oscillators",
    "diagonal",
    "hopf",
    "verification",
]
