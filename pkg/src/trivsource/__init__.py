"""Exact computations in the trivial source ring of a finite group."""

__version__ = "0.1.0"

from .errors import TrivSourceError  # noqa: E402
from .permgroup import parse_group  # noqa: E402
from .tsring import Session  # noqa: E402

__all__ = ["Session", "TrivSourceError", "parse_group", "__version__"]
