"""Tree-like graph products, exact colouring oracles and lemma-level checks."""

from ._minorcolor import *  # noqa: F401,F403
from ._minorcolor import named  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
