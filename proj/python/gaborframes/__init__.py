"""Frame analysis of multi-window discrete Gabor systems."""

from ._core import *  # noqa: F401,F403
from ._core import GaborError, GaborSystem, PeriodicSet, Window

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
