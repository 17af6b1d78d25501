"""Finite universal-algebra representations, congruences and tensor products."""

from ._omegarep import *  # noqa: F401,F403
from ._omegarep import Error

__all__ = [name for name in dir() if not name.startswith("_")]
