"""Finite set-theoretic solutions of the Yang-Baxter equation."""

from ybx._core import *  # noqa: F401,F403
from ybx._core import YbxError, Solution, CycleSet, SymmetricEngine

__all__ = [name for name in dir() if not name.startswith("_")]
