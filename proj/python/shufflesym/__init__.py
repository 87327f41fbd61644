"""Exact arithmetic for (alpha, beta, gamma) shuffles.

Rationals are returned as fractions.Fraction and accepted as anything whose
str() reads as "p/q". Permutations and partitions are tuples.
"""

from ._core import *  # noqa: F401,F403
from ._core import ShuffleParams, ShuffleSymError

__all__ = [name for name in dir() if not name.startswith("_")]
