"""Fused TOPSIS-VIKOR compromise ranking and AISM hierarchies."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
