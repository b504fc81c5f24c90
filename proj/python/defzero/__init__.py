"""Deficiency of reaction networks and Erdős–Rényi threshold experiments."""

from ._defzero import *  # noqa: F401,F403
from ._defzero import __version__  # noqa: F401
