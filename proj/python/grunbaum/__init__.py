"""Exact and Monte-Carlo checks of centroid-section and half-space
inequalities for convex bodies at desk scale (ambient dimension <= 6).

The compiled extension carries the implementation; this package simply
re-exports it.
"""

from grunbaum._core import *  # noqa: F401,F403
from grunbaum._core import __version__  # noqa: F401
