"""Rigid-body attitude dynamics in generalized coordinates.

Thin python layer over the C++ core: attitude charts (3-2-1 and 3-1-3
Euler angles, reduced Euler parameters), kinematic-identity checks,
Euler's equation in body-frame and generalized-coordinate form, and
fixed-step RK4 trajectory integration.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
