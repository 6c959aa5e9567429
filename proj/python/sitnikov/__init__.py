"""Restricted n+1-body Sitnikov problem toolkit.

Balanced central configurations of the primaries, axial motion of the
massless particle, period quadrature and synchronous-solution checks, backed
by the C++ core in `sitnikov._core`.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
