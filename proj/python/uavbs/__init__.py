"""Energy budget models for UAV-mounted base stations with PV/WT harvesting."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
