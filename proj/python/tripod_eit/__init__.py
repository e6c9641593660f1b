"""Absorption and dispersion of a four-level tripod atom.

Thin python layer over the C++ core: Hamiltonians and dark states, Lindblad
steady states, closed-form susceptibilities, detuning sweeps, transparency
window analysis, and figure presets.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
