"""Decentralized network coloring.

Seeded random-graph generators, the LCI-minimizing decentralized coloring
process, diversity metrics (defective fraction, largest color-induced
component) and a reproducible sweep harness, all backed by the C++ core.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
