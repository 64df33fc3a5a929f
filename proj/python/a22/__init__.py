"""Exact combinatorics of the rank-2 affine cluster algebra A(2,2).

Cluster variables computed three independent ways (snake-graph perfect
matchings, compatible pairs on maximal Dyck paths, seed mutation) together
with the bijections phi, theta, psi among the three combinatorial models.
"""

from ._a22 import *  # noqa: F401,F403
from ._a22 import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
