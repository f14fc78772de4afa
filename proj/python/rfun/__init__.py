"""R-function analysis, convex envelope co(R) and entanglement-of-formation bounds."""

from ._rfun import *  # noqa: F401,F403
from ._rfun import __doc__  # noqa: F401

__version__ = "0.1.0"
