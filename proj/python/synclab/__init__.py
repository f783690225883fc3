"""Python access to the synclab library."""

from ._synclab import *  # noqa: F401,F403
from ._synclab import __doc__  # noqa: F401
