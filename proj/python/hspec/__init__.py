"""Python bindings for the hspec library. Indices are 0-based throughout."""

from ._core import *  # noqa: F401,F403
from ._core import HspecError, __doc__  # noqa: F401
