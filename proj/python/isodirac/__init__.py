from ._isodirac import *  # noqa: F401,F403
from ._isodirac import __version__  # noqa: F401
