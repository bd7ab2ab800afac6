from ._lllspec import *  # noqa: F401,F403
from ._lllspec import __doc__  # noqa: F401
