from ._zkpoly import *  # noqa: F401,F403
from ._zkpoly import __version__  # noqa: F401
