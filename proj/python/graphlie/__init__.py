"""Edge-colored graph symmetry groups and 2-step nilpotent Lie algebras."""

from ._graphlie import *  # noqa: F401,F403
from ._graphlie import __version__  # noqa: F401
