from ._rmdisp import *  # noqa: F401,F403
