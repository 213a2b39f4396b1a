from ._specalg import *  # noqa: F401,F403
from ._specalg import __doc__  # noqa: F401
