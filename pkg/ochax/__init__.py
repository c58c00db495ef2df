"""Top-level package for ochax."""

__author__ = """ochax developers"""

# versioning
try:
    from .version import version as __version__
except Exception:
    # Local copy or not installed with setuptools.
    __version__ = "999"

from . import core  # noqa
from . import coalgebra  # noqa
from . import structures  # noqa
from . import trees  # noqa
from . import transfer  # noqa
from . import deformation  # noqa
from . import io  # noqa
from . import testing  # noqa
from .errors import *  # noqa
from .report import Report  # noqa

__all__ = [s for s in dir() if not s.startswith("_")]
