#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Ochax Core
==========

Exact scalars, graded bases, Koszul signs and multilinear maps.

.. toctree::
    :maxdepth: 4

.. automodule:: ochax.core.scalars
.. automodule:: ochax.core.series
.. automodule:: ochax.core.graded
.. automodule:: ochax.core.permutations
.. automodule:: ochax.core.multimap
.. automodule:: ochax.core.family
.. automodule:: ochax.core.linalg
"""

from .scalars import *  # noqa
from .series import *  # noqa
from .graded import *  # noqa
from .permutations import *  # noqa
from .multimap import *  # noqa
from .family import *  # noqa
from .linalg import *  # noqa

__all__ = [s for s in dir() if not s.startswith("_")]
