#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Ochax Structures
================

A∞-, L∞- and open-closed homotopy algebras, their morphisms, cohomology,
cyclic pairings and the Leibniz-pair construction.

.. toctree::
    :maxdepth: 4

.. automodule:: ochax.structures.ocha
.. automodule:: ochax.structures.checks
.. automodule:: ochax.structures.cohomology
.. automodule:: ochax.structures.morphisms
.. automodule:: ochax.structures.cyclic
.. automodule:: ochax.structures.leibniz
"""

from .ocha import *  # noqa
from .checks import *  # noqa
from .cohomology import *  # noqa
from .morphisms import *  # noqa
from .cyclic import *  # noqa
from .leibniz import *  # noqa

__all__ = [s for s in dir() if not s.startswith("_")]
