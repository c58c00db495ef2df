#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Ochax Coalgebra
===============

.. toctree::
    :maxdepth: 4

.. automodule:: ochax.coalgebra.words
.. automodule:: ochax.coalgebra.lifts
"""

from .words import *  # noqa
from .lifts import *  # noqa

__all__ = [s for s in dir() if not s.startswith("_")]
