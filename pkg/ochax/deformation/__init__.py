#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Ochax Deformation
=================

Formal deformation theory over ``hbar Q[hbar]/(hbar^N)``: Maurer-Cartan
equations, twisting, gauge paths and transport along morphisms.

.. toctree::
    :maxdepth: 4

.. automodule:: ochax.deformation.mc
.. automodule:: ochax.deformation.twist
.. automodule:: ochax.deformation.gauge
"""

from .mc import *  # noqa
from .twist import *  # noqa
from .gauge import *  # noqa

__all__ = [s for s in dir() if not s.startswith("_")]
