#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Ochax Transfer
==============

Hodge decompositions, minimal models by homotopy transfer and the
coalgebra contraction behind them.

.. toctree::
    :maxdepth: 4

.. automodule:: ochax.transfer.hodge
.. automodule:: ochax.transfer.minimal
.. automodule:: ochax.transfer.perturbation
"""

from .hodge import *  # noqa
from .minimal import *  # noqa
from .perturbation import *  # noqa

__all__ = [s for s in dir() if not s.startswith("_")]
