#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Ochax Trees
===========

Tree operads with their edge-expansion differential and their
representation by the maps of an OCHA.

.. toctree::
    :maxdepth: 4

.. automodule:: ochax.trees.tree
.. automodule:: ochax.trees.differential
.. automodule:: ochax.trees.represent
"""

from .tree import *  # noqa
from .differential import *  # noqa
from .represent import *  # noqa

__all__ = [s for s in dir() if not s.startswith("_")]
