#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Ochax IO
========

.. toctree::
    :maxdepth: 4

.. automodule:: ochax.io.document
"""

from .document import *  # noqa

__all__ = [s for s in dir() if not s.startswith("_")]
