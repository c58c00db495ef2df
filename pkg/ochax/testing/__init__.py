#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Testing
=======

.. toctree::
    :maxdepth: 4

.. automodule:: ochax.testing.fixtures
"""

from .fixtures import *  # noqa

__all__ = [s for s in dir() if not s.startswith("_")]
