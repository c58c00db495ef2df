#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Ochax Configuration
===================

Session defaults used by the command line front end. ``OCHAX_BOUND`` in the
environment replaces the default arity bound. Values stored in a structure
document take precedence over these defaults, and command line flags may
only tighten them.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = ["DEFAULTS", "session_options"]

__doc__ = __doc__.format("\n   ".join(__all__))

import logging
import os

from .errors import BoundError

logger = logging.getLogger(__name__)

DEFAULTS = {
    "bound": 4,
    "order": 3,
    "fmt": "text",
}


def _env_bound():
    raw = os.environ.get("OCHAX_BOUND")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise BoundError(f"OCHAX_BOUND must be an integer, got {raw!r}")
    if value < 1:
        raise BoundError(f"OCHAX_BOUND must be positive, got {value}")
    return value


def _tighten(name, stored, requested):
    if requested is None:
        return stored
    if stored is not None and requested > stored:
        raise BoundError(f"--{name} {requested} exceeds the stored {name} {stored}")
    return requested


def session_options(flags=None, bound=None, order=None, fmt=None):
    """
    Resolve the effective session parameters.

    Parameters
    ----------
    flags : dict, optional
        ``flags`` block of a structure document.
    bound, order : int, optional
        Values requested on the command line.
    fmt : {"text", "json"}, optional

    Returns
    -------
    dict
        Keys ``bound``, ``order`` and ``fmt``.

    Raises
    ------
    BoundError
        If a requested value exceeds what the document stores.
    """
    flags = flags or {}
    stored_bound = flags.get("bound")
    bound = _tighten("bound", stored_bound, bound)
    stored_order = flags.get("order")
    order = _tighten("order", stored_order, order)
    options = {
        "bound": bound or stored_bound or _env_bound() or DEFAULTS["bound"],
        "order": order or stored_order or DEFAULTS["order"],
        "fmt": fmt or DEFAULTS["fmt"],
    }
    logger.debug("session options %s", options)
    return options
