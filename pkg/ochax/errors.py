#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Ochax Errors
============

Exception hierarchy shared by all ochax sub-packages. Checkers never raise
on a failing relation; they return a :class:`~ochax.report.Report`. The
exceptions below signal malformed input or a construction that cannot be
carried out.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "OchaError",
    "DegreeError",
    "ArityError",
    "SectorError",
    "BoundError",
    "DifferentialError",
    "AxiomError",
    "ObstructionError",
    "DocumentError",
]

__doc__ = __doc__.format("\n   ".join(__all__))


class OchaError(ValueError):
    """Base class for all ochax errors."""


class DegreeError(OchaError):
    """A table entry, element or map violates its degree constraint."""


class ArityError(OchaError):
    """Argument count does not match a map signature."""


class SectorError(OchaError):
    """An argument lives in the wrong sector (closed/open/plain)."""


class BoundError(OchaError):
    """A requested arity exceeds the truncation bound of the data."""


class DifferentialError(OchaError):
    """The unary differential does not square to zero."""


class AxiomError(OchaError):
    """A strict axiom fails; ``equation`` names the violated relation."""

    def __init__(self, equation, detail=""):
        self.equation = equation
        self.detail = detail
        msg = f"axiom {equation} violated"
        if detail:
            msg = f"{msg}: {detail}"
        super().__init__(msg)


class ObstructionError(OchaError):
    """Order-by-order Maurer-Cartan solving hit a nonzero cohomology class."""

    def __init__(self, order, obstruction):
        self.order = order
        self.obstruction = obstruction
        super().__init__(f"obstruction at order {order}: {obstruction}")


class DocumentError(OchaError):
    """A structure document failed to parse; ``line`` is 1-based or None."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
