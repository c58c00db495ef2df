#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Ochax Reports
=============

Report objects returned by every checker. A report lists the violated
relation instances, each with its relation kind, arity ``(n, m)``, input
tuple and residual vector. Orderings are stable, so identical inputs give
identical reports apart from the timing field.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = ["Violation", "Report"]

__doc__ = __doc__.format("\n   ".join(__all__))

import json
import logging
import time
from dataclasses import dataclass, field

import numpy as np
import xarray as xr

from .core.scalars import format_scalar
from .core.series import TruncatedSeries

logger = logging.getLogger(__name__)


def _fmt(coef):
    if isinstance(coef, TruncatedSeries):
        return str(coef)
    return format_scalar(coef)


@dataclass(frozen=True)
class Violation:
    """One failing relation instance."""

    kind: str
    n: int
    m: int
    inputs: tuple
    residual: tuple = ()

    @classmethod
    def from_vector(cls, kind, n, m, inputs, vector):
        residual = tuple(sorted((str(k), _fmt(c)) for k, c in vector.items()))
        return cls(kind, n, m, tuple(inputs), residual)

    @property
    def instance(self):
        return (self.kind, self.n, self.m, self.inputs)

    def to_dict(self):
        return {
            "relation": self.kind,
            "n": self.n,
            "m": self.m,
            "inputs": list(self.inputs),
            "residual": dict(self.residual),
        }


@dataclass
class Report:
    """
    Outcome of a check.

    Parameters
    ----------
    command : str
        What was run, echoed in the output.
    bounds : dict
        Truncation bounds used (e.g. ``{"n_max": 4}``).
    """

    command: str
    bounds: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    facts: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    timing: float = 0.0
    _start: float = field(default_factory=time.perf_counter, repr=False, compare=False)

    @property
    def passed(self):
        return not self.violations

    @property
    def verdict(self):
        return "PASS" if self.passed else "FAIL"

    def add(self, kind, n, m, inputs, vector):
        self.violations.append(Violation.from_vector(kind, n, m, inputs, vector))

    def fact(self, name, value):
        """Record a checked fact; a false boolean fact counts as a failure."""
        self.facts[name] = value
        if value is False:
            self.violations.append(Violation(f"fact:{name}", 0, 0, ()))

    def note(self, text):
        logger.warning(text)
        self.notes.append(text)

    def extend(self, other, prefix=""):
        for v in other.violations:
            kind = f"{prefix}{v.kind}" if prefix else v.kind
            self.violations.append(Violation(kind, v.n, v.m, v.inputs, v.residual))
        self.facts.update({f"{prefix}{k}": v for k, v in other.facts.items()})
        self.notes.extend(other.notes)
        return self

    def finish(self):
        self.violations.sort(key=lambda v: (v.kind, v.n, v.m, v.inputs))
        self.timing = time.perf_counter() - self._start
        logger.info("%s: %s (%d violations)", self.command, self.verdict, len(self.violations))
        return self

    def instances(self, kinds=None):
        """Set of violated ``(kind, n, m, inputs)`` cells."""
        return {
            v.instance for v in self.violations if kinds is None or v.kind in kinds
        }

    def cells(self):
        """Set of violated ``(n, m, inputs)`` cells regardless of the relation name."""
        return {(v.n, v.m, v.inputs) for v in self.violations if not v.kind.startswith("fact:")}

    def summary(self):
        """
        Violation counts on the arity grid.

        Returns
        -------
        xarray.Dataset
            Variable ``violations`` with dims ``("n", "m")``.
        """
        n_max = max([self.bounds.get("n_max", 0)] + [v.n for v in self.violations])
        m_max = max([self.bounds.get("m_max", 0)] + [v.m for v in self.violations])
        counts = np.zeros((n_max + 1, m_max + 1), dtype=int)
        for v in self.violations:
            counts[v.n, v.m] += 1
        ds = xr.Dataset(
            {"violations": (("n", "m"), counts)},
            coords={"n": np.arange(n_max + 1), "m": np.arange(m_max + 1)},
            attrs={"command": self.command, "verdict": self.verdict},
        )
        ds["violations"].attrs["long_name"] = "violated relation instances per arity"
        return ds

    def to_dict(self, timing=True):
        out = {
            "command": self.command,
            "verdict": self.verdict,
            "bounds": dict(sorted(self.bounds.items())),
            "violations": [v.to_dict() for v in self.violations],
            "facts": {k: _jsonable(v) for k, v in sorted(self.facts.items())},
            "notes": list(self.notes),
        }
        if timing:
            out["timing"] = round(self.timing, 6)
        return out

    def to_json(self, timing=True):
        return json.dumps(self.to_dict(timing), indent=2)

    def to_text(self, timing=True):
        lines = [f"{self.command}: {self.verdict}"]
        if self.bounds:
            lines.append(
                "verified up to " + ", ".join(f"{k}={v}" for k, v in sorted(self.bounds.items()))
            )
        for name, value in sorted(self.facts.items()):
            lines.append(f"  {name}: {_jsonable(value)}")
        for v in self.violations:
            res = ", ".join(f"{c}*{k}" for k, c in v.residual) or "-"
            lines.append(f"  [{v.kind}] (n={v.n}, m={v.m}) {v.inputs}: {res}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        if timing:
            lines.append(f"  time: {self.timing:.3f}s")
        return "\n".join(lines)


def _jsonable(value):
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, TruncatedSeries):
        return str(value)
    try:
        return format_scalar(value)
    except TypeError:
        return str(value)
