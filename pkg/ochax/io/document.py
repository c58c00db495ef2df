#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Structure Documents
===================

This sub-module reads and writes the JSON structure document used by the
command line front end. A document holds the graded spaces, the map tables
of a structure (and optionally a target structure with a morphism, a pairing,
a derivation and named formal elements), and a ``flags`` block.

All coefficients are exact: rationals are written as ``"p/q"`` strings (or
plain integers) and series in ``hbar`` as lists of such strings. Floats are
rejected, and every error carries the line of the offending JSON object.
Degrees on disk follow the suspended convention (structure maps of degree
+1); ``flags.shift`` declares a per-sector offset added at load.

Example::

    import ochax as ox
    doc = ox.io.read_document("structure.json")
    report = ox.structures.check_ocha(doc.structure)

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "FORMAT_VERSION",
    "StructureDocument",
    "parse_document",
    "read_document",
    "dump_document",
    "write_document",
    "parse_element",
]

__doc__ = __doc__.format("\n   ".join(__all__))

import json
import logging
from dataclasses import dataclass, field
from json import decoder, scanner

from ..core.family import MapFamily
from ..core.graded import GradedSpace, OCSpace
from ..core.scalars import format_scalar, to_scalar
from ..core.series import TruncatedSeries
from ..deformation.mc import FormalElement
from ..errors import DocumentError, OchaError
from ..structures.cyclic import SymplecticPair
from ..structures.ocha import OchaMorphism, OchaStructure

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1

_SECTORS = ("closed", "open")


class _Located(dict):
    """JSON object remembering the line of its opening brace."""

    line = None


class _FloatToken(str):
    pass


class _Decoder(json.JSONDecoder):
    def __init__(self):
        super().__init__(parse_float=_FloatToken, parse_constant=_FloatToken,
                         object_pairs_hook=list)
        self.parse_object = self._object
        self.scan_once = scanner.py_make_scanner(self)

    def _object(self, s_and_end, *args):
        text, start = s_and_end
        line = text.count("\n", 0, start) + 1
        pairs, end = decoder.JSONObject(s_and_end, *args)
        obj = _Located()
        obj.line = line
        for key, value in pairs:
            if key in obj:
                raise DocumentError(f"duplicate key {key!r}", line)
            if isinstance(value, _FloatToken) or (
                isinstance(value, list) and any(isinstance(v, _FloatToken) for v in value)
            ):
                raise DocumentError(
                    f"inexact number in {key!r}; write rationals as \"p/q\" strings", line
                )
            obj[key] = value
        return obj, end


def _load_json(text):
    try:
        return _Decoder().decode(text)
    except json.JSONDecodeError as err:
        raise DocumentError(err.msg, err.lineno) from None


def _line(node):
    return getattr(node, "line", None)


def _require(node, key, kind=None):
    if not isinstance(node, dict) or key not in node:
        raise DocumentError(f"missing field {key!r}", _line(node))
    value = node[key]
    wrong_type = kind is not None and not isinstance(value, kind)
    if wrong_type or (kind is int and isinstance(value, bool)):
        raise DocumentError(f"field {key!r} has the wrong type", _line(node))
    return value


def _scalar(value, node):
    try:
        return to_scalar(value)
    except (TypeError, ValueError) as err:
        raise DocumentError(str(err), _line(node)) from None


def _coefficient(value, node, order):
    if isinstance(value, list):
        if order is None:
            raise DocumentError("series coefficients need flags.order", _line(node))
        return TruncatedSeries([_scalar(v, node) for v in value], order)
    return _scalar(value, node)


def _basis(node, sector, shift):
    basis = []
    for item in _require(node, "basis", list):
        if not isinstance(item, list) or len(item) != 2 or not isinstance(item[0], str) \
                or not isinstance(item[1], int) or isinstance(item[1], bool):
            raise DocumentError(f"{sector} basis entries are [name, degree] pairs", _line(node))
        basis.append((item[0], item[1] + shift))
    return basis


def _spaces(node, flags):
    shift = flags.get("shift", {})
    bases = {sector: [] for sector in _SECTORS}
    for item in _require(node, "spaces", list):
        sector = _require(item, "sector", str)
        if sector not in _SECTORS:
            raise DocumentError(f"unknown sector {sector!r}", _line(item))
        if bases[sector]:
            raise DocumentError(f"{sector} space declared twice", _line(item))
        bases[sector] = _basis(item, sector, int(shift.get(sector, 0)))
    try:
        return OCSpace(GradedSpace("closed", tuple(bases["closed"])),
                       GradedSpace("open", tuple(bases["open"])))
    except (OchaError, ValueError) as err:
        raise DocumentError(str(err), _line(node)) from None


def _entries(node, order, arity, with_output=True):
    table = {}
    for entry in _require(node, "entries", list):
        inputs = tuple(_require(entry, "inputs", list))
        if len(inputs) != arity or not all(isinstance(x, str) for x in inputs):
            raise DocumentError(f"inputs {list(inputs)} do not match arity {arity}", _line(entry))
        coef = _coefficient(_require(entry, "coefficient"), entry, order)
        if not with_output:
            if inputs in table:
                raise DocumentError(f"duplicate entry for {list(inputs)}", _line(entry))
            table[inputs] = coef
            continue
        output = _require(entry, "output", str)
        vector = table.setdefault(inputs, {})
        if output in vector:
            raise DocumentError(f"duplicate entry {list(inputs)} -> {output}", _line(entry))
        vector[output] = coef
    return table


def _indices(node, kind):
    indices = _require(node, "indices", list)
    if not all(isinstance(i, int) and not isinstance(i, bool) and i >= 0 for i in indices):
        raise DocumentError("indices are non-negative integers", _line(node))
    sector = node.get("sector")
    if kind in ("l", "m") or (kind == "f" and sector == "closed"):
        if len(indices) != 1:
            raise DocumentError(f"{kind} maps take one index", _line(node))
        k = indices[0]
        return ("closed", k, 0) if kind != "m" else ("open", 0, k)
    if kind == "theta":
        if len(indices) != 1:
            raise DocumentError("derivation components take one index", _line(node))
        return ("open", 0, indices[0])
    if len(indices) != 2:
        raise DocumentError(f"{kind} maps take two indices", _line(node))
    return ("open", indices[0], indices[1])


_MAP_KINDS = ("l", "n", "m", "f", "omega", "theta")


def _flags(node):
    flags = node.get("flags", {})
    if not isinstance(flags, dict):
        raise DocumentError("flags must be an object", _line(node))
    out = {"weak": bool(flags.get("weak", False))}
    for key in ("bound", "order"):
        if key in flags:
            out[key] = _require(flags, key, int)
            if out[key] < 1:
                raise DocumentError(f"flags.{key} must be positive", _line(flags))
    shift = flags.get("shift", {})
    if not isinstance(shift, dict) or set(shift) - set(_SECTORS):
        raise DocumentError("flags.shift maps sectors to integer offsets", _line(flags))
    if any(shift.values()):
        out["shift"] = {k: int(v) for k, v in shift.items() if v}
    return out


def _family(space, target, nodes, degree, weak, bound, order, prefix):
    maps = {}
    for node in nodes:
        kind = node["kind"]
        sector, p, q = _indices(node, kind)
        if (sector, p, q) in maps:
            raise DocumentError(f"{kind} map {[p, q]} declared twice", _line(node))
        table = _entries(node, order, p + q)
        try:
            family = MapFamily(space, target, degree, {(sector, p, q): table},
                               bound=bound, weak=weak, prefix=prefix)
        except (OchaError, ValueError) as err:
            raise DocumentError(str(err), _line(node)) from None
        maps.update({key: fmap for key, fmap in family.items()})
    try:
        return MapFamily(space, target, degree, maps, bound=bound, weak=weak, prefix=prefix)
    except (OchaError, ValueError) as err:
        raise DocumentError(str(err), _line(nodes[0]) if nodes else None) from None


def _structure(node, flags, nodes):
    space = _spaces(node, flags)
    family = _family(space, space, nodes, 1, flags["weak"], flags.get("bound"),
                     flags.get("order"), ("l", "n"))
    try:
        return OchaStructure(space, family, flags.get("bound"))
    except OchaError as err:
        raise DocumentError(str(err), _line(node)) from None


def _pairing(space, nodes):
    if not nodes:
        return None
    tables = {"closed": ({}, 0), "open": ({}, 0)}
    for node in nodes:
        sector = _require(node, "sector", str)
        if sector not in _SECTORS:
            raise DocumentError(f"unknown sector {sector!r}", _line(node))
        degree = node.get("degree", 0)
        if not isinstance(degree, int) or isinstance(degree, bool):
            raise DocumentError("pairing degree must be an integer", _line(node))
        tables[sector] = (_entries(node, None, 2, with_output=False), degree)
    try:
        return SymplecticPair(space, tables["closed"][0], tables["closed"][1],
                              tables["open"][0], tables["open"][1])
    except (OchaError, ValueError) as err:
        raise DocumentError(str(err), _line(nodes[0])) from None


def parse_element(space, node, order, line=None):
    """
    Build a :class:`FormalElement` from ``{name: [c_0, c_1, ...]}``.

    Coefficient lists are read as series in ``hbar``; a single rational
    ``"p/q"`` stands for ``p/q * hbar``.
    """
    coeffs = {}
    degree = None
    for name, value in node.items():
        if name not in space:
            raise DocumentError(f"{name!r} is not in the {space.sector} space", line)
        if isinstance(value, list):
            coeffs[name] = [_scalar(v, node) for v in value]
        else:
            coeffs[name] = [0, _scalar(value, node)]
        degree = space.degree(name) if degree is None else degree
    try:
        return FormalElement(space, coeffs, order, 0 if degree is None else degree)
    except (OchaError, ValueError) as err:
        raise DocumentError(str(err), line) from None


@dataclass(eq=False)
class StructureDocument:
    """
    In-memory form of a structure document.

    Attributes
    ----------
    structure : OchaStructure
    flags : dict
        ``weak``, and when present ``bound``, ``order`` and ``shift``.
    target : OchaStructure, optional
        Target of ``morphism``.
    morphism : OchaMorphism, optional
    pairing : SymplecticPair, optional
    derivation : MapFamily, optional
        Degree +1 family on ``Ho`` for derivation checks.
    elements : dict
        Named :class:`FormalElement` objects (``cbar``, ``obar``, ...).
    """

    structure: OchaStructure
    flags: dict = field(default_factory=dict)
    target: OchaStructure = None
    morphism: OchaMorphism = None
    pairing: SymplecticPair = None
    derivation: MapFamily = None
    elements: dict = field(default_factory=dict)
    version: int = FORMAT_VERSION

    @property
    def order(self):
        return self.flags.get("order")

    def to_dict(self):
        return _document_dict(self)

    def to_json(self):
        return dump_document(self)

    def __eq__(self, other):
        if not isinstance(other, StructureDocument):
            return NotImplemented
        return self.to_json() == other.to_json()


def parse_document(text):
    """
    Parse a JSON structure document.

    Raises
    ------
    DocumentError
        With the 1-based line of the offending object.
    """
    root = _load_json(text)
    if not isinstance(root, dict):
        raise DocumentError("a document is a JSON object", 1)
    version = _require(root, "version", int)
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported format version {version}", _line(root))
    flags = _flags(root)
    groups = {kind: [] for kind in _MAP_KINDS}
    for node in root.get("maps", []):
        kind = _require(node, "kind", str)
        if kind not in groups:
            raise DocumentError(f"unknown map kind {kind!r}", _line(node))
        groups[kind].append(node)
    structure = _structure(root, flags, groups["l"] + groups["n"] + groups["m"])
    doc = StructureDocument(structure, flags)

    if "target" in root or groups["f"]:
        target_node = _require(root, "target", dict)
        target_nodes = [n for n in target_node.get("maps", [])]
        for node in target_nodes:
            if _require(node, "kind", str) not in ("l", "n", "m"):
                raise DocumentError("target maps are of kind l, n or m", _line(node))
        doc.target = _structure(target_node, flags, target_nodes)
        family = _family(structure.space, doc.target.space, groups["f"], 0, flags["weak"],
                         flags.get("bound"), flags.get("order"), ("f", "f"))
        try:
            doc.morphism = OchaMorphism(structure, doc.target, family, flags.get("bound"))
        except OchaError as err:
            raise DocumentError(str(err), _line(target_node)) from None

    doc.pairing = _pairing(structure.space, groups["omega"])
    if groups["theta"]:
        doc.derivation = _family(structure.space, structure.space, groups["theta"], 1, False,
                                 flags.get("bound"), flags.get("order"), ("d", "d"))

    elements = root.get("elements", {})
    if not isinstance(elements, dict):
        raise DocumentError("elements must be an object", _line(root))
    for name, node in elements.items():
        sector = _require(node, "sector", str)
        if sector not in _SECTORS:
            raise DocumentError(f"unknown sector {sector!r}", _line(node))
        order = _require(flags, "order", int) if "order" in flags else None
        if order is None:
            raise DocumentError("formal elements need flags.order", _line(node))
        doc.elements[name] = parse_element(structure.space.space(sector),
                                           _require(node, "coefficients", dict), order, _line(node))
    logger.info("parsed %r", structure)
    return doc


def read_document(path):
    """Read a structure document from ``path``."""
    with open(path, encoding="utf-8") as handle:
        return parse_document(handle.read())


def _format_coefficient(coef):
    if isinstance(coef, TruncatedSeries):
        return coef.to_strings()
    return format_scalar(coef)


def _map_nodes(family, kind_of):
    nodes = []
    for key in family:
        fmap = family[key]
        kind, extra = kind_of(key)
        sector, p, q = key
        indices = [q] if kind in ("m", "theta") else [p] if sector == "closed" else [p, q]
        entries = []
        for inputs in sorted(fmap.table):
            for output in sorted(fmap.table[inputs]):
                entries.append({
                    "inputs": list(inputs),
                    "output": output,
                    "coefficient": _format_coefficient(fmap.table[inputs][output]),
                })
        nodes.append({"kind": kind, **extra, "indices": indices, "entries": entries})
    return nodes


def _structure_kind(S):
    def kind_of(key):
        if key[0] == "closed":
            return "l", {}
        return ("m" if S.kind == "ainf" else "n"), {}
    return kind_of


def _spaces_node(space):
    return [
        {"sector": sector, "basis": [[name, deg] for name, deg in space.space(sector).basis]}
        for sector in _SECTORS
        if space.space(sector).dimension
    ]


def _series_order(doc):
    orders = set()
    families = [doc.structure.family]
    families += [x.family for x in (doc.target, doc.morphism) if x is not None]
    if doc.derivation is not None:
        families.append(doc.derivation)
    for family in families:
        for fmap in family.values():
            for vector in fmap.table.values():
                orders.update(c.order for c in vector.values() if isinstance(c, TruncatedSeries))
    orders.update(e.order for e in doc.elements.values())
    if len(orders) > 1:
        raise OchaError(f"mixed truncation orders {sorted(orders)} in one document")
    return orders.pop() if orders else None


def _pairing_nodes(W):
    nodes = []
    for sector, table, degree in (("closed", W.omega_c, W.degree_c), ("open", W.omega_o, W.degree_o)):
        if not table:
            continue
        space = W.space.space(sector)
        entries = [
            {"inputs": [x, y], "coefficient": format_scalar(value)}
            for (x, y), value in sorted(table.items())
            if space.index(x) <= space.index(y)
        ]
        nodes.append({"kind": "omega", "sector": sector, "degree": degree, "entries": entries})
    return nodes


def _document_dict(doc):
    flags = {"weak": doc.structure.weak or bool(doc.flags.get("weak"))}
    flags["bound"] = doc.flags.get("bound", doc.structure.bound)
    order = _series_order(doc) or doc.flags.get("order")
    if order is not None:
        flags["order"] = order
    out = {
        "version": FORMAT_VERSION,
        "flags": flags,
        "spaces": _spaces_node(doc.structure.space),
        "maps": _map_nodes(doc.structure.family, _structure_kind(doc.structure)),
    }
    if doc.morphism is not None:
        out["maps"] += _map_nodes(doc.morphism.family, lambda key: ("f", {"sector": key[0]}))
        out["target"] = {
            "spaces": _spaces_node(doc.target.space),
            "maps": _map_nodes(doc.target.family, _structure_kind(doc.target)),
        }
    if doc.pairing is not None:
        out["maps"] += _pairing_nodes(doc.pairing)
    if doc.derivation is not None:
        out["maps"] += _map_nodes(doc.derivation, lambda key: ("theta", {}))
    if doc.elements:
        out["elements"] = {
            name: {
                "sector": element.space.sector,
                "coefficients": {n: c.to_strings() for n, c in sorted(element.coeffs.items())},
            }
            for name, element in sorted(doc.elements.items())
        }
    return out


def dump_document(doc):
    """
    Canonical JSON text of a document.

    Members are written in arity order and table entries sorted, so equal
    documents give identical text and the output re-parses to an equal
    document. A load-time ``shift`` is not written back: degrees are stored
    as loaded.
    """
    if isinstance(doc, OchaStructure):
        doc = StructureDocument(doc)
    return json.dumps(_document_dict(doc), indent=2, ensure_ascii=False) + "\n"


def write_document(doc, path):
    """Write ``doc`` (or a bare structure) to ``path``."""
    text = dump_document(doc)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)
    logger.info("wrote %s", path)
    return path
