#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Ochax Command Line
==================

Batch front end: loads structure documents, dispatches to the checkers,
transfer and deformation routines and prints a report.

Exit status is 0 when every check passes, 1 when a check fails, 2 for
parse and usage errors and 3 when Maurer-Cartan solving is obstructed.

Example::

    ochax check fixture.json --kind ainf
    ochax transfer fixture.json --out minimal.json
    ochax trees --operad a --leaves 4

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = ["build_parser", "main", "run"]

__doc__ = __doc__.format("\n   ".join(__all__))

import argparse
import json
import logging
import sys

from .config import DEFAULTS, session_options
from .core.scalars import to_scalar
from .deformation import (
    deform_open_sector,
    gauge_transform,
    mc_residual,
    solve_mc,
    trusted_bound,
    twist_ocha,
)
from .errors import (
    ArityError,
    BoundError,
    DegreeError,
    DocumentError,
    ObstructionError,
    OchaError,
    SectorError,
)
from .io.document import (
    StructureDocument,
    dump_document,
    parse_element,
    read_document,
    write_document,
)
from .report import Report
from .structures import (
    check_a_infinity,
    check_cyclicity,
    check_l_infinity,
    check_morphism,
    check_ocha,
    check_sh_derivation,
    check_sh_module,
    cyclic_tensors,
    restrict_open,
)
from .transfer import transfer_minimal
from .trees import check_d_squared, enumerate_trees, schroder, to_graph_text, tree_differential

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_OBSTRUCTED = 3

TREE_LEAF_LIMIT = 7

_USAGE_ERRORS = (DocumentError, BoundError, DegreeError, SectorError, ArityError)


class UsageError(OchaError):
    """The request cannot be served from the given document."""


def _configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _formal_option(values, doc, name, sector, order):
    """
    Element given as repeated ``NAME=c1,c2,...`` flags, or the document
    element of the same name when the flag is absent.
    """
    space = doc.structure.space.space(sector)
    if not values:
        element = doc.elements.get(name)
        if element is not None and element.order != order:
            element = element.truncate(order)
        return element
    coeffs = {}
    for value in values:
        letter, sep, raw = value.partition("=")
        parts = [p.strip() for p in raw.split(",") if p.strip()]
        if not sep or not parts:
            raise UsageError(f"--{name} expects NAME=COEFFICIENTS, got {value!r}")
        coeffs[letter.strip()] = parts if len(parts) > 1 else parts[0]
    return parse_element(space, coeffs, order)


def _seed_option(values):
    seed = {}
    for value in values or ():
        letter, sep, raw = value.partition("=")
        try:
            seed[letter.strip()] = to_scalar(raw) if sep else to_scalar(1)
        except (TypeError, ValueError) as err:
            raise UsageError(f"--seed {value!r}: {err}") from None
    if not seed:
        raise UsageError("mc needs at least one --seed")
    return seed


def _load(args):
    doc = read_document(args.file)
    options = session_options(doc.flags, getattr(args, "bound", None),
                              getattr(args, "order", None), args.format)
    if options["bound"] > doc.structure.bound:
        raise BoundError(f"bound {options['bound']} exceeds the stored tables "
                         f"(arity {doc.structure.bound})")
    return doc, options


def _residual_facts(report, S, closed, opened, prefix=""):
    residual, open_residual = mc_residual(S, closed, opened)
    report.fact(f"{prefix}closed_residual_zero", residual.is_zero())
    if open_residual is not None:
        report.fact(f"{prefix}open_residual_zero", open_residual.is_zero())


def cmd_check(args):
    doc, options = _load(args)
    S, bound = doc.structure, options["bound"]
    kind = args.kind
    if kind == "ainf":
        report = check_a_infinity(restrict_open(S) if S.closed.dimension else S, bound)
    elif kind == "linf":
        report = check_l_infinity(S, bound)
    elif kind == "ocha":
        report = check_ocha(S, bound, bound)
    elif kind == "module":
        report = check_sh_module(S, bound - 1)
    elif kind == "derivation":
        if doc.derivation is None:
            raise UsageError("derivation check needs maps of kind 'theta'")
        report = check_sh_derivation(doc.derivation, restrict_open(S).family, bound)
    elif kind == "cyclic":
        if doc.pairing is None:
            raise UsageError("cyclicity check needs maps of kind 'omega'")
        report = check_cyclicity(cyclic_tensors(S, doc.pairing), S, doc.pairing)
    else:
        if doc.morphism is None:
            raise UsageError("morphism check needs a target and maps of kind 'f'")
        report = check_morphism(doc.morphism, bound)
    report.command = f"check --kind {kind} --bound {bound}"
    return report, None


def cmd_transfer(args):
    doc, options = _load(args)
    result = transfer_minimal(doc.structure, bound=options["bound"])
    report = Report(f"transfer --bound {options['bound']}",
                    {"n_max": result.bound, "m_max": result.bound})
    report.extend(result.report)
    small = result.structure.space
    for sector in ("closed", "open"):
        space = small.space(sector)
        report.facts[f"dim_H:{sector}"] = {
            deg: len(space.names_in_degree(deg)) for deg in space.degrees()
        }
    out = StructureDocument(result.structure, {"bound": result.bound},
                            target=doc.structure, morphism=result.iota)
    return report.finish(), out


def cmd_mc(args):
    doc, options = _load(args)
    S, order = doc.structure, options["order"]
    report = Report(f"mc --order {order}", {"order": order})
    try:
        theta = solve_mc(S, _seed_option(args.seed), order)
    except ObstructionError as err:
        report.facts["obstruction_order"] = err.order
        report.facts["obstruction_class"] = err.obstruction
        report.add("obstruction", 0, 0, (), err.obstruction)
        report.finish()
        err.report = report
        raise
    _residual_facts(report, S, theta, None)
    out = StructureDocument(S, {"bound": S.bound, "order": order}, elements={"cbar": theta})
    return report.finish(), out


def cmd_gauge(args):
    doc, options = _load(args)
    S, order = doc.structure, options["order"]
    start = _formal_option(args.cbar, doc, "cbar", "closed", order)
    if start is None:
        raise UsageError("gauge needs a starting point (--cbar or a 'cbar' element)")
    start_open = _formal_option(args.obar, doc, "obar", "open", order)
    alpha = _formal_option(args.alpha, doc, "alpha", "closed", order)
    beta = _formal_option(args.beta, doc, "beta", "open", order)
    path = gauge_transform(S, start, {0: alpha} if alpha is not None else {},
                           start_open, {0: beta} if beta is not None else None)
    end_closed, end_open = path.endpoint
    report = Report(f"gauge --order {order}", {"order": order})
    _residual_facts(report, S, end_closed, end_open)
    elements = {"cbar": end_closed}
    if end_open is not None:
        elements["obar"] = end_open
    out = StructureDocument(S, {"bound": S.bound, "order": order}, elements=elements)
    return report.finish(), out


def cmd_deform(args):
    doc, options = _load(args)
    S, order = doc.structure, options["order"]
    closed = _formal_option(args.cbar, doc, "cbar", "closed", order)
    if closed is None:
        raise UsageError("deform needs --cbar or a 'cbar' element")
    opened = _formal_option(args.obar, doc, "obar", "open", order)
    report = Report(f"deform --order {order}", {"order": order})
    _residual_facts(report, S, closed, opened)
    if args.twisted:
        T = twist_ocha(S, closed, opened)
    else:
        T = deform_open_sector(S, closed, opened)
    bound = trusted_bound(S, order)
    report.bounds["trusted"] = bound
    report.facts["weak"] = T.weak
    if bound >= 1:
        checker = check_ocha(T, bound, bound) if args.twisted else check_a_infinity(T, bound)
        report.extend(checker, prefix="deformed:")
    out = StructureDocument(T, {"bound": T.bound, "order": order, "weak": T.weak})
    return report.finish(), out


def _operad_trees(operad, leaves):
    if operad == "a":
        return enumerate_trees("A", open=leaves)
    if operad == "l":
        return enumerate_trees("L", closed=leaves)
    trees = []
    for p in range(leaves + 1):
        trees += enumerate_trees("OC", closed=p, open=leaves - p)
    return trees


def cmd_trees(args):
    if not 1 <= args.leaves <= TREE_LEAF_LIMIT:
        raise BoundError(f"--leaves must lie in 1..{TREE_LEAF_LIMIT}")
    trees = _operad_trees(args.operad, args.leaves)
    report = Report(f"trees --operad {args.operad} --leaves {args.leaves}",
                    {"leaves": args.leaves})
    report.facts["count"] = len(trees)
    if args.operad == "a":
        report.fact("schroder_count", len(trees) == schroder(args.leaves))
    if args.check_d2:
        operads = {"a": ("A",), "l": ("L",), "oc": ("A", "OC")}[args.operad]
        report.fact("d_squared_zero", check_d_squared(args.leaves, operads=operads))
    blocks = []
    if args.graph or args.differential:
        for tree in trees:
            blocks.append(f"## {tree}\n{to_graph_text(tree)}")
            if args.differential:
                image = tree_differential(tree)
                blocks.append(f"## d({tree})\n{to_graph_text(image) or '0'}")
    return report.finish(), "\n\n".join(blocks) or None


def build_parser():
    """Argument parser with one sub-command per operation."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="INFO logging with -v, DEBUG with -vv")
    common.add_argument("--format", choices=("text", "json"), default=DEFAULTS["fmt"])
    common.add_argument("--out", default=None, help="write the output document here")
    common.add_argument("--no-timing", dest="timing", action="store_false",
                        help="omit the timing field from the report")
    parser = argparse.ArgumentParser(
        prog="ochax", description="Exact checks, transfer and deformations of OCHAs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", parents=[common],
                           help="check the relations of a structure")
    check.add_argument("file")
    check.add_argument("--kind", required=True,
                       choices=("ainf", "linf", "ocha", "module", "derivation", "cyclic",
                                "morphism"))
    check.add_argument("--bound", type=int, default=None)
    check.set_defaults(func=cmd_check)

    transfer = sub.add_parser("transfer", parents=[common],
                              help="minimal model and quasi-isomorphism")
    transfer.add_argument("file")
    transfer.add_argument("--bound", type=int, default=None)
    transfer.set_defaults(func=cmd_transfer)

    mc = sub.add_parser("mc", parents=[common],
                        help="solve the closed Maurer-Cartan equation order by order")
    mc.add_argument("file")
    mc.add_argument("--seed", action="append", metavar="NAME[=p/q]")
    mc.add_argument("--order", type=int, default=None)
    mc.set_defaults(func=cmd_mc)

    gauge = sub.add_parser("gauge", parents=[common],
                           help="flow a Maurer-Cartan element along a gauge path")
    gauge.add_argument("file")
    gauge.add_argument("--order", type=int, default=None)
    for name in ("cbar", "obar", "alpha", "beta"):
        gauge.add_argument(f"--{name}", action="append", metavar="NAME=c1,c2,...")
    gauge.set_defaults(func=cmd_gauge)

    deform = sub.add_parser("deform", parents=[common],
                            help="deform by a Maurer-Cartan element")
    deform.add_argument("file")
    deform.add_argument("--order", type=int, default=None)
    deform.add_argument("--cbar", action="append", metavar="NAME=c1,c2,...")
    deform.add_argument("--obar", action="append", metavar="NAME=c1,c2,...")
    deform.add_argument("--twisted", action="store_true",
                        help="emit the twisted OCHA instead of the deformed open sector")
    deform.set_defaults(func=cmd_deform)

    trees = sub.add_parser("trees", parents=[common], help="enumerate canonical trees")
    trees.add_argument("--operad", choices=("a", "l", "oc"), required=True)
    trees.add_argument("--leaves", type=int, required=True)
    trees.add_argument("--differential", action="store_true")
    trees.add_argument("--check-d2", dest="check_d2", action="store_true")
    trees.add_argument("--graph", action="store_true", help="plain-text vertex lists")
    trees.set_defaults(func=cmd_trees)
    return parser


def _emit(report, output, args, stream):
    if args.format == "json":
        payload = {"report": report.to_dict(args.timing)}
        if isinstance(output, StructureDocument) and args.out is None:
            payload["document"] = output.to_dict()
        elif isinstance(output, str):
            payload["graph"] = output
        stream.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
        return
    stream.write(report.to_text(args.timing) + "\n")
    if isinstance(output, StructureDocument) and args.out is None:
        stream.write(dump_document(output))
    elif isinstance(output, str):
        stream.write(output + "\n")


def run(argv=None, stream=None):
    """
    Parse ``argv``, dispatch and write the report to ``stream``.

    Returns
    -------
    int
        Exit status.
    """
    stream = sys.stdout if stream is None else stream
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        report, output = args.func(args)
        if isinstance(output, StructureDocument) and args.out is not None:
            write_document(output, args.out)
            report.facts["output"] = args.out
    except ObstructionError as err:
        logger.error("%s", err)
        report = getattr(err, "report", None)
        if report is not None:
            _emit(report, None, args, stream)
        return EXIT_OBSTRUCTED
    except (UsageError, OSError) + _USAGE_ERRORS as err:
        logger.error("%s", err)
        return EXIT_USAGE
    except OchaError as err:
        logger.error("%s", err)
        return EXIT_FAIL
    _emit(report, output, args, stream)
    return EXIT_PASS if report.passed else EXIT_FAIL


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
