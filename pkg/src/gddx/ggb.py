"""Import a narrow subset of GeoGebra construction XML.

Supported: ``<element type="point">`` with explicit ``<coords>`` (kept as
diagram hints), ``<command name="Midpoint">`` in its two-point form and
``<command name="Intersect">`` between two lines written as ``Line(A,B)`` /
``Line[A,B]`` expressions.  Anything else aborts with a diagnostic naming the
offending element or command, including the line it sits on.
"""
from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from typing import List, Optional, Tuple, Union
from xml.parsers import expat

from .errors import ParseError
from .model import Construction, ConstructionStep, is_label

_LINE_EXPR = re.compile(r"^\s*Line\s*[\[(]\s*([A-Za-z]\w*)\s*,\s*([A-Za-z]\w*)\s*[\])]\s*$")


def _parse_xml(text: str) -> ET.Element:
    # ET.XMLParser hides its expat instance, so drive expat by hand; each
    # start tag is stamped with the line it opens on for later diagnostics.
    builder = ET.TreeBuilder()
    parser = expat.ParserCreate()

    def handle_start(tag: str, attrs: dict) -> None:
        elem = builder.start(tag, attrs)
        elem.set("__line__", str(parser.CurrentLineNumber))

    parser.StartElementHandler = handle_start
    parser.EndElementHandler = builder.end
    parser.CharacterDataHandler = builder.data
    try:
        parser.Parse(text, True)
        return builder.close()
    except expat.ExpatError as exc:
        raise ParseError(f"malformed XML: {exc}", max(1, exc.lineno))
    except (ValueError, TypeError) as exc:
        raise ParseError(f"malformed XML: {exc}", 1)


def _elem_line(elem: ET.Element) -> int:
    try:
        return int(elem.get("__line__", "1"))
    except ValueError:  # pragma: no cover
        return 1


def _coords_hint(elem: ET.Element) -> Optional[Tuple[float, float]]:
    coords = elem.find("coords")
    if coords is None:
        return None
    try:
        x = float(coords.get("x", ""))
        y = float(coords.get("y", ""))
        z = float(coords.get("z", "1"))
    except ValueError:
        raise ParseError("point coords are not numbers", _elem_line(elem))
    if z == 0:
        raise ParseError("point at infinity is not supported", _elem_line(elem))
    x, y = x / z, y / z
    if any(v != v or abs(v) == float("inf") for v in (x, y)):
        raise ParseError("point coords are not finite", _elem_line(elem))
    return (x, y)


def _line_inputs(cmd: ET.Element, lineno: int) -> Tuple[str, str, str, str]:
    inp = cmd.find("input")
    if inp is None:
        raise ParseError("Intersect command has no <input>", lineno)
    raw = [inp.get("a0", ""), inp.get("a1", "")]
    pts: List[str] = []
    for expr in raw:
        m = _LINE_EXPR.match(expr or "")
        if not m:
            raise ParseError(
                f"Intersect input {expr!r} is not a Line(A,B) expression "
                "(only the two-line form is supported)",
                lineno,
            )
        pts += [m.group(1), m.group(2)]
    return pts[0], pts[1], pts[2], pts[3]


def import_ggb_subset(source: Union[str, bytes]) -> Construction:
    text = source.decode("utf-8", errors="replace") if isinstance(source, bytes) else source
    if text.startswith("﻿"):
        text = text[1:]
    root = _parse_xml(text)
    construction = root.find("construction") if root.tag != "construction" else root
    if construction is None:
        raise ParseError("document has no <construction> element", _elem_line(root))

    steps: List[ConstructionStep] = []
    defined: set[str] = set()
    command_outputs: set[str] = set()

    def check_label(label: str, lineno: int) -> None:
        if not is_label(label):
            raise ParseError(f"bad point label {label!r}", lineno, label)
        if label in defined:
            raise ParseError(f"duplicate point label {label!r}", lineno, label)

    def check_args(args: Tuple[str, ...], lineno: int, what: str) -> None:
        for a in args:
            if a not in defined:
                raise ParseError(f"{what} uses undefined point {a!r}", lineno, a)

    for child in construction:
        lineno = _elem_line(child)
        if child.tag == "element":
            etype = child.get("type", "")
            if etype != "point":
                raise ParseError(
                    f"unsupported element type {etype!r}", lineno, etype
                )
            label = child.get("label", "")
            if label in command_outputs:
                continue  # a constructed point; its coords are derived, not free
            check_label(label, lineno)
            steps.append(ConstructionStep("free_point", label, (), _coords_hint(child)))
            defined.add(label)
        elif child.tag == "command":
            name = child.get("name", "")
            out = child.find("output")
            label = out.get("a0", "") if out is not None else ""
            if name == "Midpoint":
                inp = child.find("input")
                if inp is None or inp.get("a1") is None or inp.get("a2") is not None:
                    raise ParseError(
                        "only the two-point form of Midpoint is supported", lineno, name
                    )
                a, b = inp.get("a0", ""), inp.get("a1", "")
                check_label(label, lineno)
                check_args((a, b), lineno, f"Midpoint {label}")
                if a == b:
                    raise ParseError(f"Midpoint {label}: points coincide", lineno)
                steps.append(ConstructionStep("midpoint", label, (a, b)))
            elif name == "Intersect":
                a, b, c, d = _line_inputs(child, lineno)
                check_label(label, lineno)
                check_args((a, b, c, d), lineno, f"Intersect {label}")
                if a == b or c == d or {a, b} == {c, d}:
                    raise ParseError(f"Intersect {label}: degenerate lines", lineno)
                steps.append(ConstructionStep("intersect_ll", label, (a, b, c, d)))
            else:
                raise ParseError(f"unsupported command {name!r}", lineno, name)
            defined.add(label)
            command_outputs.add(label)
        else:
            raise ParseError(f"unsupported element <{child.tag}>", lineno, child.tag)
    return Construction(tuple(steps), ())
