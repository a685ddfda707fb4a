"""Plain-text file formats for algebras and event families.

Algebra file::

    # comments start with '#'
    kind rlse            # or: oml
    size 4
    zero 0
    one 3
    names 0 a a' 1       # optional, whitespace-free labels
    plus                 # rlse: plus then times; oml: meet, join, comp
    0 1 2 3
    ...

Each table keyword is followed by ``size`` rows of ``size`` indices (``comp``
by a single row). Event file::

    states s1 s2
    family my-family     # optional
    0   0   0
    p   1/4 2/3
    ...

one event per line: a name, then one exact rational per state.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .algebra import OrthoLattice, RingLikeAlgebra
from .errors import ParseError
from .events import EventFamily, StateSpace, fmt

RLSE_TABLES = ("plus", "times")
OML_TABLES = ("meet", "join", "comp")
RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")


def _lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line.split()


def parse_algebra(text: str) -> RingLikeAlgebra | OrthoLattice:
    header: dict[str, list[str]] = {}
    tables: dict[str, list[list[int]]] = {}
    current = None
    for tokens in _lines(text):
        key = tokens[0]
        if key in RLSE_TABLES + OML_TABLES and len(tokens) == 1:
            if key in tables:
                raise ParseError(f"duplicate table {key!r}")
            current = tables.setdefault(key, [])
        elif current is not None and all(t.lstrip("-").isdigit() for t in tokens):
            current.append([int(t) for t in tokens])
        elif key in ("kind", "size", "zero", "one", "names"):
            current = None
            header[key] = tokens[1:]
        else:
            raise ParseError(f"unexpected line: {' '.join(tokens)}")
    try:
        kind = header["kind"][0]
        size = int(header["size"][0])
        zero, one = int(header["zero"][0]), int(header["one"][0])
    except (KeyError, IndexError, ValueError) as exc:
        raise ParseError(f"missing or malformed header field: {exc}") from None
    names = header.get("names")
    wanted = {"rlse": RLSE_TABLES, "oml": OML_TABLES}.get(kind)
    if wanted is None:
        raise ParseError(f"unknown kind {kind!r}")
    if set(tables) != set(wanted):
        raise ParseError(f"kind {kind} needs tables {', '.join(wanted)}")
    for key, rows in tables.items():
        expected = 1 if key == "comp" else size
        if len(rows) != expected or any(len(r) != size for r in rows):
            raise ParseError(f"table {key!r} must have {expected} row(s) of {size} entries")
    try:
        if kind == "rlse":
            return RingLikeAlgebra(tables["plus"], tables["times"], zero, one, names)
        return OrthoLattice(tables["meet"], tables["join"], tables["comp"][0], zero, one, names)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def load_algebra(path) -> RingLikeAlgebra | OrthoLattice:
    return parse_algebra(Path(path).read_text())


def _rows(table: np.ndarray) -> list[str]:
    width = len(str(table.shape[-1] - 1))
    return [" ".join(str(v).rjust(width) for v in row) for row in np.atleast_2d(table)]


def format_algebra(obj: RingLikeAlgebra | OrthoLattice) -> str:
    kind = "rlse" if isinstance(obj, RingLikeAlgebra) else "oml"
    out = [f"kind {kind}", f"size {obj.size}", f"zero {obj.zero}", f"one {obj.one}"]
    if obj.names:
        out.append("names " + " ".join(obj.names))
    tables = RLSE_TABLES if kind == "rlse" else OML_TABLES
    for key in tables:
        out.append(key)
        out.extend(_rows(getattr(obj, key)))
    return "\n".join(out) + "\n"


def parse_events(text: str) -> EventFamily:
    states = None
    name = None
    names, rows = [], []
    for tokens in _lines(text):
        if tokens[0] == "states":
            states = tokens[1:]
        elif tokens[0] == "family" and states is not None and not rows and len(tokens) == 2:
            name = tokens[1]
        else:
            if states is None:
                raise ParseError("'states' header must come first")
            if len(tokens) != len(states) + 1:
                raise ParseError(f"event {tokens[0]!r} needs {len(states)} values")
            bad = [t for t in tokens[1:] if not RATIONAL.fullmatch(t)]
            if bad:
                raise ParseError(f"event {tokens[0]!r}: {bad[0]!r} is not an integer or num/den")
            names.append(tokens[0])
            rows.append(tokens[1:])
    if states is None:
        raise ParseError("missing 'states' header")
    try:
        return EventFamily(StateSpace(states), rows, names, name)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc)) from None


def load_events(path) -> EventFamily:
    return parse_events(Path(path).read_text())


def format_events(fam: EventFamily) -> str:
    out = ["states " + " ".join(fam.space.labels)]
    if fam.name and " " not in fam.name:
        out.append(f"family {fam.name}")
    labels = [fam.label(i) for i in range(len(fam))]
    width = max(len(s) for s in labels)
    for label, e in zip(labels, fam.events):
        out.append(label.ljust(width) + " " + " ".join(fmt(v) for v in e))
    return "\n".join(out) + "\n"
