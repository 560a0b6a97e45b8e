"""Formal contexts: derivation operators, CXT and JSON input, normalization.

A formal context is a finite cross table between objects and attributes.  The
two derivation operators `up` (attributes common to a set of objects) and
`down` (objects having all of a set of attributes) form the Galois connection
that everything else in this package is built on.  Objects and attributes are
addressed by index; the name lists fix the index spaces.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .errors import MassError, ParseError
from .rationals import parse_rational

ObjectSet = frozenset[int]
AttributeSet = frozenset[int]

FRESH_ATTRIBUTE = "__none__"


@dataclass(frozen=True)
class FormalContext:
    """Objects, attributes, and which object has which attribute.

    `incidence` holds (object index, attribute index) pairs.  Name order is
    significant: every derived structure reports in these index spaces.
    """

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    incidence: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "attributes", tuple(self.attributes))
        object.__setattr__(self, "incidence", frozenset(self.incidence))
        if len(set(self.objects)) != len(self.objects):
            raise ParseError("object names are not pairwise distinct")
        if len(set(self.attributes)) != len(self.attributes):
            raise ParseError("attribute names are not pairwise distinct")
        for g, m in self.incidence:
            if not (0 <= g < len(self.objects) and 0 <= m < len(self.attributes)):
                raise ParseError(f"incidence pair ({g}, {m}) is out of range")

    @cached_property
    def object_intents(self) -> tuple[AttributeSet, ...]:
        rows: list[set[int]] = [set() for _ in self.objects]
        for g, m in self.incidence:
            rows[g].add(m)
        return tuple(frozenset(r) for r in rows)

    @cached_property
    def attribute_extents(self) -> tuple[ObjectSet, ...]:
        cols: list[set[int]] = [set() for _ in self.attributes]
        for g, m in self.incidence:
            cols[m].add(g)
        return tuple(frozenset(c) for c in cols)

    @cached_property
    def object_index(self) -> Mapping[str, int]:
        return {name: i for i, name in enumerate(self.objects)}

    @cached_property
    def attribute_index(self) -> Mapping[str, int]:
        return {name: i for i, name in enumerate(self.attributes)}

    def up(self, objs: Iterable[int]) -> AttributeSet:
        """Attributes shared by all of `objs`; all attributes when empty."""
        result = set(range(len(self.attributes)))
        for g in objs:
            result &= self.object_intents[g]
        return frozenset(result)

    def down(self, attrs: Iterable[int]) -> ObjectSet:
        """Objects that have all of `attrs`; all objects when empty."""
        result = set(range(len(self.objects)))
        for m in attrs:
            result &= self.attribute_extents[m]
        return frozenset(result)

    def object_names(self, objs: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.objects[g] for g in sorted(objs))

    def attribute_names(self, attrs: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.attributes[m] for m in sorted(attrs))


def up(ctx: FormalContext, objs: Iterable[int]) -> AttributeSet:
    return ctx.up(objs)


def down(ctx: FormalContext, attrs: Iterable[int]) -> ObjectSet:
    return ctx.down(attrs)


def normalize_no_universal_object(ctx: FormalContext) -> FormalContext:
    """Ensure no object has every attribute, so the least extent is empty.

    When some object already has all attributes, a fresh attribute held by no
    object is appended; otherwise the context is returned unchanged.
    """
    if not ctx.down(range(len(ctx.attributes))):
        return ctx
    name = FRESH_ATTRIBUTE
    for k in itertools.count(1):
        if name not in ctx.attribute_index:
            break
        name = f"{FRESH_ATTRIBUTE}{k}"
    return FormalContext(ctx.objects, ctx.attributes + (name,), ctx.incidence)


# ---------------------------------------------------------------------------
# CXT format (the canonical on-disk format)

def parse_cxt(text: str) -> FormalContext:
    """Parse the CXT cross-table format.

    Layout: a literal `B` line, a blank line, the object count, the attribute
    count, a blank line, one name per line (objects then attributes), then one
    row per object made of `X` / `.` characters.
    """
    lines = [line.rstrip("\r") for line in text.split("\n")]

    def get(i: int, what: str) -> str:
        if i >= len(lines):
            raise ParseError(f"unexpected end of input, expected {what}", i + 1)
        return lines[i]

    if get(0, "format header").strip() != "B":
        raise ParseError("expected format header 'B'", 1)
    if get(1, "blank line").strip():
        raise ParseError("expected a blank line after the header", 2)

    def count(i: int, what: str) -> int:
        raw = get(i, what).strip()
        if not raw.isdigit():
            raise ParseError(f"expected {what}, got {raw!r}", i + 1)
        return int(raw)

    n_objects = count(2, "object count")
    n_attributes = count(3, "attribute count")
    if get(4, "blank line").strip():
        raise ParseError("expected a blank line after the counts", 5)

    pos = 5
    objects = tuple(get(pos + i, "object name") for i in range(n_objects))
    pos += n_objects
    attributes = tuple(get(pos + i, "attribute name") for i in range(n_attributes))
    pos += n_attributes

    incidence: set[tuple[int, int]] = set()
    for g in range(n_objects):
        row = get(pos + g, "incidence row")
        if len(row) != n_attributes:
            raise ParseError(
                f"incidence row has {len(row)} entries, expected {n_attributes}",
                pos + g + 1)
        for m, ch in enumerate(row):
            if ch == "X":
                incidence.add((g, m))
            elif ch != ".":
                raise ParseError(f"illegal character {ch!r} in incidence row",
                                 pos + g + 1)
    pos += n_objects
    for i in range(pos, len(lines)):
        if lines[i].strip():
            raise ParseError("unexpected trailing content", i + 1)

    return FormalContext(objects, attributes, frozenset(incidence))


def serialize_cxt(ctx: FormalContext) -> str:
    """Render a context in the CXT format parsed by `parse_cxt`."""
    out = ["B", "", str(len(ctx.objects)), str(len(ctx.attributes)), ""]
    out.extend(ctx.objects)
    out.extend(ctx.attributes)
    for g in range(len(ctx.objects)):
        intent = ctx.object_intents[g]
        out.append("".join("X" if m in intent else "."
                           for m in range(len(ctx.attributes))))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# JSON documents: a context plus optional labels and named mass functions

@dataclass(frozen=True)
class MassSpec:
    """A named mass assignment whose labels are not yet tied to concepts.

    Resolution against a concept lattice happens in the evidence module; the
    entry total is validated here so a bad document fails at parse time.
    """

    name: str
    entries: tuple[tuple[str, Fraction], ...]
    label_extents: Mapping[str, ObjectSet] = field(default_factory=dict)


@dataclass(frozen=True)
class ContextDocument:
    context: FormalContext
    masses: tuple[MassSpec, ...]
    labels: Mapping[str, ObjectSet]
    expected: Mapping | None = None


_DOCUMENT_KEYS = {"objects", "attributes", "incidence", "labels", "masses",
                  "expected"}


def load_document(text: str) -> ContextDocument:
    """Parse the JSON context document format.

    Schema: {"objects": [...], "attributes": [...], "incidence": [[obj, attr],
    ...], "labels": {name: [objects...]}, "masses": {name: {label: rational}}}
    plus an optional "expected" block of published tables used by the bundled
    example cases.  Rationals are "p/q" strings, decimal strings, or numbers.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    unknown = set(doc) - _DOCUMENT_KEYS
    if unknown:
        raise ParseError(f"unknown document keys: {sorted(unknown)}")
    for key in ("objects", "attributes"):
        if key not in doc or not isinstance(doc[key], list) \
                or not all(isinstance(s, str) for s in doc[key]):
            raise ParseError(f"{key!r} must be a list of strings")

    objects = tuple(doc["objects"])
    attributes = tuple(doc["attributes"])
    obj_idx = {name: i for i, name in enumerate(objects)}
    attr_idx = {name: i for i, name in enumerate(attributes)}

    incidence: set[tuple[int, int]] = set()
    for pair in doc.get("incidence", []):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ParseError(f"incidence entries must be [object, attribute] pairs, got {pair!r}")
        g, m = pair
        if g not in obj_idx:
            raise ParseError(f"unknown object name {g!r} in incidence")
        if m not in attr_idx:
            raise ParseError(f"unknown attribute name {m!r} in incidence")
        incidence.add((obj_idx[g], attr_idx[m]))
    context = FormalContext(objects, attributes, frozenset(incidence))

    labels: dict[str, ObjectSet] = {}
    raw_labels = doc.get("labels", {})
    if not isinstance(raw_labels, dict):
        raise ParseError("'labels' must be an object mapping names to object lists")
    for label, names in raw_labels.items():
        if not (isinstance(names, list) and all(isinstance(s, str) for s in names)):
            raise ParseError(f"label {label!r} must map to a list of object names")
        for name in names:
            if name not in obj_idx:
                raise ParseError(f"unknown object name {name!r} in label {label!r}")
        labels[label] = frozenset(obj_idx[name] for name in names)

    masses: list[MassSpec] = []
    raw_masses = doc.get("masses", {})
    if not isinstance(raw_masses, dict):
        raise ParseError("'masses' must be an object mapping names to assignments")
    for name, assignment in raw_masses.items():
        if not isinstance(assignment, dict):
            raise ParseError(f"mass {name!r} must be an object mapping labels to rationals")
        entries = tuple((label, parse_rational(value))
                        for label, value in assignment.items())
        for label, value in entries:
            if value < 0:
                raise MassError(f"mass {name!r} assigns {value} to {label!r}; "
                                "masses must be nonnegative")
        total = sum((v for _, v in entries), Fraction(0))
        if total != 1:
            raise MassError(f"mass {name!r} sums to {total}, expected 1")
        masses.append(MassSpec(name, entries, labels))

    return ContextDocument(context, tuple(masses), labels, doc.get("expected"))


def parse_json_context(text: str) -> tuple[FormalContext, list[MassSpec]]:
    """Parse a JSON document into a context and its named mass assignments."""
    doc = load_document(text)
    return doc.context, list(doc.masses)
