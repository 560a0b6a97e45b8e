"""Mass, belief, and plausibility, on concept lattices and on powersets.

A mass function distributes one unit of evidence over concepts.  Belief at a
concept sums the mass at or below it; plausibility sums the mass of every
concept whose meet with it has a nonempty extent.  The powerset variants are
the classical definitions and double as the special case where the lattice is
a full powerset.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .context import MassSpec, ObjectSet
from .errors import LabelError, MassError, check_capacity
from .lattice import Concept, ConceptLattice

MAX_SET_CARRIER = 12

_TOP_NAMES = frozenset({"top", "⊤"})
_BOTTOM_NAMES = frozenset({"bottom", "bot", "⊥"})


@dataclass(frozen=True)
class MassFunction:
    """An exact mass assignment over the concepts of a lattice.

    Values are indexed by canonical concept index.  The total is exactly one,
    and the least concept carries no mass whenever its extent is empty.
    """

    lattice: ConceptLattice
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if len(self.values) != len(self.lattice):
            raise MassError(f"expected {len(self.lattice)} values, got {len(self.values)}")
        for i, v in enumerate(self.values):
            if v < 0:
                raise MassError(f"concept {i} has negative mass {v}")
        total = sum(self.values, Fraction(0))
        if total != 1:
            raise MassError(f"mass sums to {total}, expected 1")
        bottom = self.lattice.bottom_index
        if not self.lattice.extent_nonempty[bottom] and self.values[bottom] != 0:
            raise MassError(
                f"the least concept has an empty extent but carries mass "
                f"{self.values[bottom]}")

    @classmethod
    def from_mapping(cls, lattice: ConceptLattice,
                     mapping: Mapping[int | Concept, Fraction]) -> "MassFunction":
        values = [Fraction(0)] * len(lattice)
        for key, value in mapping.items():
            index = key if isinstance(key, int) else lattice.index_of(key)
            values[index] += Fraction(value)
        return cls(lattice, tuple(values))

    @classmethod
    def vacuous(cls, lattice: ConceptLattice) -> "MassFunction":
        """All mass on the greatest concept: total ignorance."""
        return cls.from_mapping(lattice, {lattice.top_index: Fraction(1)})

    def _index(self, c: Concept | int) -> int:
        return c if isinstance(c, int) else self.lattice.index_of(c)

    def __getitem__(self, c: Concept | int) -> Fraction:
        return self.values[self._index(c)]

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.values) if v)

    def bel(self, c: Concept | int) -> Fraction:
        """Total mass of concepts at or below c."""
        i = self._index(c)
        leq = self.lattice.leq_table
        return sum((v for j, v in enumerate(self.values) if leq[j][i]),
                   Fraction(0))

    def pl(self, c: Concept | int) -> Fraction:
        """Total mass of concepts compatible with c.

        Compatible means the meet has a nonempty extent, i.e. some object
        witnesses both concepts at once.
        """
        i = self._index(c)
        meets = self.lattice.meet_table
        nonempty = self.lattice.extent_nonempty
        return sum((v for j, v in enumerate(self.values) if nonempty[meets[j][i]]),
                   Fraction(0))

    def belief_table(self) -> "BeliefTable":
        indices = range(len(self.lattice))
        return BeliefTable(self.lattice,
                           tuple(self.bel(i) for i in indices),
                           tuple(self.pl(i) for i in indices))


@dataclass(frozen=True)
class BeliefTable:
    """Belief and plausibility at every concept, in canonical order."""

    lattice: ConceptLattice
    bel: tuple[Fraction, ...]
    pl: tuple[Fraction, ...]


def bel(m: MassFunction, c: Concept | int) -> Fraction:
    return m.bel(c)


def pl(m: MassFunction, c: Concept | int) -> Fraction:
    return m.pl(c)


# ---------------------------------------------------------------------------
# Powerset (set-level) evidence

@dataclass(frozen=True)
class SetMassFunction:
    """A mass assignment over the powerset of a finite carrier.

    Only the support is stored.  The empty set never carries mass; it plays
    the role of the empty-extent least element.
    """

    carrier: frozenset
    values: Mapping[frozenset, Fraction]

    def __post_init__(self) -> None:
        carrier = frozenset(self.carrier)
        cleaned: dict[frozenset, Fraction] = {}
        for key, value in self.values.items():
            subset = frozenset(key)
            if not subset <= carrier:
                raise MassError(f"focal set {set(subset)!r} is not a subset of the carrier")
            value = Fraction(value)
            if value < 0:
                raise MassError(f"focal set {set(subset)!r} has negative mass {value}")
            if value:
                cleaned[subset] = cleaned.get(subset, Fraction(0)) + value
        if cleaned.get(frozenset(), Fraction(0)) != 0:
            raise MassError("the empty set cannot carry mass")
        total = sum(cleaned.values(), Fraction(0))
        if total != 1:
            raise MassError(f"mass sums to {total}, expected 1")
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "values", cleaned)

    def __getitem__(self, subset: Iterable) -> Fraction:
        return self.values.get(frozenset(subset), Fraction(0))

    def support(self) -> tuple[frozenset, ...]:
        return tuple(sorted(self.values, key=lambda s: (len(s), sorted(map(repr, s)))))

    def bel(self, subset: Iterable) -> Fraction:
        """Total mass of focal sets included in `subset`."""
        check_capacity("carrier for set-level belief", len(self.carrier),
                       MAX_SET_CARRIER)
        x = frozenset(subset)
        if not x <= self.carrier:
            raise MassError(f"{set(x)!r} is not a subset of the carrier")
        return sum((v for y, v in self.values.items() if y <= x), Fraction(0))

    def pl(self, subset: Iterable) -> Fraction:
        """Total mass of focal sets meeting `subset`."""
        check_capacity("carrier for set-level plausibility", len(self.carrier),
                       MAX_SET_CARRIER)
        x = frozenset(subset)
        if not x <= self.carrier:
            raise MassError(f"{set(x)!r} is not a subset of the carrier")
        return sum((v for y, v in self.values.items() if y & x), Fraction(0))


def bel_set(m: SetMassFunction, subset: Iterable) -> Fraction:
    return m.bel(subset)


def pl_set(m: SetMassFunction, subset: Iterable) -> Fraction:
    return m.pl(subset)


def mass_from_bel_set(bel_table: Mapping[frozenset, Fraction]) -> SetMassFunction:
    """Invert a belief table over a full powerset back into a mass function.

    Standard inclusion-exclusion over subsets.  The table must cover every
    subset of its carrier; a negative recovered mass means the table was not
    a belief function, and the offending subset is reported.
    """
    table = {frozenset(k): Fraction(v) for k, v in bel_table.items()}
    carrier: frozenset = frozenset().union(*table) if table else frozenset()
    check_capacity("carrier for belief inversion", len(carrier), MAX_SET_CARRIER)
    elements = sorted(carrier, key=repr)
    n = len(elements)
    if len(table) != 2 ** n:
        raise MassError(f"belief table has {len(table)} entries; expected all "
                        f"{2 ** n} subsets of {set(carrier) or set()!r}")
    by_mask = []
    for mask in range(2 ** n):
        subset = frozenset(elements[i] for i in range(n) if mask >> i & 1)
        by_mask.append(table[subset])
    if by_mask[-1] != 1:
        raise MassError(f"bel on the carrier is {by_mask[-1]}, expected 1")
    if by_mask[0] != 0:
        raise MassError(f"bel on the empty set is {by_mask[0]}; inversion "
                        "would place mass on the empty set")

    values: dict[frozenset, Fraction] = {}
    for mask in range(2 ** n):
        size = mask.bit_count()
        total = Fraction(0)
        sub = mask
        while True:
            sign = -1 if (size - sub.bit_count()) % 2 else 1
            total += sign * by_mask[sub]
            if sub == 0:
                break
            sub = (sub - 1) & mask
        if total < 0:
            witness = frozenset(elements[i] for i in range(n) if mask >> i & 1)
            raise MassError(f"not a belief function: inversion gives mass "
                            f"{total} on {set(witness)!r}")
        if total:
            values[frozenset(elements[i] for i in range(n) if mask >> i & 1)] = total
    return SetMassFunction(carrier, values)


def mass_from_bel_lattice(bel_values: Sequence[Fraction],
                          lat: ConceptLattice) -> MassFunction:
    """Invert a per-concept belief table by recursion along the order.

    Peels mass bottom-up: each concept keeps whatever belief its strict
    down-set does not already account for.  Monotonicity is checked up front
    rather than assumed, and failures carry a witness.
    """
    values = tuple(Fraction(v) for v in bel_values)
    if len(values) != len(lat):
        raise MassError(f"expected {len(lat)} belief values, got {len(values)}")
    leq = lat.leq_table
    if values[lat.top_index] != 1:
        raise MassError(f"bel at the greatest concept is {values[lat.top_index]}, "
                        "expected 1")
    n = len(lat)
    for i in range(n):
        for j in range(n):
            if leq[i][j] and values[i] > values[j]:
                raise MassError(
                    f"bel is not monotone: concept {i} <= concept {j} but "
                    f"{values[i]} > {values[j]}")

    masses = [Fraction(0)] * n
    for i in sorted(range(n), key=lambda k: len(lat[k].extent)):
        below = sum((masses[j] for j in range(n) if leq[j][i] and j != i),
                    Fraction(0))
        masses[i] = values[i] - below
        if masses[i] < 0:
            raise MassError(f"not a belief function on this lattice: recovered "
                            f"mass {masses[i]} on concept {i}")
    bottom = lat.bottom_index
    if not lat.extent_nonempty[bottom] and masses[bottom] != 0:
        raise MassError(f"recovered mass {masses[bottom]} on the empty-extent "
                        "least concept; the table is not a belief function here")
    return MassFunction(lat, tuple(masses))


# ---------------------------------------------------------------------------
# Label resolution for mass assignments parsed from JSON documents

def resolve_concept_label(lat: ConceptLattice, label: str,
                          label_extents: Mapping[str, ObjectSet] | None = None) -> int:
    """Resolve a label to a concept index, by name or by extent literal.

    Routes: the document's label map, the built-in top/bottom names, and
    braced extent literals like "{a,b}".  Two routes naming different
    concepts make the label ambiguous, which is an error.
    """
    label_extents = label_extents or {}
    found: dict[int, str] = {}
    if label in label_extents:
        extent = label_extents[label]
        concept = lat.concept_with_extent(extent)
        if concept is None:
            raise LabelError(
                f"label {label!r} names object set "
                f"{sorted(lat.context.object_names(extent))} which is not a "
                "concept extent")
        found[lat.index_of(concept)] = "document label"
    if label in _TOP_NAMES:
        found[lat.top_index] = "built-in name for the greatest concept"
    if label in _BOTTOM_NAMES:
        found[lat.bottom_index] = "built-in name for the least concept"
    if label.startswith("{") and label.endswith("}"):
        inner = label[1:-1].strip()
        names = [s.strip() for s in inner.split(",")] if inner else []
        indices = set()
        for name in names:
            index = lat.context.object_index.get(name)
            if index is None:
                raise LabelError(f"unknown object name {name!r} in extent literal {label!r}")
            indices.add(index)
        concept = lat.concept_with_extent(indices)
        if concept is not None:
            found[lat.index_of(concept)] = "extent literal"
        elif label not in label_extents:
            raise LabelError(f"no concept has extent {label}")
    if not found:
        raise LabelError(f"label {label!r} matches no concept")
    if len(found) > 1:
        routes = "; ".join(f"concept {i} via {how}" for i, how in sorted(found.items()))
        raise LabelError(f"label {label!r} is ambiguous: {routes}")
    return next(iter(found))


def resolve_mass(spec: MassSpec, lat: ConceptLattice) -> MassFunction:
    """Tie a parsed mass assignment to the concepts of a lattice."""
    seen: dict[int, str] = {}
    mapping: dict[int, Fraction] = {}
    for label, value in spec.entries:
        index = resolve_concept_label(lat, label, spec.label_extents)
        if index in seen:
            raise LabelError(f"mass {spec.name!r}: labels {seen[index]!r} and "
                             f"{label!r} resolve to the same concept")
        seen[index] = label
        mapping[index] = value
    return MassFunction.from_mapping(lat, mapping)
