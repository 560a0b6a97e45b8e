"""Constructive representation of belief and plausibility as measures.

Belief and plausibility are not additive, but each is the inner (resp. outer)
measure of an honest probability measure on a larger structure.  Three
constructions are provided:

* `represent_set`: for powerset masses, a partition space over pairs (focal
  set, element) with an embedding of the original powerset.
* `represent_concepts`: for lattice masses, a product of principal down-sets
  with one designated atom per concept.  The ambient algebra is exponential
  and is never materialized; inner and outer measures are evaluated straight
  from the atom criteria.
* `represent_concepts_frame`: the same content built concretely as a derived
  formal context, exercised at small scale as a cross-check.

Both conceptual constructions require the least concept to have an empty
extent; `normalize_with_mass` transports a mass function to the normalized
context first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .context import FormalContext, normalize_no_universal_object
from .errors import PreconditionError, check_capacity
from .evidence import MassFunction, SetMassFunction
from .lattice import ConceptLattice, enumerate_concepts
from .probspace import ConceptualProbabilitySpace, ProbabilitySpace

MAX_SET_REPRESENT = 4
MAX_FRAME_CONCEPTS = 8
MAX_FRAME_OBJECTS = 24


# ---------------------------------------------------------------------------
# Verification records

@dataclass(frozen=True)
class VerificationRow:
    """Belief/plausibility against inner/outer measure at one concept."""

    concept_index: int
    bel: Fraction
    inner: Fraction
    pl: Fraction
    outer: Fraction

    @property
    def passed(self) -> bool:
        return self.bel == self.inner and self.pl == self.outer


@dataclass(frozen=True)
class SetVerificationRow:
    subset: frozenset
    bel: Fraction
    inner: Fraction
    pl: Fraction
    outer: Fraction

    @property
    def passed(self) -> bool:
        return self.bel == self.inner and self.pl == self.outer


@dataclass(frozen=True)
class VerificationReport:
    lattice: ConceptLattice
    rows: tuple[VerificationRow, ...]
    all_passed: bool


# ---------------------------------------------------------------------------
# Powerset construction

@dataclass(frozen=True)
class SetRepresentation:
    """A partition space whose inner measure is the given belief function.

    The carrier holds pairs (focal candidate Y, element of Y); the block for
    Y collects all pairs with first component Y and weighs m(Y).  A subset X
    of the original carrier embeds as every pair whose element lies in X.
    """

    mass: SetMassFunction
    space: ProbabilitySpace
    embedding: Mapping[frozenset, frozenset]
    blocks_by_subset: Mapping[frozenset, frozenset]
    rows: tuple[SetVerificationRow, ...]
    homomorphism_ok: bool
    all_passed: bool


def _subsets(elements: list) -> list[frozenset]:
    out = [frozenset()]
    for e in elements:
        out += [s | {e} for s in out]
    return sorted(out, key=lambda s: (len(s), sorted(map(repr, s))))


def represent_set(m: SetMassFunction) -> SetRepresentation:
    """Build the partition space representing a powerset mass function."""
    check_capacity("carrier for the powerset representation",
                   len(m.carrier), MAX_SET_REPRESENT)
    elements = sorted(m.carrier, key=repr)
    subsets = _subsets(elements)
    nonempty = [s for s in subsets if s]

    blocks_by_subset = {y: frozenset((y, u) for u in y) for y in nonempty}
    carrier = frozenset().union(*blocks_by_subset.values()) if nonempty else frozenset()
    space = ProbabilitySpace(carrier,
                             tuple(blocks_by_subset[y] for y in nonempty),
                             tuple(m[y] for y in nonempty))

    embedding = {x: frozenset(p for p in carrier if p[1] in x) for x in subsets}

    rows = tuple(SetVerificationRow(subset=x,
                                    bel=m.bel(x),
                                    inner=space.inner_measure(embedding[x]),
                                    pl=m.pl(x),
                                    outer=space.outer_measure(embedding[x]))
                 for x in subsets)
    hom_ok = _boolean_homomorphism_ok(m.carrier, carrier, embedding,
                                      blocks_by_subset)
    all_passed = hom_ok and all(r.passed for r in rows)
    return SetRepresentation(m, space, embedding, blocks_by_subset, rows,
                             hom_ok, all_passed)


def _boolean_homomorphism_ok(carrier: frozenset, derived_carrier: frozenset,
                             h: Mapping[frozenset, frozenset],
                             blocks: Mapping[frozenset, frozenset]) -> bool:
    """The embedding preserves the Boolean structure and the atom criterion."""
    subsets = list(h)
    if h[frozenset()] != frozenset() or h[frozenset(carrier)] != derived_carrier:
        return False
    if len(set(h.values())) != len(subsets):
        return False
    for x in subsets:
        if h[carrier - x] != derived_carrier - h[x]:
            return False
        for y in subsets:
            if h[x & y] != h[x] & h[y] or h[x | y] != h[x] | h[y]:
                return False
        for y, block in blocks.items():
            if (block <= h[x]) != (y <= x):
                return False
    return True


# ---------------------------------------------------------------------------
# Normalization transport

def normalize_with_mass(m: MassFunction) -> tuple[MassFunction, dict[int, int]]:
    """Move a mass function onto the normalized context.

    Adding an attribute held by no object keeps every concept extent and adds
    a new empty-extent least concept.  Mass rides along by extent, the new
    least concept gets zero, and belief/plausibility at surviving concepts are
    unchanged.  Returns the transported mass and the old-to-new index map.
    """
    lat = m.lattice
    if not lat.extent_nonempty[lat.bottom_index]:
        return m, {i: i for i in range(len(lat))}
    new_lat = enumerate_concepts(normalize_no_universal_object(lat.context))
    mapping: dict[int, int] = {}
    values = [Fraction(0)] * len(new_lat)
    for i, concept in enumerate(lat):
        target = new_lat.concept_with_extent(concept.extent)
        assert target is not None, "normalization must preserve concept extents"
        j = new_lat.index_of(target)
        mapping[i] = j
        values[j] = m.values[i]
    return MassFunction(new_lat, tuple(values)), mapping


# ---------------------------------------------------------------------------
# Conceptual construction, algebraic form

@dataclass(frozen=True)
class ConceptRepresentation:
    """Atoms and embedding for the product-of-down-sets construction.

    `embedding[c]` is the coordinate vector of h(c): at coordinate a it holds
    the index of c meet a.  The atom for concept d sits at d on coordinate d
    and at the least concept everywhere else.
    """

    mass: MassFunction
    space: ConceptualProbabilitySpace
    embedding: tuple[tuple[int, ...], ...]
    rows: tuple[VerificationRow, ...]
    all_passed: bool


def _require_empty_bottom(lat: ConceptLattice, what: str) -> None:
    if lat.extent_nonempty[lat.bottom_index]:
        raise PreconditionError(
            f"{what} requires the least concept to have an empty extent; "
            "normalize the context first (see normalize_with_mass)")


def _atom_below(lat: ConceptLattice, d: int, vector: tuple[int, ...]) -> bool:
    """Coordinatewise test: does the atom of concept d sit below `vector`?"""
    leq = lat.leq_table
    bottom = lat.bottom_index
    return all(leq[d if a == d else bottom][vector[a]]
               for a in range(len(vector)))


def represent_concepts(m: MassFunction) -> ConceptRepresentation:
    """Represent bel/pl as inner/outer measures over designated atoms.

    Inner measure collects the atoms below the embedded concept; outer
    measure collects the atoms whose designated concept meets it above the
    least element.  Both are computed from those criteria directly and
    compared against the evidence-module definitions.
    """
    lat = m.lattice
    _require_empty_bottom(lat, "the conceptual representation")
    n = len(lat)
    meets = lat.meet_table
    bottom = lat.bottom_index
    embedding = tuple(tuple(meets[c][a] for a in range(n)) for c in range(n))

    # The outer-measure criterion (meet above bottom) must agree with the
    # compatibility criterion (meet has nonempty extent) before comparing.
    for d in range(n):
        for c in range(n):
            if (meets[d][c] != bottom) != lat.extent_nonempty[meets[d][c]]:
                raise PreconditionError(
                    "meet-at-bottom and empty-meet-extent disagree at "
                    f"concepts ({d}, {c}); the context is not normalized")

    rows = []
    for c in range(n):
        inner = sum((m.values[d] for d in range(n)
                     if _atom_below(lat, d, embedding[c])), Fraction(0))
        outer = sum((m.values[d] for d in range(n) if meets[d][c] != bottom),
                    Fraction(0))
        rows.append(VerificationRow(concept_index=c, bel=m.bel(c),
                                    inner=inner, pl=m.pl(c), outer=outer))
    space = ConceptualProbabilitySpace(lat, m.values)
    return ConceptRepresentation(m, space, embedding, tuple(rows),
                                 all(r.passed for r in rows))


def atom_order_matches(rep: ConceptRepresentation) -> bool:
    """Atom-below-embedding agrees with the lattice order on all pairs."""
    lat = rep.mass.lattice
    return all(_atom_below(lat, d, rep.embedding[c]) == lat.leq_table[d][c]
               for d in range(len(lat)) for c in range(len(lat)))


def embedding_meet_preserving(rep: ConceptRepresentation) -> bool:
    """h(c meet d) equals the coordinatewise meet of h(c) and h(d)."""
    lat = rep.mass.lattice
    meets = lat.meet_table
    n = len(lat)
    return all(rep.embedding[meets[c][d]][a]
               == meets[rep.embedding[c][a]][rep.embedding[d][a]]
               for c in range(n) for d in range(n) for a in range(n))


def atoms_pairwise_disjoint(rep: ConceptRepresentation) -> bool:
    """Distinct atoms meet at the bottom of the product, coordinatewise."""
    lat = rep.mass.lattice
    meets = lat.meet_table
    bottom = lat.bottom_index
    n = len(lat)
    for d in range(n):
        for e in range(n):
            if d == e:
                continue
            for a in range(n):
                left = d if a == d else bottom
                right = e if a == e else bottom
                if meets[left][right] != bottom:
                    return False
    return True


def verify_representation(m: MassFunction) -> VerificationReport:
    """Per-concept comparison of bel/pl with inner/outer measures."""
    rep = represent_concepts(m)
    return VerificationReport(m.lattice, rep.rows, rep.all_passed)


# ---------------------------------------------------------------------------
# Conceptual construction, derived-context (frame) form

@dataclass(frozen=True)
class FrameRepresentation:
    """The conceptual representation built concretely as a derived context.

    Derived objects are pairs (concept, object of its extent); derived
    attributes are pairs (concept, attribute).  A pair is incident unless its
    concepts coincide and the underlying object lacks the attribute.  The
    atom for concept c collects the derived objects tagged with c, and those
    atoms partition the derived object set into an embedded copy of the
    powerset of concepts.
    """

    mass: MassFunction
    derived_context: FormalContext
    object_keys: tuple[tuple[int, int], ...]
    atoms: tuple[frozenset, ...]
    space: ProbabilitySpace
    embedding: tuple[frozenset, ...]
    atom_extents_closed: bool
    unions_closed: bool
    embedding_closed: bool
    embedding_injective: bool
    embedding_meet_preserving: bool
    rows: tuple[VerificationRow, ...]
    all_passed: bool


def represent_concepts_frame(m: MassFunction) -> FrameRepresentation:
    lat = m.lattice
    ctx = lat.context
    _require_empty_bottom(lat, "the frame representation")
    n = len(lat)
    check_capacity("concepts for the frame representation", n,
                   MAX_FRAME_CONCEPTS)
    object_keys = tuple((ci, g) for ci in range(n)
                        for g in sorted(lat[ci].extent))
    check_capacity("derived objects for the frame representation",
                   len(object_keys), MAX_FRAME_OBJECTS)
    attribute_keys = tuple((ci, x) for ci in range(n)
                           for x in range(len(ctx.attributes)))

    object_names = tuple(f"{ci}:{ctx.objects[g]}" for ci, g in object_keys)
    attribute_names = tuple(f"{ci}:{ctx.attributes[x]}"
                            for ci, x in attribute_keys)
    incidence = frozenset(
        (p, q)
        for p, (ci, g) in enumerate(object_keys)
        for q, (dj, x) in enumerate(attribute_keys)
        if ci != dj or (g, x) in ctx.incidence)
    derived = FormalContext(object_names, attribute_names, incidence)

    def closed(extent: frozenset) -> bool:
        return derived.down(derived.up(extent)) == extent

    atoms = tuple(frozenset(p for p, (ci, _) in enumerate(object_keys)
                            if ci == c)
                  for c in range(n))
    atom_extents_closed = all(closed(a) for a in atoms)
    unions_closed = True
    for mask in range(2 ** n):
        union = frozenset().union(*(atoms[c] for c in range(n)
                                    if mask >> c & 1))
        if not closed(union):
            unions_closed = False
            break

    embedding = tuple(frozenset(p for p, (_, g) in enumerate(object_keys)
                                if g in lat[c].extent)
                      for c in range(n))
    embedding_closed = all(closed(e) for e in embedding)
    embedding_injective = len(set(embedding)) == n
    meet_preserving = all(
        embedding[lat.meet_table[c][d]] == embedding[c] & embedding[d]
        for c in range(n) for d in range(n))

    block_indices = [c for c in range(n) if atoms[c]]
    space = ProbabilitySpace(frozenset(range(len(object_keys))),
                             tuple(atoms[c] for c in block_indices),
                             tuple(m.values[c] for c in block_indices))
    rows = tuple(VerificationRow(concept_index=c, bel=m.bel(c),
                                 inner=space.inner_measure(embedding[c]),
                                 pl=m.pl(c),
                                 outer=space.outer_measure(embedding[c]))
                 for c in range(n))
    structural = (atom_extents_closed and unions_closed and embedding_closed
                  and embedding_injective and meet_preserving)
    return FrameRepresentation(m, derived, object_keys, atoms, space,
                               embedding, atom_extents_closed, unions_closed,
                               embedding_closed, embedding_injective,
                               meet_preserving, rows,
                               structural and all(r.passed for r in rows))
