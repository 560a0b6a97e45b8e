"""Concept enumeration and the finite lattice structure of a context.

Concepts are the closed (extent, intent) pairs of a context.  They are stored
in a canonical order (descending extent size, then lexicographic extent) and
the order relation, meets, and joins are precomputed as index tables.  Meets
intersect extents, joins intersect intents; both land on concepts because
closed sets are closed under intersection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .context import AttributeSet, FormalContext, ObjectSet
from .errors import check_capacity

MAX_OBJECTS = 24


@dataclass(frozen=True)
class Concept:
    extent: ObjectSet
    intent: AttributeSet


class ConceptLattice:
    """All concepts of a context with precomputed order, meet, and join.

    Instances are immutable by convention and are only built through
    `enumerate_concepts`.
    """

    def __init__(self, context: FormalContext, concepts: tuple[Concept, ...]):
        self.context = context
        self.concepts = concepts
        self._by_extent = {c.extent: i for i, c in enumerate(concepts)}
        self._by_intent = {c.intent: i for i, c in enumerate(concepts)}
        n = len(concepts)
        self.leq_table: tuple[tuple[bool, ...], ...] = tuple(
            tuple(concepts[i].extent <= concepts[j].extent for j in range(n))
            for i in range(n))
        self.meet_table: tuple[tuple[int, ...], ...] = tuple(
            tuple(self._by_extent[concepts[i].extent & concepts[j].extent]
                  for j in range(n))
            for i in range(n))
        self.join_table: tuple[tuple[int, ...], ...] = tuple(
            tuple(self._by_intent[concepts[i].intent & concepts[j].intent]
                  for j in range(n))
            for i in range(n))
        self.extent_nonempty: tuple[bool, ...] = tuple(
            bool(c.extent) for c in concepts)
        self.top_index = self._by_extent[frozenset(range(len(context.objects)))]
        self.bottom_index = self._by_extent[
            context.down(range(len(context.attributes)))]

    # -- basics ------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.concepts)

    def __iter__(self) -> Iterator[Concept]:
        return iter(self.concepts)

    def __getitem__(self, index: int) -> Concept:
        return self.concepts[index]

    @property
    def top(self) -> Concept:
        return self.concepts[self.top_index]

    @property
    def bottom(self) -> Concept:
        return self.concepts[self.bottom_index]

    def index_of(self, concept: Concept) -> int:
        index = self._by_extent.get(concept.extent)
        if index is None or self.concepts[index] != concept:
            raise ValueError(f"not a concept of this lattice: {concept}")
        return index

    def concept_with_extent(self, extent: Iterable[int]) -> Concept | None:
        index = self._by_extent.get(frozenset(extent))
        return None if index is None else self.concepts[index]

    # -- order, meet, join ---------------------------------------------------

    def leq(self, c: Concept, d: Concept) -> bool:
        return self.leq_table[self.index_of(c)][self.index_of(d)]

    def meet(self, c: Concept, d: Concept) -> Concept:
        return self.concepts[self.meet_table[self.index_of(c)][self.index_of(d)]]

    def join(self, c: Concept, d: Concept) -> Concept:
        return self.concepts[self.join_table[self.index_of(c)][self.index_of(d)]]

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Edges (i, j) where concept i is covered by concept j."""
        n = len(self.concepts)
        leq = self.leq_table
        edges = []
        for i in range(n):
            for j in range(n):
                if i == j or not leq[i][j]:
                    continue
                if not any(k != i and k != j and leq[i][k] and leq[k][j]
                           for k in range(n)):
                    edges.append((i, j))
        return tuple(edges)


def enumerate_concepts(ctx: FormalContext) -> ConceptLattice:
    """Build the concept lattice of a context.

    Intents are exactly the intersections of object intents (including the
    empty intersection, i.e. all attributes); extents are derived from them.
    """
    check_capacity("objects in context", len(ctx.objects), MAX_OBJECTS)
    intents: set[AttributeSet] = {frozenset(range(len(ctx.attributes)))}
    for object_intent in ctx.object_intents:
        intents |= {intent & object_intent for intent in intents}
    concepts = tuple(sorted(
        (Concept(ctx.down(intent), intent) for intent in intents),
        key=lambda c: (-len(c.extent), tuple(sorted(c.extent)))))
    return ConceptLattice(ctx, concepts)


def leq(lat: ConceptLattice, c: Concept, d: Concept) -> bool:
    return lat.leq(c, d)


def meet(lat: ConceptLattice, c: Concept, d: Concept) -> Concept:
    return lat.meet(c, d)


def join(lat: ConceptLattice, c: Concept, d: Concept) -> Concept:
    return lat.join(c, d)
