"""Finite probability spaces over a partition; inner and outer measures.

The measurable sets are the unions of blocks.  A subset of the carrier is
approximated from inside by the union of blocks it contains and from outside
by the union of blocks it meets; the inner and outer measures are the measures
of those two approximants.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ParseError
from .lattice import ConceptLattice
from .rationals import parse_rational


@dataclass(frozen=True)
class ProbabilitySpace:
    """A carrier partitioned into blocks, each carrying exact probability.

    Blocks with measure zero are permitted; empty blocks are not.
    """

    carrier: frozenset
    blocks: tuple[frozenset, ...]
    mu: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "carrier", frozenset(self.carrier))
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in self.blocks))
        object.__setattr__(self, "mu", tuple(Fraction(v) for v in self.mu))
        if len(self.blocks) != len(self.mu):
            raise ParseError(f"{len(self.blocks)} blocks but {len(self.mu)} measures")
        seen: set = set()
        for block in self.blocks:
            if not block:
                raise ParseError("blocks must be nonempty")
            if block & seen:
                raise ParseError("blocks must be pairwise disjoint")
            seen |= block
        if seen != self.carrier:
            raise ParseError("blocks must cover the carrier exactly")
        for v in self.mu:
            if v < 0:
                raise ParseError(f"negative block measure {v}")
        total = sum(self.mu, Fraction(0))
        if total != 1:
            raise ParseError(f"block measures sum to {total}, expected 1")

    def _subset(self, subset: Iterable) -> frozenset:
        y = frozenset(subset)
        if not y <= self.carrier:
            raise ParseError(f"{set(y)!r} is not a subset of the carrier")
        return y

    def iota(self, subset: Iterable) -> frozenset:
        """Largest measurable set inside: union of blocks included in it."""
        y = self._subset(subset)
        return frozenset().union(*(b for b in self.blocks if b <= y))

    def gamma(self, subset: Iterable) -> frozenset:
        """Smallest measurable set around: union of blocks meeting it."""
        y = self._subset(subset)
        return frozenset().union(*(b for b in self.blocks if b & y))

    def inner_measure(self, subset: Iterable) -> Fraction:
        y = self._subset(subset)
        return sum((v for b, v in zip(self.blocks, self.mu) if b <= y),
                   Fraction(0))

    def outer_measure(self, subset: Iterable) -> Fraction:
        y = self._subset(subset)
        return sum((v for b, v in zip(self.blocks, self.mu) if b & y),
                   Fraction(0))


def iota(space: ProbabilitySpace, subset: Iterable) -> frozenset:
    return space.iota(subset)


def gamma(space: ProbabilitySpace, subset: Iterable) -> frozenset:
    return space.gamma(subset)


def inner_measure(space: ProbabilitySpace, subset: Iterable) -> Fraction:
    return space.inner_measure(subset)


def outer_measure(space: ProbabilitySpace, subset: Iterable) -> Fraction:
    return space.outer_measure(subset)


@dataclass(frozen=True)
class ConceptualProbabilitySpace:
    """An atomic measure over the product algebra built from a lattice.

    One designated atom per concept of the source lattice, weighted by the
    source mass.  The ambient algebra is never materialized; the represent
    module evaluates inner and outer measures straight from atom criteria.
    """

    source: ConceptLattice
    mu: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu", tuple(Fraction(v) for v in self.mu))
        if len(self.mu) != len(self.source):
            raise ParseError(f"expected {len(self.source)} atom measures, "
                             f"got {len(self.mu)}")
        for v in self.mu:
            if v < 0:
                raise ParseError(f"negative atom measure {v}")
        if sum(self.mu, Fraction(0)) != 1:
            raise ParseError("atom measures must sum to 1")


def parse_probability_space(text: str) -> ProbabilitySpace:
    """Parse {"carrier": [...], "blocks": [[...], ...], "mu": [...]} JSON."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return probability_space_from_json(doc)


def probability_space_from_json(doc: Mapping) -> ProbabilitySpace:
    if not isinstance(doc, Mapping):
        raise ParseError("partition-space document must be a JSON object")
    for key in ("carrier", "blocks", "mu"):
        if key not in doc:
            raise ParseError(f"partition-space document is missing {key!r}")
    carrier = doc["carrier"]
    blocks = doc["blocks"]
    mu = doc["mu"]
    if not isinstance(carrier, list):
        raise ParseError("'carrier' must be a list")
    if not isinstance(blocks, list) or not all(isinstance(b, list) for b in blocks):
        raise ParseError("'blocks' must be a list of lists")
    if not isinstance(mu, list):
        raise ParseError("'mu' must be a list of rationals")
    return ProbabilitySpace(frozenset(carrier),
                            tuple(frozenset(b) for b in blocks),
                            tuple(parse_rational(v) for v in mu))
