"""Brute-force validators and seeded random generators used as ground truth.

Everything here recomputes from first principles: the axiom checkers scan
every tuple of subsets with plain inclusion-exclusion, and the brute belief
and plausibility scans work directly on extents.  None of it shares code
paths with the modules it validates beyond the domain types themselves.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .context import FormalContext
from .errors import MassError, check_capacity
from .evidence import MassFunction, SetMassFunction
from .lattice import MAX_OBJECTS, Concept, ConceptLattice
from .probspace import ProbabilitySpace

MAX_AXIOM_CARRIER = 5
MAX_AXIOM_N = 3


@dataclass(frozen=True)
class AxiomViolation:
    sets: tuple[frozenset, ...]
    lhs: Fraction
    rhs: Fraction
    note: str


@dataclass(frozen=True)
class AxiomReport:
    checked_tuples: int
    first_violation: AxiomViolation | None

    @property
    def passed(self) -> bool:
        return self.first_violation is None


def _scaled_table(f: Mapping[frozenset, Fraction]) -> tuple[list, list[int], int]:
    """Common-denominator integer table indexed by bitmask over the carrier."""
    table = {frozenset(k): Fraction(v) for k, v in f.items()}
    carrier = frozenset().union(*table) if table else frozenset()
    check_capacity("carrier for axiom checking", len(carrier), MAX_AXIOM_CARRIER)
    elements = sorted(carrier, key=repr)
    n = len(elements)
    if len(table) != 2 ** n:
        raise MassError(f"table has {len(table)} entries; expected all "
                        f"{2 ** n} subsets of the carrier")
    denom = math.lcm(*(v.denominator for v in table.values())) if table else 1
    scaled = [0] * 2 ** n
    for mask in range(2 ** n):
        subset = frozenset(elements[i] for i in range(n) if mask >> i & 1)
        value = table[subset]
        scaled[mask] = value.numerator * (denom // value.denominator)
    return elements, scaled, denom


def _unmask(elements: list, mask: int) -> frozenset:
    return frozenset(elements[i] for i in range(len(elements)) if mask >> i & 1)


def _range_violation(elements: list, scaled: list[int], denom: int,
                     kind: str) -> AxiomViolation | None:
    full = len(scaled) - 1
    for mask, value in enumerate(scaled):
        if value < 0 or value > denom:
            return AxiomViolation((_unmask(elements, mask),),
                                  Fraction(value, denom), Fraction(1),
                                  f"{kind} value out of [0, 1]")
    if scaled[full] != denom:
        return AxiomViolation((_unmask(elements, full),),
                              Fraction(scaled[full], denom), Fraction(1),
                              f"{kind} must be 1 on the whole carrier")
    return None


def check_belief_axioms_set(f: Mapping[frozenset, Fraction],
                            n_max: int = 3) -> AxiomReport:
    """Exhaustively test the superadditive inclusion-exclusion inequalities.

    For every tuple (A_1..A_n), n up to n_max, the table must satisfy
    f(A_1 ∪ ... ∪ A_n) >= sum over nonempty I of (-1)^(|I|+1) f(∩_{i in I} A_i),
    along with f(S) = 1 and values within [0, 1].
    """
    check_capacity("tuple length for axiom checking", n_max, MAX_AXIOM_N)
    elements, t, denom = _scaled_table(f)
    bad = _range_violation(elements, t, denom, "a belief function's")
    if bad is not None:
        return AxiomReport(0, bad)
    m = len(t)
    checked = 0
    if n_max >= 1:
        checked += m  # f(A) >= f(A) holds identically
    if n_max >= 2:
        for a in range(m):
            ta = t[a]
            for b in range(m):
                checked += 1
                rhs = ta + t[b] - t[a & b]
                if t[a | b] < rhs:
                    return AxiomReport(checked, AxiomViolation(
                        (_unmask(elements, a), _unmask(elements, b)),
                        Fraction(t[a | b], denom), Fraction(rhs, denom),
                        "belief inequality fails at n=2"))
    if n_max >= 3:
        for a in range(m):
            ta = t[a]
            for b in range(m):
                ab = a & b
                pair = ta + t[b] - t[ab]
                union_ab = a | b
                for c in range(m):
                    checked += 1
                    rhs = pair + t[c] - t[a & c] - t[b & c] + t[ab & c]
                    if t[union_ab | c] < rhs:
                        return AxiomReport(checked, AxiomViolation(
                            (_unmask(elements, a), _unmask(elements, b),
                             _unmask(elements, c)),
                            Fraction(t[union_ab | c], denom),
                            Fraction(rhs, denom),
                            "belief inequality fails at n=3"))
    return AxiomReport(checked, None)


def check_plausibility_axioms_set(f: Mapping[frozenset, Fraction],
                                  n_max: int = 3) -> AxiomReport:
    """Exhaustively test the dual (subadditive) inclusion-exclusion bounds.

    For every tuple (A_1..A_n), n up to n_max, the table must satisfy
    f(A_1 ∩ ... ∩ A_n) <= sum over nonempty I of (-1)^(|I|+1) f(∪_{i in I} A_i),
    along with f(S) = 1 and values within [0, 1].
    """
    check_capacity("tuple length for axiom checking", n_max, MAX_AXIOM_N)
    elements, t, denom = _scaled_table(f)
    bad = _range_violation(elements, t, denom, "a plausibility function's")
    if bad is not None:
        return AxiomReport(0, bad)
    m = len(t)
    checked = 0
    if n_max >= 1:
        checked += m
    if n_max >= 2:
        for a in range(m):
            ta = t[a]
            for b in range(m):
                checked += 1
                rhs = ta + t[b] - t[a | b]
                if t[a & b] > rhs:
                    return AxiomReport(checked, AxiomViolation(
                        (_unmask(elements, a), _unmask(elements, b)),
                        Fraction(t[a & b], denom), Fraction(rhs, denom),
                        "plausibility inequality fails at n=2"))
    if n_max >= 3:
        for a in range(m):
            ta = t[a]
            for b in range(m):
                ab_union = a | b
                pair = ta + t[b] - t[ab_union]
                ab = a & b
                for c in range(m):
                    checked += 1
                    rhs = pair + t[c] - t[a | c] - t[b | c] + t[ab_union | c]
                    if t[ab & c] > rhs:
                        return AxiomReport(checked, AxiomViolation(
                            (_unmask(elements, a), _unmask(elements, b),
                             _unmask(elements, c)),
                            Fraction(t[ab & c], denom),
                            Fraction(rhs, denom),
                            "plausibility inequality fails at n=3"))
    return AxiomReport(checked, None)


# ---------------------------------------------------------------------------
# Brute-force belief and plausibility (differential targets)

def brute_bel(m: MassFunction, c: Concept | int) -> Fraction:
    """Belief by direct extent-inclusion scan; no order tables involved."""
    lat = m.lattice
    extent = (lat[c] if isinstance(c, int) else c).extent
    total = Fraction(0)
    for concept, value in zip(lat.concepts, m.values):
        if concept.extent <= extent:
            total += value
    return total


def brute_pl(m: MassFunction, c: Concept | int) -> Fraction:
    """Plausibility by direct extent-intersection scan.

    The meet of two concepts has the intersection of their extents as its
    extent, so compatibility is exactly a nonempty extent intersection.
    """
    lat = m.lattice
    extent = (lat[c] if isinstance(c, int) else c).extent
    total = Fraction(0)
    for concept, value in zip(lat.concepts, m.values):
        if concept.extent & extent:
            total += value
    return total


# ---------------------------------------------------------------------------
# Seeded random generators

def random_context(seed: int, n_objects: int, n_attributes: int,
                   density: float | Fraction) -> FormalContext:
    """A context whose incidence pairs appear independently with `density`."""
    if not 0 <= density <= 1:
        raise ValueError(f"density must be within [0, 1], got {density}")
    if n_objects < 0 or n_attributes < 0:
        raise ValueError("counts must be nonnegative")
    check_capacity("objects in random context", n_objects, MAX_OBJECTS)
    rng = random.Random(seed)
    incidence = frozenset((g, a)
                          for g in range(n_objects)
                          for a in range(n_attributes)
                          if rng.random() < density)
    return FormalContext(tuple(f"o{g}" for g in range(n_objects)),
                         tuple(f"a{a}" for a in range(n_attributes)),
                         incidence)


def random_mass(seed: int, lat: ConceptLattice,
                denominator_bound: int = 64) -> MassFunction:
    """A mass function with every value's denominator within the bound.

    One denominator q is drawn, q units are scattered over the concepts that
    may carry mass, and counts become values; this keeps exact arithmetic
    tame through combination folds.
    """
    eligible = [i for i in range(len(lat))
                if i != lat.bottom_index or lat.extent_nonempty[i]]
    if not eligible:
        raise MassError("no concept of this lattice may carry mass")
    rng = random.Random(seed)
    q = rng.randint(1, denominator_bound)
    counts = Counter(rng.choices(eligible, k=q))
    return MassFunction.from_mapping(
        lat, {i: Fraction(k, q) for i, k in counts.items()})


def _sorted_subsets(elements: Sequence) -> list[frozenset]:
    out = [frozenset()]
    for e in elements:
        out += [s | {e} for s in out]
    return sorted(out, key=lambda s: (len(s), sorted(map(repr, s))))


def random_set_mass(seed: int, carrier: Iterable,
                    denominator_bound: int = 64) -> SetMassFunction:
    """A powerset mass function, supported on nonempty subsets."""
    carrier = frozenset(carrier)
    candidates = [s for s in _sorted_subsets(sorted(carrier, key=repr)) if s]
    if not candidates:
        raise MassError("an empty carrier has no subsets that may carry mass")
    rng = random.Random(seed)
    q = rng.randint(1, denominator_bound)
    counts = Counter(rng.choices(range(len(candidates)), k=q))
    return SetMassFunction(carrier, {candidates[i]: Fraction(k, q)
                                     for i, k in counts.items()})


def random_partition_space(seed: int, carrier: Iterable,
                           denominator_bound: int = 64) -> ProbabilitySpace:
    """A random partition of the carrier with exact block probabilities."""
    carrier = frozenset(carrier)
    if not carrier:
        raise ValueError("the carrier of a probability space must be nonempty")
    elements = sorted(carrier, key=repr)
    rng = random.Random(seed)
    n_groups = rng.randint(1, len(elements))
    groups: dict[int, set] = {}
    for e in elements:
        groups.setdefault(rng.randrange(n_groups), set()).add(e)
    blocks = sorted((frozenset(b) for b in groups.values()),
                    key=lambda b: sorted(map(repr, b)))
    q = rng.randint(1, denominator_bound)
    counts = Counter(rng.choices(range(len(blocks)), k=q))
    mu = tuple(Fraction(counts.get(i, 0), q) for i in range(len(blocks)))
    return ProbabilitySpace(carrier, tuple(blocks), mu)
