"""Evidence combination: the conjunctive rule with conflict reweighting.

Two mass functions combine by meeting their focal elements pairwise.  Pairs
whose meet has an empty extent are conflict; their weight is discarded and the
rest is rescaled.  When every pair conflicts the combination is undefined and
`TotalConflictError` is raised.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import TotalConflictError
from .evidence import MassFunction, SetMassFunction


@dataclass(frozen=True)
class CombinationReport:
    """A combined mass function plus the conflict it discarded.

    `conflict` is the total weight of conflicting pairs before rescaling; for
    a fold it is the conflict of the final step.
    """

    result: MassFunction | SetMassFunction
    conflict: Fraction


def _require_same_lattice(m1: MassFunction, m2: MassFunction) -> None:
    if m1.lattice is m2.lattice:
        return
    if m1.lattice.context == m2.lattice.context \
            and m1.lattice.concepts == m2.lattice.concepts:
        return
    raise ValueError("mass functions live on different lattices")


def combine(m1: MassFunction, m2: MassFunction) -> CombinationReport:
    """Combine two mass functions on the same lattice."""
    _require_same_lattice(m1, m2)
    lat = m1.lattice
    meets = lat.meet_table
    nonempty = lat.extent_nonempty
    acc: dict[int, Fraction] = {}
    conflict = Fraction(0)
    for i in m1.support():
        for j in m2.support():
            weight = m1.values[i] * m2.values[j]
            k = meets[i][j]
            if nonempty[k]:
                acc[k] = acc.get(k, Fraction(0)) + weight
            else:
                conflict += weight
    normalizer = 1 - conflict
    if normalizer == 0:
        raise TotalConflictError()
    values = [Fraction(0)] * len(lat)
    for k, v in acc.items():
        values[k] = v / normalizer
    return CombinationReport(MassFunction(lat, tuple(values)), conflict)


def combine_many(masses: Sequence[MassFunction]) -> CombinationReport:
    """Left fold of `combine`; reports the conflict of the final step."""
    if not masses:
        raise ValueError("need at least one mass function")
    report = CombinationReport(masses[0], Fraction(0))
    for step, m in enumerate(masses[1:], start=2):
        try:
            report = combine(report.result, m)
        except TotalConflictError as exc:
            raise TotalConflictError(
                f"total conflict while folding in mass {step} of {len(masses)}",
                step=step) from exc
    return report


def combine_set(m1: SetMassFunction, m2: SetMassFunction) -> CombinationReport:
    """Combine two powerset mass functions over the same carrier."""
    if m1.carrier != m2.carrier:
        raise ValueError("mass functions live on different carriers")
    acc: dict[frozenset, Fraction] = {}
    conflict = Fraction(0)
    for x, v1 in m1.values.items():
        for y, v2 in m2.values.items():
            weight = v1 * v2
            z = x & y
            if z:
                acc[z] = acc.get(z, Fraction(0)) + weight
            else:
                conflict += weight
    normalizer = 1 - conflict
    if normalizer == 0:
        raise TotalConflictError()
    return CombinationReport(
        SetMassFunction(m1.carrier, {k: v / normalizer for k, v in acc.items()}),
        conflict)
