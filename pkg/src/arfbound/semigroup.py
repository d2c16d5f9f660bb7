"""Numerical semigroups in a canonical finite representation.

A numerical semigroup S is a subset of the nonnegative integers that
contains 0, is closed under addition and has finite complement.  It is
stored as the sorted list of its elements up to and including the
conductor c; every integer >= c belongs to S by convention.  Elements
(poles) are enumerated 1-based by size: rho_1 = 0 < rho_2 < ...
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from math import gcd
from typing import Iterable


@dataclass(frozen=True)
class NumericalSemigroup:
    """Elements up to the conductor, plus the "everything >= c" rule.

    conductor_index is the 1-based index r with rho_r = c, and
    genus = c - r + 1 counts the gaps.
    """

    small_elements: tuple[int, ...]
    conductor: int
    conductor_index: int
    genus: int

    def __post_init__(self) -> None:
        elems = self.small_elements
        if not elems or elems[0] != 0:
            raise ValueError("small_elements must start with 0")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise ValueError("small_elements must be strictly increasing")
        if elems[-1] != self.conductor:
            raise ValueError("the last small element must be the conductor")
        if self.conductor_index != len(elems):
            raise ValueError("conductor_index must be len(small_elements)")
        if self.genus != self.conductor - self.conductor_index + 1:
            raise ValueError("genus must equal conductor - conductor_index + 1")
        object.__setattr__(self, "_small_set", frozenset(elems))

    def __contains__(self, x: int) -> bool:
        return x >= self.conductor or x in self._small_set

    def contains(self, x: int) -> bool:
        return x in self

    def nth_pole(self, i: int) -> int:
        """rho_i (1-based); equals c + (i - r) for every i >= r."""
        if i < 1:
            raise ValueError("pole indices are 1-based")
        if i <= self.conductor_index:
            return self.small_elements[i - 1]
        return self.conductor + (i - self.conductor_index)

    def pole_index(self, rho: int) -> int:
        """Inverse of nth_pole; rho must be an element."""
        if rho >= self.conductor:
            return self.conductor_index + (rho - self.conductor)
        if rho < 0:
            raise ValueError(f"{rho} is negative, not an element")
        k = bisect_left(self.small_elements, rho)
        if k == len(self.small_elements) or self.small_elements[k] != rho:
            raise ValueError(f"{rho} is a gap, not an element")
        return k + 1

    def gaps(self) -> tuple[int, ...]:
        """The finite complement, in increasing order."""
        return tuple(x for x in range(self.conductor) if x not in self._small_set)

    def is_symmetric(self) -> bool:
        """x in S iff c-1-x not in S, equivalently c = 2g."""
        return self.conductor == 2 * self.genus

    def is_hyperelliptic(self) -> bool:
        """S = <2, t> for some odd t >= 3, equivalently 2 in S and S != N."""
        return self.conductor > 0 and 2 in self

    def minimal_generators(self) -> tuple[int, ...]:
        """Elements that are not sums of two smaller nonzero elements.

        Any element >= c + m (m the multiplicity) splits off an m, so the
        search window [m, c + m) is exhaustive.
        """
        if self.conductor == 0:
            return (1,)
        smalls = self.small_elements[1:]
        m = smalls[0]
        candidates = list(smalls) + list(range(self.conductor + 1, self.conductor + m))
        gens = []
        for x in candidates:
            reducible = False
            for a in smalls:
                if 2 * a > x:
                    break
                if (x - a) in self:
                    reducible = True
                    break
            if not reducible:
                gens.append(x)
        return tuple(gens)

    def generator_form(self) -> str:
        return "S = <" + ", ".join(str(x) for x in (0,) + self.minimal_generators()) + ">"

    def gaps_form(self) -> str:
        return "gaps: {" + ", ".join(str(x) for x in self.gaps()) + "}"

    def to_json_dict(self) -> dict:
        return {
            "small_elements": list(self.small_elements),
            "conductor": self.conductor,
            "genus": self.genus,
        }


def _from_small_unchecked(elements: tuple[int, ...]) -> NumericalSemigroup:
    # for construction paths that are additively closed by proof
    c = elements[-1]
    r = len(elements)
    return NumericalSemigroup(elements, c, r, c - r + 1)


def from_small_elements(elements: Iterable[int]) -> NumericalSemigroup:
    """Build S from the list of its elements up to the conductor.

    The last entry is taken as the conductor; the list must be additively
    closed given the "everything >= c" rule, and c - 1 must be a gap.
    """
    elems = sorted(set(elements))
    if elems and elems[0] < 0:
        raise ValueError("elements must be nonnegative")
    if not elems or elems[0] != 0:
        raise ValueError("small_elements must start with 0")
    c = elems[-1]
    present = set(elems)
    if c > 0 and (c - 1) in present:
        raise ValueError(
            f"the last entry is not the conductor: {c - 1} is already an element")
    nonzero = elems[1:]
    for i, a in enumerate(nonzero):
        if 2 * a >= c:
            break
        for b in nonzero[i:]:
            s = a + b
            if s >= c:
                break
            if s not in present:
                raise ValueError(
                    f"not closed under addition: {a} + {b} = {s} is missing")
    return _from_small_unchecked(tuple(elems))


def from_generators(generators: Iterable[int]) -> NumericalSemigroup:
    """Smallest numerical semigroup containing the generators.

    Zeros are ignored.  The gcd of the generators must be 1, otherwise the
    complement is infinite.  Saturates sums up to a bound and certifies the
    conductor by finding a run of min(gens) consecutive poles.
    """
    gens = sorted({g for g in generators if g != 0})
    if gens and gens[0] < 0:
        raise ValueError("generators must be nonnegative")
    if not gens:
        raise ValueError("at least one positive generator is required")
    d = 0
    for g in gens:
        d = gcd(d, g)
    if d != 1:
        raise ValueError(
            f"not a numerical semigroup (complement infinite): gcd of generators is {d}")
    m, top = gens[0], gens[-1]
    bound = 2 * m * top
    while True:
        reachable = bytearray(bound + 1)
        reachable[0] = 1
        for x in range(bound + 1):
            if reachable[x]:
                for g in gens:
                    if x + g <= bound:
                        reachable[x + g] = 1
        run = 0
        conductor = None
        for x in range(bound + 1):
            run = run + 1 if reachable[x] else 0
            if run == m:
                conductor = x - m + 1
                break
        if conductor is not None:
            # a run of m consecutive poles certifies everything beyond it
            return _from_small_unchecked(
                tuple(x for x in range(conductor + 1) if reachable[x]))
        bound *= 2


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    """Build S from its finite set of gaps; the complement must be closed."""
    gap_list = sorted(set(gaps))
    if not gap_list:
        return _from_small_unchecked((0,))
    if gap_list[0] < 1:
        raise ValueError("gaps must be positive integers")
    c = gap_list[-1] + 1
    gap_set = set(gap_list)
    return from_small_elements(x for x in range(c + 1) if x not in gap_set)
