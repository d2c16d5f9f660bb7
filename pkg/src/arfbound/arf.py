"""The Arf property, Arf closure, and the structure of the sets A[rho].

A[rho] = {p in S : rho - p in S}.  Its cardinality drives the order bound,
so aset() below is the brute-force oracle for everything else and takes no
shortcuts.  Indices follow the 1-based enumeration rho_1 = 0 < rho_2 < ...
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .semigroup import NumericalSemigroup, _from_small_unchecked


@dataclass(frozen=True)
class ASetReport:
    """A[rho] together with the prefix marker alpha and the half marker beta.

    alpha = max{j : rho_1, ..., rho_j all in A[rho]}
    beta  = max{j : rho_j in A[rho] and 2 rho_j <= rho}
    """

    rho: int
    elements: tuple[int, ...]
    alpha: int
    beta: int
    cardinality: int

    def to_json_dict(self) -> dict:
        return {
            "rho": self.rho,
            "elements": list(self.elements),
            "alpha": self.alpha,
            "beta": self.beta,
            "cardinality": self.cardinality,
        }


def aset(S: NumericalSemigroup, rho: int) -> ASetReport:
    """Direct scan of all p <= rho.  This is the oracle; no Arf shortcuts."""
    if rho not in S:
        raise ValueError(f"{rho} is not an element of the semigroup")
    c = S.conductor
    small = S._small_set
    elements = []
    for p in range(rho + 1):
        if (p >= c or p in small) and (rho - p >= c or rho - p in small):
            elements.append(p)
    elem_set = set(elements)
    alpha = 0
    while True:
        nxt = S.nth_pole(alpha + 1)
        if nxt > rho or nxt not in elem_set:
            break
        alpha += 1
    beta = 1
    for p in elements:
        if 2 * p <= rho:
            beta = S.pole_index(p)
    return ASetReport(rho, tuple(elements), alpha, beta, len(elements))


@lru_cache(maxsize=None)
def is_arf(S: NumericalSemigroup) -> bool:
    """2 rho_i - rho_k in S for all k <= i; only i < r needs checking."""
    elems = S.small_elements
    c = S.conductor
    for i in range(2, S.conductor_index):
        twice = 2 * elems[i - 1]
        for k in range(i, 0, -1):
            v = twice - elems[k - 1]
            if v >= c:
                break
            if v not in S:
                return False
    return True


def is_arf_via_full_definition(S: NumericalSemigroup) -> bool:
    """rho_i + rho_j - rho_k in S for all k <= j <= i, by triple loop.

    Exists to property-test the equivalence with the two-index form.
    """
    elems = S.small_elements
    c = S.conductor
    for i in range(1, S.conductor_index):
        for j in range(1, i + 1):
            base = elems[i - 1] + elems[j - 1]
            for k in range(j, 0, -1):
                v = base - elems[k - 1]
                if v >= c:
                    break
                if v not in S:
                    return False
    return True


def arf_closure(S: NumericalSemigroup) -> NumericalSemigroup:
    """Smallest Arf semigroup containing S.

    Alternates additive saturation with insertion of every missing
    2 rho_i - rho_k below the conductor; each pass only ever adds
    elements, so the genus strictly decreases until the fixed point.
    The conductor is re-normalized at the end.
    """
    c = S.conductor
    member = bytearray(c) if c else bytearray()
    for x in S.small_elements[:-1]:
        member[x] = 1
    while True:
        # additive closure below c, ascending so smaller sums are final
        for x in range(2, c):
            if not member[x]:
                member[x] = any(
                    member[p] and member[x - p] for p in range(1, x // 2 + 1))
        poles = [x for x in range(c) if member[x]]
        added = False
        for i, a in enumerate(poles):
            for b in poles[: i + 1]:
                v = 2 * a - b
                if v < c and not member[v]:
                    member[v] = 1
                    added = True
        if not added:
            break
    new_c = c
    while new_c > 0 and member[new_c - 1]:
        new_c -= 1
    elements = tuple(x for x in range(new_c) if member[x]) + (new_c,)
    return _from_small_unchecked(elements)


def p_index(S: NumericalSemigroup, i: int) -> int:
    """p_i = c + rho_{i+1} - 1, the last pole whose A-set prefix is rho_1..rho_i."""
    if S.conductor == 0:
        raise ValueError("p_i is not defined for the full semigroup N")
    if i < 1:
        raise ValueError("p_i indices are 1-based")
    return S.conductor + S.nth_pole(i + 1) - 1
