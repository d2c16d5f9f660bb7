"""Goppa and order bounds, the improved-code sets R_d and S_d, stability,
and dimension-improvement accounting for one-point codes.

Brute-force cutoffs used throughout: #A[rho_j] = j - g for every j >= c + r,
and from there on the cardinality grows by 1 per index.  So the order bound
never needs poles beyond rho_{c+r}, and R_d / S_d scans stop at
max(c + r, d + g).
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .arf import aset, is_arf
from .semigroup import NumericalSemigroup

_card_tables: dict[NumericalSemigroup, list[int]] = {}


def _aset_cardinalities(S: NumericalSemigroup, j_max: int) -> list[int]:
    """#A[rho_j] for j = 1..j_max, via the oracle; slot 0 unused, memoized."""
    table = _card_tables.setdefault(S, [0])
    while len(table) <= j_max:
        table.append(aset(S, S.nth_pole(len(table))).cardinality)
    return table


@dataclass(frozen=True)
class OrderBoundProfile:
    """Thresholds l_0 = 0 < l_1 < ... < l_{r-1}: on (l_{i-1}, l_i] the order
    bound is 2i, and from l_{r-1} = c + r - 2 on it equals l + 1 - g."""

    breakpoints: tuple[int, ...]
    semigroup: NumericalSemigroup


@dataclass(frozen=True)
class CodeProfileRow:
    l: int
    rho_l: int
    d_goppa: int
    d_ord: int
    dim_cl: int | None
    r_card: int
    improvement: int | None


@dataclass(frozen=True)
class DimensionImprovement:
    """How much redundancy the improved code saves at designed distance d."""

    d: int
    dim_cl: int
    dim_improved: int
    delta: int


def goppa_bound(S: NumericalSemigroup, l: int) -> int:
    """l + 1 - g, reported raw (may be <= 0 for small l)."""
    if l < 1:
        raise ValueError("l must be positive")
    return l + 1 - S.genus


def order_bound_bruteforce(S: NumericalSemigroup, l: int) -> int:
    """min #A[rho_j] over all j > l, by oracle scan.

    Works for every semigroup.  Scanning stops at j = c + r because from
    there #A[rho_j] = j - g is strictly increasing.
    """
    if l < 1:
        raise ValueError("l must be positive")
    stop = max(l + 1, S.conductor + S.conductor_index)
    cards = _aset_cardinalities(S, stop)
    return min(cards[l + 1 : stop + 1])


def breakpoints(S: NumericalSemigroup) -> OrderBoundProfile:
    """The profile l_i = r + rho_{i+1} - 2 (i = 1..r-1), with l_0 = 0."""
    if S.conductor == 0:
        raise ValueError("breakpoints are not defined for the full semigroup N")
    if not is_arf(S):
        raise ValueError("not an Arf semigroup; use order_bound_bruteforce")
    r = S.conductor_index
    bps = [0] + [r + S.small_elements[i] - 2 for i in range(1, r)]
    return OrderBoundProfile(tuple(bps), S)


def order_bound_arf(S: NumericalSemigroup, l: int) -> int:
    """Closed-form order bound: 2i on (l_{i-1}, l_i], else l + 1 - g."""
    if l < 1:
        raise ValueError("l must be positive")
    bps = breakpoints(S).breakpoints
    if l >= bps[-1]:
        d = l + 1 - S.genus
        if l == bps[-1]:
            assert d == 2 * (len(bps) - 1), "threshold clauses disagree"
        return d
    return 2 * bisect_left(bps, l)


def r_set(S: NumericalSemigroup, d: int) -> tuple[int, ...]:
    """All poles rho with #A[rho] < d (finite; oracle scan)."""
    if d < 1:
        raise ValueError("d must be positive")
    j_max = max(S.conductor + S.conductor_index, d + S.genus)
    cards = _aset_cardinalities(S, j_max)
    return tuple(S.nth_pole(j) for j in range(1, j_max + 1) if cards[j] < d)


def s_set(S: NumericalSemigroup, d: int) -> tuple[int, ...]:
    """All poles rho with #A[rho] = d exactly (finite; oracle scan)."""
    if d < 1:
        raise ValueError("d must be positive")
    j_max = max(S.conductor + S.conductor_index, d + S.genus)
    cards = _aset_cardinalities(S, j_max)
    return tuple(S.nth_pole(j) for j in range(1, j_max + 1) if cards[j] == d)


def r_card_arf(S: NumericalSemigroup, d: int) -> int:
    """#R_d for Arf semigroups: rho_{ceil(d/2)} + floor(d/2)."""
    if d < 1:
        raise ValueError("d must be positive")
    if S.conductor == 0:
        raise ValueError("the closed form is not defined for the full semigroup N")
    if not is_arf(S):
        raise ValueError("not an Arf semigroup; count r_set directly")
    return S.nth_pole((d + 1) // 2) + d // 2


def stability_violation(S: NumericalSemigroup) -> int | None:
    """Smallest odd d = 2t+1 <= 2r-3 where the stable pattern fails, or None.

    The pattern: #S_d = 1 and #R_d = rho_{t+1} + t.  Checking odd d in that
    range is enough to decide stability.
    """
    for t in range(1, S.conductor_index - 1):
        d = 2 * t + 1
        if len(s_set(S, d)) != 1:
            return d
        if len(r_set(S, d)) != S.nth_pole(t + 1) + t:
            return d
    return None


def is_stable(S: NumericalSemigroup) -> bool:
    """Oracle check of the reduced stability criterion; equals is_arf."""
    return stability_violation(S) is None


def dimension_improvement(S: NumericalSemigroup, l: int, n: int) -> DimensionImprovement:
    """Compare dim C_l with the improved code at d = d_ORD(l).

    Needs 2c <= n so that all parity checks involved are independent.
    On (l_{i-1}, l_i] with i <= r-1 the gain is delta = l - rho_i - i; past
    l_{r-1} the two codes coincide.
    """
    if l < 1:
        raise ValueError("l must be positive")
    if not is_arf(S):
        raise ValueError("dimension improvement needs an Arf semigroup")
    if 2 * S.conductor > n:
        raise ValueError(f"needs 2c <= n, got c = {S.conductor}, n = {n}")
    dim_cl = n - l
    if S.conductor == 0:
        # for N the check sets have no skips, so the codes always coincide
        return DimensionImprovement(d=l + 1, dim_cl=dim_cl, dim_improved=dim_cl,
                                    delta=0)
    bps = breakpoints(S).breakpoints
    d = order_bound_arf(S, l)
    if l > bps[-1]:
        return DimensionImprovement(d=d, dim_cl=dim_cl, dim_improved=dim_cl, delta=0)
    i = bisect_left(bps, l)
    delta = l - S.nth_pole(i) - i
    assert delta == l - r_card_arf(S, d), "interval and #R_d accounts disagree"
    return DimensionImprovement(
        d=d, dim_cl=dim_cl, dim_improved=n - r_card_arf(S, d), delta=delta)


def code_profile(S: NumericalSemigroup, n: int, l_max: int) -> list[CodeProfileRow]:
    """Rows for l = 1..l_max; closed forms when S is Arf (and not N), else oracle.

    dim_cl is None when rho_l >= n (the exact dimension is out of scope
    there) and improvement is None when 2c > n (bound-only regime).
    """
    if l_max < 1:
        raise ValueError("l_max must be positive")
    if n < 1:
        raise ValueError("n must be positive")
    closed_forms = is_arf(S) and S.conductor > 0
    rows = []
    for l in range(1, l_max + 1):
        rho_l = S.nth_pole(l)
        if closed_forms:
            d = order_bound_arf(S, l)
            r_card = r_card_arf(S, d)
        else:
            d = order_bound_bruteforce(S, l)
            r_card = len(r_set(S, d))
        rows.append(CodeProfileRow(
            l=l,
            rho_l=rho_l,
            d_goppa=goppa_bound(S, l),
            d_ord=d,
            dim_cl=n - l if rho_l < n else None,
            r_card=r_card,
            improvement=l - r_card if 2 * S.conductor <= n else None,
        ))
    return rows
