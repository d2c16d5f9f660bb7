from __future__ import annotations

import random

import pytest

import arfbound as ab

SEED = 20260816

KLEIN = ab.from_small_elements([0, 3, 5])


def hyperelliptic(t: int) -> ab.NumericalSemigroup:
    return ab.from_generators([2, t])


def random_semigroup(rng: random.Random, max_conductor: int) -> ab.NumericalSemigroup:
    """Random 3-5 generator semigroup with a bounded conductor."""
    while True:
        gens = [rng.randint(3, 60) for _ in range(rng.randint(3, 5))]
        try:
            S = ab.from_generators(gens)
        except ValueError:
            continue
        if 0 < S.conductor <= max_conductor:
            return S


def random_arf_semigroup(rng: random.Random, max_conductor: int) -> ab.NumericalSemigroup:
    # the closure only adds elements, so the conductor bound survives it
    return ab.arf_closure(random_semigroup(rng, max_conductor))


@pytest.fixture(scope="session")
def arf_fixture_set() -> list[ab.NumericalSemigroup]:
    """Klein, <2,t>, tower levels, and 200 seeded random Arf closures."""
    rng = random.Random(SEED)
    fixtures = [KLEIN]
    fixtures += [hyperelliptic(t) for t in (3, 5, 7, 9)]
    fixtures += [ab.gs_tower_semigroup(q, n) for q in (2, 3, 4) for n in range(2, 7)]
    fixtures += [random_arf_semigroup(rng, 200) for _ in range(200)]
    return fixtures


@pytest.fixture(scope="session")
def mixed_random_set() -> tuple[list[ab.NumericalSemigroup], list[ab.NumericalSemigroup]]:
    """200 random Arf and 200 random non-Arf semigroups, conductor <= 150."""
    rng = random.Random(SEED + 1)
    arf_ones = [random_arf_semigroup(rng, 150) for _ in range(200)]
    non_arf = []
    while len(non_arf) < 200:
        S = random_semigroup(rng, 150)
        if not ab.is_arf(S):
            non_arf.append(S)
    return arf_ones, non_arf


def semigroups_by_genus(g_max: int) -> list[list[ab.NumericalSemigroup]]:
    """All numerical semigroups of genus 0..g_max.

    Tree enumeration: the children of S are S minus one minimal generator
    larger than the Frobenius number, which yields every semigroup of the
    next genus exactly once.
    """
    levels = [[ab.from_small_elements([0])]]
    for _ in range(g_max):
        nxt = []
        for S in levels[-1]:
            frobenius = S.conductor - 1
            for x in S.minimal_generators():
                if x > frobenius:
                    window = [y for y in range(x + 2) if y != x and y in S]
                    nxt.append(ab.from_small_elements(window))
        levels.append(nxt)
    return levels
