from __future__ import annotations

import random

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import arfbound as ab

from conftest import KLEIN


def test_klein_construction():
    assert KLEIN.small_elements == (0, 3, 5)
    assert KLEIN.conductor == 5
    assert KLEIN.conductor_index == 3
    assert KLEIN.genus == 3
    assert KLEIN.gaps() == (1, 2, 4)


def test_from_generators_examples():
    S = ab.from_generators([2, 3])
    assert S.small_elements == (0, 2) and S.genus == 1
    assert ab.from_generators([1]).small_elements == (0,)
    S = ab.from_generators([3, 5])
    assert S.small_elements == (0, 3, 5, 6, 8)
    assert S.gaps() == (1, 2, 4, 7) and S.genus == 4


def test_from_generators_gcd_error():
    with pytest.raises(ValueError, match="gcd of generators is 2"):
        ab.from_generators([2, 4])
    with pytest.raises(ValueError, match="gcd of generators is 3"):
        ab.from_generators([9, 15, 21])


def test_from_generators_saturation_matches_naive_oracle():
    # independent saturation over a fixed window, no conductor detection
    rng = random.Random(7)
    for _ in range(50):
        gens = sorted({rng.randint(2, 25) for _ in range(rng.randint(2, 4))})
        try:
            S = ab.from_generators(gens)
        except ValueError:
            continue
        bound = S.conductor + 2 * max(gens)
        reach = {0}
        grew = True
        while grew:
            grew = False
            for a in list(reach):
                for g in gens:
                    v = a + g
                    if v <= bound and v not in reach:
                        reach.add(v)
                        grew = True
        assert set(S.small_elements) == {x for x in reach if x <= S.conductor}
        assert all(x in S for x in reach)


def test_from_small_elements_validation():
    with pytest.raises(ValueError, match="4 is missing"):
        ab.from_small_elements([0, 2, 3, 5])
    with pytest.raises(ValueError, match="must start with 0"):
        ab.from_small_elements([2, 3])
    with pytest.raises(ValueError, match="not the conductor"):
        ab.from_small_elements([0, 3, 4, 5])  # 4 makes 5 non-minimal
    assert ab.from_small_elements([0]).conductor == 0


def test_from_gaps_examples():
    assert ab.from_gaps([1, 2, 4]) == KLEIN
    assert ab.from_gaps([]).small_elements == (0,)
    with pytest.raises(ValueError, match="1 \\+ 1 = 2 is missing"):
        ab.from_gaps([2])


def test_nth_pole_and_index():
    assert KLEIN.nth_pole(1) == 0
    assert KLEIN.nth_pole(2) == 3
    assert KLEIN.nth_pole(10) == 12
    assert KLEIN.pole_index(5) == 3
    assert KLEIN.pole_index(0) == 1
    assert KLEIN.pole_index(12) == 10
    assert not KLEIN.contains(4)
    assert 6 in KLEIN
    with pytest.raises(ValueError, match="gap"):
        KLEIN.pole_index(4)
    with pytest.raises(ValueError):
        KLEIN.nth_pole(0)


def test_symmetry_and_hyperelliptic():
    S = ab.from_generators([2, 5])
    assert S.is_symmetric() and S.is_hyperelliptic()
    assert not KLEIN.is_symmetric() and not KLEIN.is_hyperelliptic()
    N = ab.from_small_elements([0])
    assert N.is_symmetric() and not N.is_hyperelliptic()
    # the pairing form of symmetry agrees with c = 2g
    for T in (S, KLEIN, ab.from_generators([3, 4]), ab.from_generators([4, 5, 6])):
        paired = all((x in T) != (T.conductor - 1 - x in T)
                     for x in range(T.conductor))
        assert paired == T.is_symmetric()


def test_minimal_generators():
    assert KLEIN.minimal_generators() == (3, 5, 7)
    assert ab.from_generators([2, 3]).minimal_generators() == (2, 3)
    assert ab.from_small_elements([0]).minimal_generators() == (1,)
    assert ab.from_generators([4, 5, 7]).minimal_generators() == (4, 5, 7)


def test_serialization_forms():
    assert KLEIN.generator_form() == "S = <0, 3, 5, 7>"
    assert KLEIN.gaps_form() == "gaps: {1, 2, 4}"
    assert ab.from_small_elements([0]).gaps_form() == "gaps: {}"
    assert KLEIN.to_json_dict() == {
        "small_elements": [0, 3, 5], "conductor": 5, "genus": 3}


@given(st.lists(st.integers(min_value=2, max_value=30), min_size=1, max_size=4))
def test_round_trips(gens):
    try:
        S = ab.from_generators(gens)
    except ValueError:
        assume(False)
    assert ab.from_small_elements(S.small_elements) == S
    assert ab.from_gaps(S.gaps()) == S
    assert ab.from_generators(S.minimal_generators()) == S
    for i in list(range(1, S.conductor_index + 1)) + [S.conductor_index + 9]:
        assert S.pole_index(S.nth_pole(i)) == i
    assert len(S.gaps()) == S.genus
    assert S.nth_pole(S.conductor_index + 3) == S.conductor + 3
