"""Self-checks for the oracle layer itself.

The oracles judge the library, so they get their own sanity tests
against third facts: literature constants, hand determinants, and the
library-independent continued-fraction identity.
"""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import (
    all_entry_tuples,
    bareiss_determinant,
    compositions,
    goeritz_determinant_of_entries,
    nearest_integer_expansion,
    octahedron_volume_oracle,
    orbit_equivalent,
    plat_component_count_of_entries,
)


def _cont(entries):
    value = Fraction(entries[-1])
    for c in reversed(entries[:-1]):
        value = c + 1 / value
    return value


@given(st.integers(min_value=2, max_value=400), st.data())
def test_expansion_reproduces_the_fraction(p, data):
    q = data.draw(
        st.integers(min_value=1, max_value=p - 1).filter(lambda q: gcd(p, q) == 1)
    )
    entries = nearest_integer_expansion(p, q)
    assert len(entries) % 2 == 1
    assert all(e != 0 for e in entries)
    assert _cont(entries) == Fraction(p, q)


def test_bareiss_known_values():
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[7]]) == 7
    assert bareiss_determinant([[1, 2], [3, 4]]) == -2
    assert bareiss_determinant([[2, 0, 1], [1, 1, 0], [0, 3, 1]]) == 5
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0


def test_bareiss_column_swap_pivoting():
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[0, 2, 1], [1, 0, 0], [0, 1, 1]]) == -1


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3))
def test_bareiss_matches_cofactor_expansion(rows):
    m = rows
    expected = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    assert bareiss_determinant(m) == expected


def test_octahedron_volume_matches_literature_digits():
    assert octahedron_volume_oracle() == pytest.approx(3.663862376708876, abs=1e-10)


def test_determinant_oracle_on_named_links():
    assert goeritz_determinant_of_entries((3,)) == 3  # trefoil
    assert goeritz_determinant_of_entries((2,)) == 2  # Hopf link
    assert goeritz_determinant_of_entries((1, 2, -2)) == 5  # figure-eight
    assert goeritz_determinant_of_entries((2, 2, -2)) == 8  # Whitehead link
    assert goeritz_determinant_of_entries((1,)) == 1  # unknot presentation


def test_component_oracle_on_named_links():
    assert plat_component_count_of_entries((3,)) == 1
    assert plat_component_count_of_entries((2,)) == 2
    assert plat_component_count_of_entries((1, 2, -2)) == 1
    assert plat_component_count_of_entries((2, 2, -2)) == 2


def test_determinant_oracle_is_mirror_invariant():
    for entries in [(3,), (3, 2, 3), (2, -4, 2), (1, 2, -2)]:
        mirrored = tuple(-e for e in entries)
        assert goeritz_determinant_of_entries(entries) == goeritz_determinant_of_entries(
            mirrored
        )


def test_orbit_equivalent_basics():
    assert orbit_equivalent(5, 2, 3, False)  # inverses
    assert not orbit_equivalent(7, 2, 3, False)
    assert orbit_equivalent(7, 2, 3, True)  # -4 = 3 mod 7
    assert orbit_equivalent(12, 5, 5, False)


def test_compositions_counts():
    assert sorted(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert sum(1 for _ in compositions(8, 3)) == 21  # C(7, 2)


def test_entry_tuple_enumeration_count():
    # lengths are odd, entries nonzero: 2 one-entry words per total 1 and 2,
    # plus the first length-3 words at total 3
    words = list(all_entry_tuples(3))
    assert len(words) == 2 + 2 + (2 + 8)
    assert all(len(w) % 2 == 1 for w in words)
    assert all(all(e != 0 for e in w) for w in words)
