import pytest

from charm_count import (FormulaError, count_bracelets, count_charm_bracelets, count_necklaces, cycle_count,
                         cycle_count_table, euler_phi, repetition_order)
from necklaces import charm_orbit, generate_bracelets, generate_charm_bracelets, generate_necklaces, units
from test_necklaces import orbit_classes

# CB(n, 2) for n = 1..8
BINARY_CHARM_BRACELETS = [2, 3, 4, 6, 6, 13, 10, 24]


def test_euler_phi():
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    with pytest.raises(ValueError):
        euler_phi(0)


def test_repetition_order():
    assert repetition_order(1, 7) == 7
    assert repetition_order(2, 3) == 2      # 1 + 2 = 3
    assert repetition_order(4, 1) == 1
    with pytest.raises(FormulaError):
        repetition_order(0, 3)
    with pytest.raises(ValueError):
        repetition_order(1, 0)


@pytest.mark.parametrize("j, t, n, expected", [
    (3, 0, 5, 2),
    (1, 1, 5, 1),
    (3, 0, 4, 3),
    (1, 0, 6, 6),
    (5, 0, 6, 4),
])
def test_cycle_count(j, t, n, expected):
    assert cycle_count(j, t, n) == expected


def test_cycle_count_matches_direct_cycle_walk():
    for n in range(1, 16):
        for j in units(n) or [1]:
            for t in range(n):
                seen = set()
                cycles = 0
                for start in range(n):
                    if start in seen:
                        continue
                    cycles += 1
                    u = start
                    while u not in seen:
                        seen.add(u)
                        u = (j * u + t) % n
                assert cycle_count(j, t, n) == cycles, (j, t, n)


def test_cycle_count_errors():
    with pytest.raises(ValueError):
        cycle_count(2, 0, 4)
    with pytest.raises(ValueError):
        cycle_count(1, 5, 5)


def test_cycle_count_table():
    table = cycle_count_table(5)
    assert table.n == 5
    assert len(table.entries) == 5 * 4
    assert table[3, 0] == 2
    assert cycle_count_table(1).entries == {(1, 0): 1}


def test_binary_charm_bracelets():
    assert [count_charm_bracelets(n, 2) for n in range(1, 9)] == BINARY_CHARM_BRACELETS


def test_single_bead():
    for k in range(1, 6):
        assert count_charm_bracelets(1, k) == k


def test_one_colour():
    for n in range(1, 12):
        assert count_charm_bracelets(n, 1) == 1
        assert count_necklaces(n, 1) == 1
        assert count_bracelets(n, 1) == 1


def test_count_errors():
    with pytest.raises(ValueError):
        count_charm_bracelets(0, 2)
    with pytest.raises(ValueError):
        count_charm_bracelets(3, 0)
    with pytest.raises(ValueError):
        count_necklaces(0, 2)


def test_necklace_and_bracelet_counts():
    assert [count_necklaces(n, 2) for n in range(1, 9)] == [2, 3, 4, 6, 8, 14, 20, 36]
    assert [count_bracelets(n, 2) for n in range(1, 9)] == [2, 3, 4, 6, 8, 13, 18, 30]


@pytest.mark.parametrize("n, k", [(n, k) for k in (2, 3) for n in range(1, 11)] + [(n, 4) for n in range(1, 8)])
def test_formula_matches_generation(n, k):
    assert count_charm_bracelets(n, k) == generate_charm_bracelets(n, k)


@pytest.mark.parametrize("n, k", [(n, k) for k in (2, 3) for n in range(1, 9)])
def test_burnside_counts_match_generation(n, k):
    assert count_necklaces(n, k) == generate_necklaces(n, k)
    assert count_bracelets(n, k) == generate_bracelets(n, k)


def test_counts_are_ordered():
    for k in (2, 3, 4, 5):
        for n in range(1, 16):
            assert count_charm_bracelets(n, k) <= count_bracelets(n, k) <= count_necklaces(n, k)


def test_counts_grow_with_alphabet():
    for n in range(1, 16):
        for k in range(1, 7):
            assert count_charm_bracelets(n, k) <= count_charm_bracelets(n, k + 1)


@pytest.mark.parametrize("n, k", [(n, k) for k in (5, 6) for n in range(1, 6)])
def test_larger_alphabets_match_brute_force(n, k):
    assert count_charm_bracelets(n, k) == orbit_classes(n, k, charm_orbit)
