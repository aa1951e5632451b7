import math
import random
from itertools import combinations_with_replacement

import pytest

from mcycles.core import (
    MULTISET,
    SUBSET,
    DifferenceClass,
    Form,
    Multiset,
    Pattern,
    class_of,
    enumerate_classes,
    expected_length,
    form_of,
    has_bad_pattern,
    is_cyclic_equivalent,
    necessary_condition,
    pattern_of,
    shift_down,
    shift_up,
)


def test_form_of_worked_examples():
    assert form_of(Multiset((1, 2, 2, 3), 7)).diffs == (1, 0, 1, 5)
    assert form_of(Multiset((1, 1, 1), 5)).diffs == (0, 0, 5)
    f = form_of(Multiset((1, 1, 11, 21, 21), 30))
    assert f.diffs == (0, 10, 10, 0, 10)
    assert is_cyclic_equivalent(f, Form((10, 10, 0, 10, 0), 30))


def test_form_sum_is_n_for_random_multisets():
    rng = random.Random(20240229)
    for _ in range(100_000):
        n = rng.randint(1, 40)
        t = rng.randint(1, 8)
        elements = tuple(sorted(rng.randint(1, n) for _ in range(t)))
        f = form_of(Multiset(elements, n))
        assert sum(f.diffs) == n


def test_form_invariants_enforced():
    with pytest.raises(ValueError):
        Form((1, 0), 7)  # does not sum to 7
    with pytest.raises(ValueError):
        Form((0, 7), 7, SUBSET)  # subset interiors must be positive
    with pytest.raises(ValueError):
        Form((7, 0), 7)  # final coordinate must be 1..n


def test_cyclic_equivalence():
    f = Form((0, 10, 10, 0, 10), 30)
    g = Form((10, 10, 0, 10, 0), 30)
    assert is_cyclic_equivalent(f, g)
    assert is_cyclic_equivalent(f, f)
    a = Form((1, 0, 1, 5), 7)
    b = Form((1, 1, 0, 5), 7)
    assert not is_cyclic_equivalent(a, b)
    with pytest.raises(ValueError):
        is_cyclic_equivalent(a, Form((1, 0, 1, 6), 8))


def test_class_of():
    assert class_of(Form((1, 0, 1, 5), 7)).parts == (5, 1, 1, 0)
    assert class_of(Form((10, 10, 0, 10, 0), 30)).parts == (10, 10, 10, 0, 0)
    assert class_of(Form((0, 0, 5), 5)).parts == (5, 0, 0)


def test_enumerate_classes_multiset():
    got = [c.parts for c in enumerate_classes(5, 3, MULTISET)]
    assert got == [(5, 0, 0), (4, 1, 0), (3, 2, 0), (3, 1, 1), (2, 2, 1)]


def test_enumerate_classes_subset():
    got = {c.parts for c in enumerate_classes(8, 3, SUBSET)}
    assert got == {(6, 1, 1), (4, 2, 2), (3, 3, 2), (5, 2, 1), (4, 3, 1)}


def test_enumerate_classes_edges():
    assert [c.parts for c in enumerate_classes(4, 1, MULTISET)] == [(4,)]
    assert enumerate_classes(2, 3, SUBSET) == []  # no partition of 2 into 3 parts
    # deterministic descending-lex order
    parts = [c.parts for c in enumerate_classes(9, 4, MULTISET)]
    assert parts == sorted(parts, reverse=True)


def test_classes_partition_forms():
    # every multiset's form lands in exactly one enumerated class
    for n, t in [(5, 3), (7, 4), (6, 3)]:
        classes = {c.parts for c in enumerate_classes(n, t, MULTISET)}
        seen = set()
        for elements in combinations_with_replacement(range(1, n + 1), t):
            c = class_of(form_of(Multiset(elements, n)))
            assert c.parts in classes
            seen.add(c.parts)
        assert seen == classes


def test_shift_invariance_of_forms():
    # adding 1 to every element (mod n, with n for 0) rotates the form
    rng = random.Random(7)
    for _ in range(500):
        n = rng.randint(2, 12)
        t = rng.randint(1, 6)
        elements = tuple(sorted(rng.randint(1, n) for _ in range(t)))
        shifted = tuple(sorted(e % n + 1 for e in elements))
        f = form_of(Multiset(elements, n))
        g = form_of(Multiset(shifted, n))
        assert is_cyclic_equivalent(f, g)


def test_pattern_of():
    assert pattern_of(DifferenceClass((10, 10, 10, 0, 0), 30)) == Pattern((3, 2))
    assert not Pattern((3, 2)).good
    assert pattern_of(DifferenceClass((6, 6, 6, 6, 6), 30)) == Pattern((5,))
    assert not Pattern((5,)).good
    assert pattern_of(DifferenceClass((5, 1, 1, 0), 7)) == Pattern((2, 1, 1))
    assert Pattern((2, 1, 1)).good


def test_shift_down_examples():
    c = shift_down(DifferenceClass((6, 1, 1), 8, SUBSET))
    assert (c.parts, c.n, c.kind) == ((5, 0, 0), 5, MULTISET)
    c = shift_down(DifferenceClass((5, 2, 1), 8, SUBSET))
    assert c.parts == (4, 1, 0)
    c = shift_down(DifferenceClass((8,), 8, SUBSET))
    assert (c.parts, c.n) == ((7,), 7)


def test_shift_down_bijection_preserves_patterns():
    for n, t in [(5, 3), (7, 3), (5, 4), (11, 6)]:
        subset_classes = enumerate_classes(n + t, t, SUBSET)
        multiset_classes = enumerate_classes(n, t, MULTISET)
        shifted = [shift_down(c) for c in subset_classes]
        assert {c.parts for c in shifted} == {c.parts for c in multiset_classes}
        for before, after in zip(subset_classes, shifted):
            assert pattern_of(before) == pattern_of(after)
            assert shift_up(after) == before


def test_necessary_condition_examples():
    assert necessary_condition(5, 3, MULTISET)          # C(7,3) = 35
    assert not necessary_condition(6, 3, MULTISET)
    assert all(necessary_condition(n, 1, MULTISET) for n in range(1, 20))
    assert not necessary_condition(3, 3, MULTISET)      # 3 does not divide 10


def test_necessary_condition_matches_direct_divisibility():
    for n in range(1, 65):
        for t in range(1, 9):
            assert necessary_condition(n, t, MULTISET) == (math.comb(n + t - 1, t) % n == 0)
            assert necessary_condition(n, t, SUBSET) == (math.comb(n, t) % n == 0)


def test_expected_length():
    assert expected_length(5, 3, MULTISET) == 35
    assert expected_length(8, 3, SUBSET) == 56


def test_bad_pattern_characterization_grid():
    # bad patterns are absent exactly for t in {3,4,6} with gcd(n,t)=1
    for t in range(3, 9):
        for n in range(t + 1, 31):
            expected_clean = t in (3, 4, 6) and math.gcd(n, t) == 1
            assert has_bad_pattern(n, t, MULTISET) == (not expected_clean), (n, t)


def test_multiset_validation():
    with pytest.raises(ValueError):
        Multiset((2, 1), 3)
    with pytest.raises(ValueError):
        Multiset((0, 1), 3)
    with pytest.raises(ValueError):
        Multiset((), 3)
    assert Multiset((1, 1, 3), 3).t == 3


def test_distinguished_must_be_unique():
    with pytest.raises(ValueError):
        DifferenceClass((4, 4, 0), 8, MULTISET, distinguished=4)
    c = DifferenceClass((4, 4, 0), 8, MULTISET, distinguished=0)
    assert c.distinguished == 0
