import random
from collections import Counter

import pytest

from corpus import B2, B4, FROZEN_COUNTS, G3, L3, T1, hoops
from oracles import brute_force_hoops, brute_iso_classes
from pseudohoop.cones import ordinal_sum
from pseudohoop.enumeration import (
    EnumOptions,
    are_isomorphic,
    canonical_form,
    enumerate_hoops,
    from_key,
    key_hash,
    lattices_up_to_iso,
)
from pseudohoop.errors import InputError


@pytest.mark.parametrize("size", [1, 2, 3, 4, 5])
def test_counts_match_frozen(size):
    assert len(hoops(size)) == FROZEN_COUNTS[size]


@pytest.mark.parametrize("size", [1, 2, 3, 4])
def test_counts_match_oracle(size):
    found = brute_force_hoops(size)
    assert brute_iso_classes(found) == len(hoops(size))
    # every brute-force algebra is isomorphic to exactly one emitted one
    for M in found:
        assert sum(are_isomorphic(M, N) for N in hoops(size)) == 1


def test_size_three_is_the_two_chains():
    assert {canonical_form(M) for M in hoops(3)} == {canonical_form(G3), canonical_form(L3)}


def test_up_to_iso_false_buckets_into_classes():
    for size in (3, 4, 5):
        labeled = list(enumerate_hoops(EnumOptions(size, up_to_iso=False)))
        keys = Counter(canonical_form(M) for M in labeled)
        assert set(keys) == {canonical_form(M) for M in hoops(size)}
        assert len(labeled) >= len(hoops(size))


def test_restrict_flags():
    basic = list(enumerate_hoops(EnumOptions(5, restrict=frozenset({"basic"}))))
    assert len(basic) == 9
    assert all(M.flags.basic for M in basic)
    with pytest.raises(InputError):
        EnumOptions(3, restrict=frozenset({"shiny"}))


def test_limit():
    assert len(list(enumerate_hoops(EnumOptions(5, limit=3)))) == 3


def test_output_is_sorted_and_deterministic():
    first = [canonical_form(M) for M in enumerate_hoops(EnumOptions(5))]
    assert first == sorted(first)
    assert first == [canonical_form(M) for M in enumerate_hoops(EnumOptions(5))]


def test_canonical_form_is_relabeling_invariant():
    rng = random.Random(7)
    for M in (B4, ordinal_sum(L3, B2), *hoops(5)):
        key = canonical_form(M)
        for _ in range(10):
            perm = list(range(M.size))
            rng.shuffle(perm)
            N = M.relabel(perm)
            assert canonical_form(N) == key
            assert are_isomorphic(M, N)


def test_from_key_round_trip():
    for M in hoops(4):
        key = canonical_form(M)
        assert canonical_form(from_key(key)) == key
        assert len(key_hash(key)) == 16


def test_non_isomorphic():
    assert not are_isomorphic(G3, L3)
    assert not are_isomorphic(T1, B2)
    assert are_isomorphic(ordinal_sum(B2, B2), G3)


def test_lattice_counts():
    assert [len(lattices_up_to_iso(n)) for n in range(1, 6)] == [1, 1, 1, 2, 5]
