from itertools import product

import pytest

from corpus import B2, B4, G3, L3, T1, a, b, basic_upto, upto
from pseudohoop.enumeration import are_isomorphic
from pseudohoop.errors import ContractError, InapplicableError
from pseudohoop.filters import (
    PRIME_CONDITIONS,
    Filter,
    all_filters,
    class_structure,
    filter_join,
    filter_lattice,
    generated_filter,
    has_strong_unit,
    is_filter,
    is_lattice_ideal,
    is_normal_filter,
    is_prime,
    maximal_filters,
    minimal_primes,
    perp,
    prime_extension,
    prime_filters,
    prime_tests,
    principal_filter,
    quotient,
    values_of,
)


def sets(fs):
    return [set(F) for F in fs]


def F(M, *xs):
    return generated_filter(M, xs)


def test_all_filters_examples():
    assert sets(all_filters(T1)) == [{0}]
    assert sets(all_filters(L3)) == [{2}, {0, 1, 2}]
    assert sets(all_filters(G3)) == [{2}, {1, 2}, {0, 1, 2}]


def test_all_filters_matches_subset_scan():
    for M in upto(5):
        brute = sorted(bits for bits in range(1, 1 << M.size) if is_filter(M, bits))
        assert sorted(f.bits for f in all_filters(M)) == brute


def test_generated_filter_examples():
    assert set(F(G3, 2)) == {2}
    assert set(F(G3, a)) == {a, 2}
    assert set(F(L3, a)) == {0, 1, 2}
    assert set(principal_filter(L3, a, n=1)) == {a, 2}


def test_filter_lattice_examples():
    rep = filter_lattice(B4)
    fs = rep.filters
    ia, ib = fs.index(F(B4, a)), fs.index(F(B4, b))
    assert set(fs[rep.join[ia][ib]]) == {0, 1, 2, 3}
    assert set(fs[rep.meet[ia][ib]]) == {3}
    assert rep.distributive and rep.infinite_law
    t = filter_lattice(T1)
    assert len(t.filters) == 1 and t.distributive
    g = filter_lattice(G3)
    assert len(g.filters) == 3 and g.distributive


def test_normal_filters():
    for M in upto(5):
        if M.flags.commutative:
            assert all(is_normal_filter(M, G) for G in all_filters(M))
    assert is_normal_filter(G3, F(G3, a))
    assert is_normal_filter(B4, F(B4, 3))


def test_quotient_examples():
    for M in (G3, L3, B4):
        Q, _ = quotient(M, F(M, M.unit))
        assert are_isomorphic(Q, M)
    Q, class_of = quotient(G3, F(G3, a))
    assert are_isomorphic(Q, B2)
    assert class_of[a] == class_of[2] != class_of[0]
    Q, _ = quotient(L3, F(L3, 0))
    assert are_isomorphic(Q, T1)


def test_class_structure_examples():
    qs = class_structure(G3, F(G3, 2), "right")
    assert all(len(c) == 1 for c in qs.classes)
    for x, y in product(G3.elements, repeat=2):
        assert qs.le(qs.class_of[x], qs.class_of[y]) == G3.le(x, y)

    qs = class_structure(B4, F(B4, a), "right")
    assert set(map(frozenset, qs.classes)) == {frozenset({a, 3}), frozenset({0, b})}
    assert qs.is_total()
    assert qs.le(qs.class_of[0], qs.class_of[a])

    qs = class_structure(G3, F(G3, a), "right")
    assert [set(qs.classes[c]) for c in qs.chain()] == [{0}, {a, 2}]


def test_prime_tests_examples():
    assert all(prime_tests(G3, F(G3, a)).conditions.values())
    rep = prime_tests(B4, F(B4, 3))
    assert not any(rep.conditions.values()) and rep.agree
    assert all(prime_tests(B4, F(B4, a)).conditions.values())
    assert set(rep.conditions) == set(PRIME_CONDITIONS)
    with pytest.raises(ContractError):
        prime_tests(B4, F(B4, 0))


def test_values_examples():
    [v] = values_of(B2, 0)
    assert set(v.value) == {1} and set(v.cover) == {0, 1}
    [v] = values_of(G3, 0)
    assert set(v.value) == {a, 2} and set(v.cover) == {0, a, 2}
    [v] = values_of(G3, a)
    assert set(v.value) == {2} and set(v.cover) == {a, 2}
    with pytest.raises(ContractError):
        values_of(G3, 2)


def test_values_are_maximal_omitting():
    for M in upto(5):
        fs = all_filters(M)
        for g in M.elements:
            if g == M.unit:
                continue
            omit = [G for G in fs if g not in G]
            best = {G.bits for G in omit if not any(G < H for H in omit)}
            assert {r.value.bits for r in values_of(M, g)} == best


def test_minimal_primes_examples():
    assert sets(minimal_primes(G3)) == [{2}]
    assert sorted(map(sorted, sets(minimal_primes(B4)))) == [[1, 3], [2, 3]]


def test_perp_examples():
    assert set(perp(G3, [])) == {0, a, 2}
    assert set(perp(G3, [a])) == {2}
    assert set(perp(B4, [a])) == {b, 3}


def test_perp_needs_basic():
    non_basic = [M for M in upto(5) if not M.flags.basic]
    assert non_basic
    with pytest.raises(InapplicableError) as info:
        perp(non_basic[0], [0])
    assert info.value.hypothesis == "basic"


def test_prime_extension_examples():
    assert set(prime_extension(B2, F(B2, 1), [0])) == {1}
    assert set(prime_extension(G3, F(G3, 2), [0])) == {a, 2}
    assert set(prime_extension(B4, F(B4, 3), [0, a])) == {b, 3}


def test_lattice_ideal():
    assert is_lattice_ideal(B4, [0, a])
    assert not is_lattice_ideal(B4, [a, b])
    assert not is_lattice_ideal(B4, [a])


def test_eq_41_and_42():
    for M in upto(5):
        for x, y in product(M.elements, repeat=2):
            Fx, Fy = F(M, x), F(M, y)
            assert F(M, M.prod[x][y]) == filter_join(Fx, Fy) == F(M, M.prod[y][x])
            j = M.join(x, y)
            if j is not None:
                assert F(M, j) == Fx & Fy


def test_prime_classes_are_chains_and_primes_form_root_system():
    for M in basic_upto(5):
        primes = prime_filters(M)
        for P in primes:
            assert class_structure(M, P, "right").is_total()
            above = [Q for Q in primes if P <= Q]
            assert all(Q <= R or R <= Q for Q in above for R in above)


def test_maximal_filters_are_prime():
    for M in basic_upto(5):
        for P in maximal_filters(M):
            assert is_prime(M, P)


def test_strong_unit():
    assert has_strong_unit(L3, a)
    assert not has_strong_unit(G3, a)
    assert has_strong_unit(G3, 0)


def test_filter_is_value_object():
    G = F(B4, a)
    assert G == Filter(G.bits, B4) and len(G) == 2 and G.proper
