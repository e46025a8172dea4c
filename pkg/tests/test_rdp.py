from itertools import product

import pytest

from corpus import B2, B4, G3, L3, T1, a, b, extras, upto
from pseudohoop.errors import ContractError
from pseudohoop.filters import generated_filter
from pseudohoop.rdp import check_filter_products, rdp_witness, verify_rdp


def test_witness_examples():
    w = rdp_witness(T1, 0, 0, 0)
    assert (w.b_prime, w.c_prime) == (0, 0)
    w = rdp_witness(L3, 0, a, a)
    assert (w.b_prime, w.c_prime) == (a, a)
    w = rdp_witness(G3, a, a, a)
    assert (w.b_prime, w.c_prime) == (2, a)


def test_witness_precondition():
    with pytest.raises(ContractError):
        rdp_witness(L3, 0, 2, 2)


def test_witness_formula_is_pinned():
    for M in upto(4):
        R, L = M.rimp, M.limp
        for x, y, z in product(M.elements, repeat=3):
            if M.le(M.prod[y][z], x):
                w = rdp_witness(M, x, y, z)
                assert w.c_prime == L[R[z][x]][x]
                assert w.b_prime == R[w.c_prime][x]


def test_verify_examples():
    assert verify_rdp(T1).passed
    assert verify_rdp(G3).passed
    rep = verify_rdp(L3)
    assert rep.passed
    triples = [(x, y, z) for x, y, z in product(range(3), repeat=3) if L3.le(L3.prod[y][z], x)]
    assert rep.checked == len(triples) == 23
    # the triples with a top element below the unit number 14
    assert sum(1 for t in triples if t[0] != L3.unit) == 14


def test_verify_on_corpus():
    for M in upto(5) + extras():
        assert verify_rdp(M).passed


def test_filter_product_examples():
    assert check_filter_products(T1).passed
    Fa = generated_filter(L3, [a])
    assert {L3.prod[x][y] for x in Fa for y in Fa} == set(generated_filter(L3, [0])) == {0, 1, 2}
    Fa, Fb = generated_filter(B4, [a]), generated_filter(B4, [b])
    assert {B4.prod[x][y] for x in Fa for y in Fb} == set(generated_filter(B4, [0]))
    for M in (B2, G3, L3, B4):
        rep = check_filter_products(M)
        assert rep.passed and rep.principal_law and rep.filter_law
