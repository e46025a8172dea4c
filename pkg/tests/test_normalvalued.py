from itertools import product

import pytest

from corpus import B4, G3, L3, T1, a, basic_upto, upto
from pseudohoop.core import power
from pseudohoop.errors import InapplicableError, InputError
from pseudohoop.filters import all_filters, is_normal_filter
from pseudohoop.normalvalued import (
    CLAIM_IDS,
    check_61,
    check_claim,
    conjugates,
    equational_basis_check,
    is_normal_valued_direct,
    k_sequence,
    normal_filter_by_conjugates,
    q2_search,
)


def test_k_sequence():
    assert k_sequence(5) == [1, 4, 10, 22, 46]


def test_conjugate_examples():
    for M in upto(4):
        for x in M.elements:
            assert conjugates(M, M.unit, x) == (x, x)
    assert conjugates(G3, a, 0)[0] == 0
    assert conjugates(L3, a, a)[0] == a


def test_direct_examples():
    assert is_normal_valued_direct(T1).holds
    assert is_normal_valued_direct(G3).holds
    assert is_normal_valued_direct(L3).holds


def test_direct_needs_basic():
    M = next(M for M in upto(5) if not M.flags.basic)
    with pytest.raises(InapplicableError):
        is_normal_valued_direct(M)


def test_basis_examples():
    for M in (T1, G3, L3, B4):
        assert check_61(M) and equational_basis_check(M)
    assert power(L3, a, 2) == 0 and L3.prod[a][a] == 0


def test_claim_examples():
    rep = check_claim(L3, "EQ62")
    assert rep.status == "pass" and rep.anchor
    assert check_claim(G3, "LEMMA46").status == "pass"
    for M in upto(5):
        if M.flags.bounded and M.flags.commutative:
            assert check_claim(M, "EQ63").status == "pass"
    assert check_claim(L3, "LEMMA611").status == "pass"


def test_unknown_claim():
    with pytest.raises(InputError):
        check_claim(L3, "THM99")


def test_inapplicable_claims_name_hypothesis():
    M = next(M for M in upto(5) if not M.flags.basic)
    rep = check_claim(M, "PROP43")
    assert rep.status == "inapplicable" and rep.hypothesis == "basic"
    rep = check_claim(G3, "LEMMA63")
    assert rep.status == "pass" or rep.hypothesis == "strong_unit"


@pytest.mark.parametrize("claim", [c for c in CLAIM_IDS if c != "CONJSUB"])
def test_every_claim_on_corpus(claim):
    for M in upto(5):
        rep = check_claim(M, claim)
        assert rep.status in ("pass", "inapplicable"), (M, rep)


def test_normal_filter_criteria_agree():
    for M in upto(5):
        for F in all_filters(M):
            assert normal_filter_by_conjugates(M, F) == is_normal_filter(M, F)


def test_forward_direction():
    for M in basic_upto(5):
        if is_normal_valued_direct(M):
            assert check_61(M)


def test_conjugation_submultiplicative_as_stated_fails():
    # lambda_a(0 * 0) = a but lambda_a(0) * lambda_a(0) = a * a = 0
    rep = check_claim(L3, "CONJSUB")
    assert rep.status == "fail" and rep.witness == (a, 0, 0)
    assert conjugates(L3, a, 0) == (a, a)


def test_conjugation_supermultiplicative():
    for M in upto(5):
        P = M.prod
        for f, x, y in product(M.elements, repeat=3):
            l, r = conjugates(M, f, P[x][y])
            (lx, rx), (ly, ry) = conjugates(M, f, x), conjugates(M, f, y)
            assert M.le(P[lx][ly], l) and M.le(P[rx][ry], r)


def test_q2_examples():
    assert q2_search([T1]).candidates == []
    res = q2_search(upto(3))
    assert res.candidates == [] and res.inconsistencies == []
    res = q2_search([L3, G3, B4])
    assert res.candidates == [] and res.basic_checked == 3
