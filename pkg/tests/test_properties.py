from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import hoops, upto
from pseudohoop import formats
from pseudohoop.cones import ConeModel, direct_product, make_chain, ordinal_sum
from pseudohoop.core import FiniteHoop, validate
from pseudohoop.enumeration import are_isomorphic, canonical_form
from pseudohoop.filters import all_filters, filter_join, generated_filter
from pseudohoop.rdp import verify_rdp

corpus = st.sampled_from(upto(5))
chains = st.builds(make_chain, st.sampled_from(["lukasiewicz", "godel"]), st.integers(1, 4))


@st.composite
def relabeled(draw):
    M = draw(corpus)
    perm = draw(st.permutations(list(range(M.size))))
    return M, M.relabel(perm)


@given(relabeled())
def test_relabeling_keeps_class(pair):
    M, N = pair
    assert canonical_form(M) == canonical_form(N)
    assert are_isomorphic(M, N)
    assert verify_rdp(N).passed


@given(chains, chains, st.booleans())
@settings(max_examples=40, deadline=None)
def test_constructions_are_pseudo_hoops(A, B, use_sum):
    M = ordinal_sum(A, B) if use_sum else direct_product(A, B)
    assert isinstance(validate(M.size, M.unit, M.prod, M.rimp, M.limp), FiniteHoop)
    assert verify_rdp(M).passed
    assert M.flags.basic


@given(st.lists(st.integers(0, 3), min_size=4, max_size=4))
def test_random_size_four_tables(cells):
    # 0 absorbing and 3 the unit; the 2x2 block in the middle is free
    prod = [[0, 0, 0, 0], [0, cells[0], cells[1], 1], [0, cells[2], cells[3], 2], [0, 1, 2, 3]]
    out = validate(4, 3, prod)
    if isinstance(out, FiniteHoop):
        assert sum(are_isomorphic(out, N) for N in hoops(4)) == 1


@given(corpus)
def test_serialization_round_trip(M):
    assert formats.loads(formats.dumps(M)) == M
    assert formats.loads(formats.to_text(M)) == M


@given(corpus, st.data())
def test_generated_filters_join(M, data):
    xs = data.draw(st.sets(st.sampled_from(list(M.elements)), max_size=3))
    G = generated_filter(M, xs)
    assert G in all_filters(M)
    for F in all_filters(M):
        J = filter_join(F, G)
        assert F <= J and G <= J


vec = st.tuples(st.integers(-30, 0), st.integers(-30, 0))


@given(st.sampled_from(["pointwise", "lex"]), vec, vec, vec)
def test_cone_residuation(mode, x, y, z):
    m = ConeModel(2, mode)
    assert m.le(m.mul(z, x), y) == m.le(z, m.rimp(x, y))
    assert m.le(m.mul(x, z), y) == m.le(z, m.limp(x, y))
    assert m.contains(m.rimp(x, y))


@given(corpus)
def test_order_is_lattice(M):
    for x, y in product(M.elements, repeat=2):
        assert M.join(x, y) is not None
