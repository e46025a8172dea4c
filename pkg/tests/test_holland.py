import json

import pytest

from corpus import B2, B4, G3, T1, a, basic_upto, upto
from pseudohoop.errors import InapplicableError, InputError
from pseudohoop.holland import (
    build_representation,
    compose,
    export_representation,
    verify_representation,
)


def test_trivial():
    R = build_representation(T1)
    assert len(R.omega) == 0 and R.maps == ((),)
    assert verify_representation(R).passed
    assert json.loads(export_representation(R))["segments"] == []


def test_boolean_pair():
    R = build_representation(B2)
    assert len(R.omega.segments) == 1 and len(R.omega) == 2
    f = R.maps[0]
    # point 0 is the class of 0
    assert R.omega.segments[0].classes[0] == {0}
    assert f == (0, 0)


def test_goedel_segments():
    R = build_representation(G3)
    segs = R.omega.segments
    assert [s.g for s in segs] == [0, a]
    assert [len(s.classes) for s in segs] == [2, 3]
    assert [set(c) for c in segs[0].classes] == [{0}, {a, 2}]
    # on the g = a segment (points 2, 3, 4 for 0, a, 1) the map of a sends 0->0, a->a, 1->a
    assert R.maps[a][2:] == (2, 3, 3)
    doc = json.loads(export_representation(R, "json"))
    assert [len(s["classes"]) for s in doc["segments"]] == [2, 3]


def test_verify_examples():
    for M in (G3, B4):
        rep = verify_representation(build_representation(M))
        assert rep.passed, rep.failures
    assert len(build_representation(B4).omega.segments) == 3


def test_dot_export():
    out = export_representation(build_representation(B2), "dot").decode()
    assert out.startswith("digraph") and "p0 -> p1;" in out
    with pytest.raises(InputError):
        export_representation(build_representation(B2), "svg")


def test_needs_basic():
    M = next(M for M in upto(5) if not M.flags.basic)
    with pytest.raises(InapplicableError):
        build_representation(M)


def test_all_basic_up_to_five():
    for M in basic_upto(5):
        rep = verify_representation(build_representation(M))
        assert rep.passed, (M, rep.failures)
        assert all(rep.checks.values())


def test_composition_is_diagrammatic():
    f, g = (1, 1, 2), (0, 2, 2)
    assert compose(f, g) == (2, 2, 2)
    assert compose(g, f) == (1, 2, 2)
