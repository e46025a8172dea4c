"""Representation of a finite basic pseudo hoop by monotone maps of a chain.

For each non-unit ``g`` (in index order) we fix the first value ``V_g`` and
take the right classes of ``V_g``, which form a chain. Stacking these chains
segment by segment gives the chain Ω. Points are numbered ``0 .. |Ω|-1`` in
chain order, so a map on Ω is a tuple of point indices. Maps act on the
right: composing ``f`` then ``g`` applies ``f`` first.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .core import FiniteHoop, make_hoop
from .errors import InapplicableError, InconsistencyError, InputError
from .filters import Filter, class_structure, values_of

MapT = tuple[int, ...]


@dataclass(frozen=True)
class Segment:
    g: int
    value: Filter
    classes: tuple[frozenset[int], ...]  # upward in the class order


@dataclass(frozen=True)
class OmegaChain:
    segments: tuple[Segment, ...]
    points: tuple[tuple[int, int], ...]  # global index -> (segment id, class id)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Representation:
    algebra: FiniteHoop
    omega: OmegaChain
    maps: tuple[MapT, ...]       # maps[a] is f0(a)
    residuals: tuple[MapT, ...]  # residuals[a] is the residual of f0(a)


def compose(f: MapT, g: MapT) -> MapT:
    """Apply ``f`` first, then ``g``."""
    return tuple(g[w] for w in f)


def pointwise_le(f: MapT, g: MapT) -> bool:
    return all(a <= b for a, b in zip(f, g))


def build_representation(M: FiniteHoop) -> Representation:
    if not M.flags.basic:
        raise InapplicableError("the representation needs a basic pseudo hoop", "basic")
    segments = []
    points = []
    point_of: list[dict[int, int]] = []  # per segment: element -> global point index
    for g in M.elements:
        if g == M.unit:
            continue
        V = values_of(M, g)[0].value
        qs = class_structure(M, V, "right")
        if not qs.is_total():
            raise InconsistencyError(f"classes of the value {V} of {g} are not a chain")
        chain = qs.chain()
        sid = len(segments)
        segments.append(Segment(g, V, tuple(qs.classes[c] for c in chain)))
        base = len(points)
        rank = {c: base + i for i, c in enumerate(chain)}
        points.extend((sid, i) for i in range(len(chain)))
        point_of.append({x: rank[qs.class_of[x]] for x in M.elements})

    def induced(op) -> tuple[MapT, ...]:
        out = []
        for a in M.elements:
            img = [-1] * len(points)
            for seg in point_of:
                for x, p in seg.items():
                    q = seg[op(x, a)]
                    if img[p] not in (-1, q):
                        raise InconsistencyError(f"map for element {a} is not well defined on classes")
                    img[p] = q
            out.append(tuple(img))
        return tuple(out)

    maps = induced(lambda x, a: M.prod[x][a])
    residuals = induced(lambda x, a: M.rimp[a][x])
    return Representation(M, OmegaChain(tuple(segments), tuple(points)), maps, residuals)


@dataclass
class RepresentationReport:
    passed: bool
    checks: dict  # property name -> bool
    failures: list  # (property, witness)


def _residual_of(f: MapT) -> MapT | None:
    """The map ``y -> max{x : f(x) <= y}`` when every such set is non-empty."""
    out = []
    for y in range(len(f)):
        xs = [x for x in range(len(f)) if f[x] <= y]
        if not xs:
            return None
        out.append(max(xs))
    return tuple(out)


def _monotone_maps(m: int):
    for combo in combinations_with_replacement(range(m), m):
        yield combo


def verify_representation(R: Representation, exhaustive_limit: int = 6) -> RepresentationReport:
    """Check the homomorphism, embedding and residuation properties pointwise.

    Uniqueness of the residual is tested by exhausting all monotone maps when
    Ω has at most ``exhaustive_limit`` points, and by the closed form
    ``max{x : f(x) ≤ y}`` otherwise.
    """
    M, maps, res = R.algebra, R.maps, R.residuals
    m = len(R.omega)
    ident = tuple(range(m))
    seg = [s for s, _ in R.omega.points]
    failures: list = []

    def fail(prop, witness):
        failures.append((prop, witness))

    if maps[M.unit] != ident:
        fail("identity", (M.unit,))
    for a in M.elements:
        f = maps[a]
        if any(f[i] > f[j] for i in range(m) for j in range(i + 1, m)):
            fail("monotone", (a,))
        if any(seg[f[w]] != seg[w] for w in range(m)):
            fail("segments", (a,))
    for a, b in product(M.elements, repeat=2):
        if pointwise_le(maps[a], maps[b]) != M.le(a, b):
            fail("embedding", (a, b))
        if compose(maps[a], maps[b]) != maps[M.prod[a][b]]:
            fail("composition", (a, b))
        j = M.join(a, b)
        if j is None or maps[j] != tuple(map(max, maps[a], maps[b])):
            fail("join", (a, b))
        if maps[M.meet(a, b)] != tuple(map(min, maps[a], maps[b])):
            fail("meet", (a, b))
    if len(set(maps)) != M.size:
        fail("injective", ())

    for a in M.elements:
        f, fs = maps[a], res[a]
        for x, y in product(range(m), repeat=2):
            if (f[x] <= y) != (x <= fs[y]):
                fail("adjunction", (a, x, y))
                break
        if not pointwise_le(ident, compose(f, fs)):
            fail("unit_law", (a,))
        if not pointwise_le(compose(fs, f), ident):
            fail("counit_law", (a,))
        if compose(compose(f, fs), f) != f:
            fail("triangle", (a,))
        if compose(compose(fs, f), fs) != fs:
            fail("triangle_residual", (a,))
        if _residual_of(f) != fs:
            fail("residual_closed_form", (a,))
        if m <= exhaustive_limit:
            found = [g for g in _monotone_maps(m)
                     if all((f[x] <= y) == (x <= g[y]) for x, y in product(range(m), repeat=2))]
            if found != [fs]:
                fail("residual_unique", (a, len(found)))

    # transport the tables through f0 and compare with M
    back = {f: a for a, f in enumerate(maps)}
    try:
        prod = [[back[compose(maps[a], maps[b])] for b in M.elements] for a in M.elements]
        T = make_hoop(M.size, back[ident], prod, M.rimp, M.limp)
        if T.prod != M.prod:
            fail("transport", ())
    except (KeyError, ValueError) as exc:
        fail("transport", (str(exc),))

    names = ["identity", "monotone", "segments", "embedding", "composition", "join", "meet",
             "injective", "adjunction", "unit_law", "counit_law", "triangle", "triangle_residual",
             "residual_closed_form", "residual_unique", "transport"]
    failed = {p for p, _ in failures}
    checks = {n: n not in failed for n in names}
    return RepresentationReport(not failures, checks, failures)


def export_representation(R: Representation, fmt: str = "json", element: int | None = None) -> bytes:
    """Serialize ``R`` as JSON or as a Graphviz digraph.

    The dot output draws one cluster per segment with chain edges and the
    arrows of a single element's map (``element``, default the bottom).
    """
    M = R.algebra
    if fmt == "json":
        doc = {
            "size": M.size,
            "segments": [
                {"g": s.g, "value": sorted(s.value), "classes": [sorted(c) for c in s.classes]}
                for s in R.omega.segments
            ],
            "points": [list(p) for p in R.omega.points],
            "maps": [list(f) for f in R.maps],
            "residuals": [list(f) for f in R.residuals],
        }
        return (json.dumps(doc, sort_keys=True) + "\n").encode()
    if fmt == "dot":
        a = (M.zero if M.zero is not None else 0) if element is None else element
        lines = ["digraph omega {", "  rankdir=BT;"]
        for sid, s in enumerate(R.omega.segments):
            lines.append(f"  subgraph cluster_{sid} {{")
            lines.append(f'    label="g={s.g}";')
            pts = [i for i, (ps, _) in enumerate(R.omega.points) if ps == sid]
            for i in pts:
                cls = ",".join(map(str, sorted(s.classes[R.omega.points[i][1]])))
                lines.append(f'    p{i} [label="{{{cls}}}"];')
            for i, j in zip(pts, pts[1:]):
                lines.append(f"    p{i} -> p{j};")
            lines.append("  }")
        if R.omega.points:
            for w, v in enumerate(R.maps[a]):
                lines.append(f'  p{w} -> p{v} [style=dashed, label="f({a})"];')
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    raise InputError(f"unknown export format {fmt!r}", "format")
