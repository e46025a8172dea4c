"""Constructions: finite chains, direct products, ordinal sums and ℤ^k cones.

The finite constructions return validated :class:`FiniteHoop` objects. The
negative cones of ℤ^k are infinite and handled symbolically; their
properties are probed by a seeded sampler.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

from .core import FiniteHoop, make_hoop

# ---------------------------------------------------------------------------
# finite chains
# ---------------------------------------------------------------------------


def make_chain(kind: str, n: int) -> FiniteHoop:
    """The ``n``-element Łukasiewicz or Gödel chain.

    Index ``i`` is the ``i``-th element from the bottom; the unit is ``n-1``.
    The Łukasiewicz chain is the integer interval ``[-(n-1), 0]`` with
    truncated addition.
    """
    if n < 1:
        raise ValueError("chain length must be at least 1")
    r = range(n)
    if kind == "lukasiewicz":
        u = n - 1
        # index i <-> integer i - u
        prod = [[max(x + y - u, 0) for y in r] for x in r]
        rimp = [[min(y - x, 0) + u for y in r] for x in r]
        name = f"L{n}"
    elif kind == "godel":
        prod = [[min(x, y) for y in r] for x in r]
        rimp = [[n - 1 if x <= y else y for y in r] for x in r]
        name = f"G{n}"
    else:
        raise ValueError(f"unknown chain kind {kind!r}")
    return make_hoop(n, n - 1, prod, rimp, rimp, zero=0, name="T1" if n == 1 else name)


def direct_product(A: FiniteHoop, B: FiniteHoop) -> FiniteHoop:
    """Componentwise product; the pair ``(a, b)`` has index ``a * |B| + b``."""
    m = B.size
    pairs = list(product(A.elements, B.elements))

    def table(ta, tb):
        return [[ta[a][c] * m + tb[b][d] for (c, d) in pairs] for (a, b) in pairs]

    zero = None if A.zero is None or B.zero is None else A.zero * m + B.zero
    name = f"{A.name}x{B.name}" if A.name and B.name else None
    return make_hoop(A.size * m, A.unit * m + B.unit, table(A.prod, B.prod),
                     table(A.rimp, B.rimp), table(A.limp, B.limp), zero=zero, name=name)


def ordinal_sum(M0: FiniteHoop, M1: FiniteHoop) -> FiniteHoop:
    """Stack ``M0`` below ``M1``, gluing their units.

    Carrier: the non-unit elements of ``M0`` (in index order), then those of
    ``M1``, then the shared unit. Products across components return the lower
    factor; ``x → y`` and ``x ⇝ y`` with ``x`` in the upper component and
    ``y`` in the lower one return ``y``.
    """
    low = [x for x in M0.elements if x != M0.unit]
    high = [x for x in M1.elements if x != M1.unit]
    n = len(low) + len(high) + 1
    unit = n - 1
    # new index -> (component, old index)
    where = [(0, x) for x in low] + [(1, x) for x in high] + [(2, None)]
    index = {(0, x): i for i, x in enumerate(low)}
    index.update({(1, x): len(low) + i for i, x in enumerate(high)})

    def embed(comp: int, v: int) -> int:
        M = M0 if comp == 0 else M1
        return unit if v == M.unit else index[(comp, v)]

    def op(inner: str, cross_down: Callable[[int, int], int]) -> list[list[int]]:
        t = [[0] * n for _ in range(n)]
        for i, j in product(range(n), repeat=2):
            (ci, xi), (cj, xj) = where[i], where[j]
            if ci == 2 or cj == 2:
                # one argument is the unit
                if inner == "prod":
                    t[i][j] = j if ci == 2 else i
                else:
                    t[i][j] = j if ci == 2 else unit
            elif ci == cj:
                M = M0 if ci == 0 else M1
                t[i][j] = embed(ci, getattr(M, inner)[xi][xj])
            else:
                t[i][j] = cross_down(i, j) if ci > cj else (
                    i if inner == "prod" else unit)
        return t

    prod = op("prod", lambda i, j: j)
    rimp = op("rimp", lambda i, j: j)
    limp = op("limp", lambda i, j: j)
    zero = 0 if low else (len(low) if high else None)
    name = f"{M0.name}+{M1.name}" if M0.name and M1.name else None
    return make_hoop(n, unit, prod, rimp, limp, zero=zero if n > 1 else 0, name=name)


def trivial() -> FiniteHoop:
    return make_chain("lukasiewicz", 1)


def named(name: str) -> FiniteHoop:
    """The small algebras used throughout the docs and tests.

    ``T1``, ``B2``, ``G3``, ``L3`` (Łukasiewicz), ``B4`` (= B2 × B2, atoms 1
    and 2), plus ``Ln``/``Gn`` for any chain length.
    """
    if name == "T1":
        return make_chain("lukasiewicz", 1)
    if name == "B2":
        return make_chain("lukasiewicz", 2)
    if name == "B4":
        B2 = make_chain("lukasiewicz", 2)
        M = direct_product(B2, B2)
        return FiniteHoop(M.size, M.unit, M.prod, M.rimp, M.limp, M.zero, "B4")
    if name[:1] in ("L", "G") and name[1:].isdigit():
        return make_chain("lukasiewicz" if name[0] == "L" else "godel", int(name[1:]))
    raise ValueError(f"unknown algebra name {name!r}")


# ---------------------------------------------------------------------------
# negative cones of Z^k
# ---------------------------------------------------------------------------

Vec = tuple[int, ...]


@dataclass(frozen=True)
class ConeModel:
    """Negative cone of ℤ^k ordered coordinatewise or lexicographically."""

    k: int
    order_mode: str = "pointwise"

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("dimension must be at least 1")
        if self.order_mode not in ("pointwise", "lex"):
            raise ValueError(f"unknown order mode {self.order_mode!r}")

    @property
    def e(self) -> Vec:
        return (0,) * self.k

    def le(self, x: Vec, y: Vec) -> bool:
        if self.order_mode == "lex":
            return x <= y  # tuple comparison is lexicographic
        return all(a <= b for a, b in zip(x, y))

    def meet(self, x: Vec, y: Vec) -> Vec:
        if self.order_mode == "lex":
            return min(x, y)
        return tuple(min(a, b) for a, b in zip(x, y))

    def join(self, x: Vec, y: Vec) -> Vec:
        if self.order_mode == "lex":
            return max(x, y)
        return tuple(max(a, b) for a, b in zip(x, y))

    def contains(self, x: Vec) -> bool:
        return len(x) == self.k and self.le(x, self.e)

    def mul(self, x: Vec, y: Vec) -> Vec:
        return tuple(a + b for a, b in zip(x, y))

    def rimp(self, x: Vec, y: Vec) -> Vec:
        return self.meet(tuple(b - a for a, b in zip(x, y)), self.e)

    # the group is abelian, so both residuals coincide
    limp = rimp

    def power(self, x: Vec, n: int) -> Vec:
        return tuple(n * a for a in x)


@dataclass(frozen=True)
class ConeOps:
    prod: Vec
    rimp: Vec
    limp: Vec
    meet: Vec


def cone_ops(model: ConeModel, x: Vec, y: Vec) -> ConeOps:
    if not (model.contains(x) and model.contains(y)):
        raise ValueError(f"{x} or {y} is not in the negative cone")
    return ConeOps(model.mul(x, y), model.rimp(x, y), model.limp(x, y), model.meet(x, y))


class Lcg64:
    """64-bit linear congruential generator.

    ``state = state * 6364136223846793005 + 1442695040888963407 (mod 2**64)``
    (Knuth's MMIX constants); outputs are the high 32 bits of the new state.
    The seed-to-sample mapping is part of the public contract.
    """

    A = 6364136223846793005
    C = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next32(self) -> int:
        self.state = (self.state * self.A + self.C) & self.MASK
        return self.state >> 32

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` by rejection."""
        limit = (1 << 32) - (1 << 32) % n
        while True:
            v = self.next32()
            if v < limit:
                return v % n

    def between(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)


def trial_seed(seed: int, trial: int) -> int:
    """Per-trial seed so trials can run in any order."""
    g = Lcg64(seed ^ (trial * 0x9E3779B97F4A7C15))
    g.next32()
    return g.state


SAMPLED_PROPERTIES = ("EQ61", "THM66ii", "THM66iii", "EQ63", "EQ64", "PROP31",
                      "prelinearity", "residuation")


@dataclass
class SampleReport:
    property: str
    trials: int
    passes: int
    status: str  # "pass" | "fail" | "inapplicable"
    counterexample: tuple | None = None
    hypothesis: str | None = None


def _draw(model: ConeModel, rng: Lcg64, lo: int, hi: int) -> Vec:
    while True:
        v = tuple(rng.between(lo, hi) for _ in range(model.k))
        if model.contains(v):
            return v


def _check(model: ConeModel, prop: str, x: Vec, y: Vec, z: Vec, n: int) -> bool:
    le, mul, R, L, pw = model.le, model.mul, model.rimp, model.limp, model.power
    if prop == "EQ61":
        return le(mul(pw(x, 2), pw(y, 2)), mul(y, x))
    if prop == "THM66ii":
        lhs = pw(L(pw(R(x, y), n), y), 2)
        return le(lhs, R(pw(L(x, y), 2 * n), y))
    if prop == "THM66iii":
        lhs = pw(R(pw(L(x, y), n), y), 2)
        return le(lhs, L(pw(R(x, y), 2 * n), y))
    if prop == "EQ64":
        return L(R(x, y), y) == R(L(x, y), y)
    if prop == "PROP31":
        m = model.meet
        return (mul(z, m(x, y)) == m(mul(z, x), mul(z, y))
                and mul(m(x, y), z) == m(mul(x, z), mul(y, z)))
    if prop == "prelinearity":
        e = model.e
        return model.join(R(x, y), R(y, x)) == e and model.join(L(x, y), L(y, x)) == e
    if prop == "residuation":
        return (le(mul(z, x), y) == le(z, R(x, y))
                and le(mul(x, z), y) == le(z, L(x, y)))
    raise ValueError(f"unknown property {prop!r}")


def sample_check(model: ConeModel, prop: str, trials: int = 1000, box: int | tuple[int, int] = 20,
                 seed: int = 0, nmax: int = 8) -> SampleReport:
    """Evaluate ``prop`` on seeded random elements of the cone.

    ``box`` is either a bound ``B`` (coordinates drawn from ``[-B, 0]``) or an
    explicit ``(lo, hi)`` range; draws outside the cone are rejected. Powers
    in the two-arrow inequalities range over ``1..nmax``. Abelian cones are
    representable, so any counterexample is an inconsistency.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if prop not in SAMPLED_PROPERTIES:
        raise ValueError(f"unknown property {prop!r}")
    if prop == "EQ63":
        return SampleReport(prop, trials, 0, "inapplicable", hypothesis="bounded")
    lo, hi = (-box, 0) if isinstance(box, int) else box
    passes = 0
    for t in range(trials):
        rng = Lcg64(trial_seed(seed, t))
        x, y, z = (_draw(model, rng, lo, hi) for _ in range(3))
        n = rng.between(1, nmax)
        if _check(model, prop, x, y, z, n):
            passes += 1
        else:
            return SampleReport(prop, trials, passes, "fail", (t, x, y, z, n))
    return SampleReport(prop, trials, passes, "pass")
