"""Exhaustive generation of finite pseudo hoops, with isomorphism reduction.

The search runs order-first. Every finite pseudo hoop is a bounded lattice
whose top is the unit, so we list lattices on naturally labeled carriers
(``0`` is the bottom, ``size-1`` the top and ``x ≤ y`` implies ``x <= y``
numerically). For each lattice we fill the product table cell by cell. The
pruning uses integrality, monotonicity and associativity. Each complete
table is residuated under the lattice order and then validated.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable, Iterator

from .core import ClassFlags, FiniteHoop, derive_arrows, stab_index, validate
from .errors import InputError, ResiduationError


@dataclass(frozen=True)
class EnumOptions:
    size: int
    up_to_iso: bool = True
    restrict: frozenset[str] = frozenset()
    limit: int | None = None

    def __post_init__(self):
        if self.size < 1:
            raise InputError("size must be at least 1", "size")
        unknown = set(self.restrict) - set(ClassFlags.names())
        if unknown:
            raise InputError(f"unknown class flags: {sorted(unknown)}", "restrict")
        object.__setattr__(self, "restrict", frozenset(self.restrict))


# ---------------------------------------------------------------------------
# canonical forms and isomorphism
# ---------------------------------------------------------------------------

def _invariants(M: FiniteHoop) -> list[tuple]:
    below = [sum(M.leq[y][x] for y in M.elements) for x in M.elements]
    above = [sum(M.leq[x][y] for y in M.elements) for x in M.elements]
    return [(x == M.unit, below[x], above[x], M.prod[x][x] == x, stab_index(M, x),
             sorted(below[M.prod[x][y]] for y in M.elements))
            for x in M.elements]


def _serialize(M: FiniteHoop, perm: list[int], inv: list[int]) -> bytes:
    n = M.size
    out = bytearray([n])
    for t in (M.prod, M.rimp, M.limp):
        for i in range(n):
            row = t[inv[i]]
            out.extend(perm[row[inv[j]]] for j in range(n))
    return bytes(out)


def canonical_form(A: FiniteHoop) -> bytes:
    """Lexicographically least serialization over invariant-respecting relabelings.

    Elements are grouped by iso-invariant profiles; the groups get
    consecutive labels in sorted profile order (so the unit is always last
    and the bottom first), and the minimum is taken over all relabelings
    within groups. Equal keys iff the algebras are isomorphic.
    """
    inv_ = _invariants(A)
    order = sorted(A.elements, key=lambda x: inv_[x])
    groups: list[list[int]] = []
    for x in order:
        if groups and inv_[groups[-1][0]] == inv_[x]:
            groups[-1].append(x)
        else:
            groups.append([x])
    best = None
    for choice in product(*(permutations(g) for g in groups)):
        inv = [x for g in choice for x in g]  # new label -> old element
        perm = [0] * A.size
        for new, old in enumerate(inv):
            perm[old] = new
        s = _serialize(A, perm, inv)
        if best is None or s < best:
            best = s
    return best


def key_hash(key: bytes) -> str:
    return hashlib.sha256(key).hexdigest()[:16]


def are_isomorphic(A: FiniteHoop, B: FiniteHoop) -> bool:
    """Backtracking search for a bijection preserving ⊙, →, ⇝ and 1."""
    if A.size != B.size:
        return False
    inv_a = [(x == A.unit, sum(A.leq[y][x] for y in A.elements), sum(A.leq[x]), A.prod[x][x] == x)
             for x in A.elements]
    inv_b = [(x == B.unit, sum(B.leq[y][x] for y in B.elements), sum(B.leq[x]), B.prod[x][x] == x)
             for x in B.elements]
    if sorted(inv_a) != sorted(inv_b):
        return False
    n = A.size
    m = [-1] * n
    used = [False] * n
    order = [A.unit] + [x for x in A.elements if x != A.unit]
    tables = ((A.prod, B.prod), (A.rimp, B.rimp), (A.limp, B.limp))

    def consistent(done: list[int]) -> bool:
        for x in done:
            for y in done:
                for ta, tb in tables:
                    r, r2 = ta[x][y], tb[m[x]][m[y]]
                    if m[r] != -1:
                        if m[r] != r2:
                            return False
                    elif used[r2]:
                        return False
        return True

    def go(i: int) -> bool:
        if i == n:
            return True
        x = order[i]
        for y in B.elements:
            if used[y] or inv_b[y] != inv_a[x]:
                continue
            m[x], used[y] = y, True
            if consistent(order[:i + 1]) and go(i + 1):
                return True
            m[x], used[y] = -1, False
        return False

    return go(0)


# ---------------------------------------------------------------------------
# lattices
# ---------------------------------------------------------------------------

def natural_lattices(n: int) -> Iterator[tuple[tuple[bool, ...], ...]]:
    """All lattice orders on ``0..n-1`` with 0 bottom, n-1 top and natural labels."""
    if n == 1:
        yield ((True,),)
        return
    mid = range(1, n - 1)
    pairs = list(combinations(mid, 2))
    for mask in range(1 << len(pairs)):
        leq = [[x == y or x == 0 or y == n - 1 for y in range(n)] for x in range(n)]
        for b, (x, y) in enumerate(pairs):
            if mask >> b & 1:
                leq[x][y] = True
        if any(leq[x][y] and leq[y][z] and not leq[x][z]
               for x, y, z in product(range(n), repeat=3)):
            continue
        if all(_glb(leq, x, y) is not None for x, y in combinations(range(n), 2)):
            yield tuple(map(tuple, leq))


def _glb(leq, x: int, y: int) -> int | None:
    lower = [z for z in range(len(leq)) if leq[z][x] and leq[z][y]]
    for g in lower:
        if all(leq[z][g] for z in lower):
            return g
    return None


def _poset_key(leq) -> tuple:
    n = len(leq)
    best = None
    for p in permutations(range(1, n - 1)):
        perm = [0, *p, n - 1] if n > 1 else [0]
        key = tuple(leq[perm[i]][perm[j]] for i in range(n) for j in range(n))
        if best is None or key < best:
            best = key
    return best


def lattices_up_to_iso(n: int) -> list[tuple[tuple[bool, ...], ...]]:
    seen: dict[tuple, tuple] = {}
    for leq in natural_lattices(n):
        seen.setdefault(_poset_key(leq), leq)
    return [seen[k] for k in sorted(seen)]


# ---------------------------------------------------------------------------
# product tables on a fixed lattice
# ---------------------------------------------------------------------------

def _products_on(leq) -> Iterator[FiniteHoop]:
    n = len(leq)
    if n == 1:
        yield from _finish(1, [[0]], leq)
        return
    top = n - 1
    P = [[-1] * n for _ in range(n)]
    for x in range(n):
        P[0][x] = P[x][0] = 0
        P[top][x] = P[x][top] = x
    mid = list(range(1, top))
    cells = [(x, y) for x in mid for y in mid]
    glb = [[_glb(leq, x, y) for y in range(n)] for x in range(n)]
    domain = {(x, y): [z for z in range(n) if leq[z][glb[x][y]]] for x, y in cells}

    def monotone(x: int, y: int, v: int) -> bool:
        for x2 in mid:
            w = P[x2][y]
            if w >= 0 and x2 != x:
                if leq[x2][x] and not leq[w][v]:
                    return False
                if leq[x][x2] and not leq[v][w]:
                    return False
        for y2 in mid:
            w = P[x][y2]
            if w >= 0 and y2 != y:
                if leq[y2][y] and not leq[w][v]:
                    return False
                if leq[y][y2] and not leq[v][w]:
                    return False
        return True

    def assoc_ok(a: int, b: int, c: int) -> bool:
        ab, bc = P[a][b], P[b][c]
        if ab < 0 or bc < 0:
            return True
        l, r = P[ab][c], P[a][bc]
        return l < 0 or r < 0 or l == r

    def associative(x: int, y: int) -> bool:
        r = range(n)
        for c in r:
            if not assoc_ok(x, y, c):
                return False
        for a in r:
            if not assoc_ok(a, x, y):
                return False
        for a in r:
            for b in r:
                if P[a][b] == x and not assoc_ok(a, b, y):
                    return False
                if P[a][b] == y and not assoc_ok(x, a, b):
                    return False
        return True

    def fill(k: int) -> Iterator[FiniteHoop]:
        if k == len(cells):
            yield from _finish(n, P, leq)
            return
        x, y = cells[k]
        for v in domain[(x, y)]:
            P[x][y] = v
            if monotone(x, y, v) and associative(x, y):
                yield from fill(k + 1)
        P[x][y] = -1

    yield from fill(0)


def _finish(n: int, P, leq) -> Iterator[FiniteHoop]:
    prod = tuple(tuple(row) for row in P)
    try:
        rimp, limp = derive_arrows(n, n - 1, prod, leq)
    except ResiduationError:
        return
    M = validate(n, n - 1, prod, rimp, limp, zero=0)
    if isinstance(M, FiniteHoop):
        yield M


def _raw_search(size: int, up_to_iso: bool) -> Iterator[FiniteHoop]:
    lattices = lattices_up_to_iso(size) if up_to_iso else natural_lattices(size)
    for leq in lattices:
        yield from _products_on(leq)


def _passes(M: FiniteHoop, restrict: Iterable[str]) -> bool:
    flags = M.flags
    return all(getattr(flags, f) for f in restrict)


def enumerate_hoops(opts: EnumOptions) -> Iterator[FiniteHoop]:
    """Every pseudo hoop of ``opts.size`` elements whose flags include ``opts.restrict``.

    With ``up_to_iso`` exactly one representative per isomorphism class is
    emitted, relabeled to its canonical form. Without it, every table set
    found on a naturally labeled carrier is emitted (several per class).
    Output is sorted by canonical key, then by the tables themselves.
    """
    found: dict[bytes, FiniteHoop] = {}
    keyed: list[tuple[bytes, bytes, FiniteHoop]] = []
    for M in _raw_search(opts.size, opts.up_to_iso):
        key = canonical_form(M)
        if opts.up_to_iso:
            found.setdefault(key, M)
        else:
            keyed.append((key, _serialize(M, list(M.elements), list(M.elements)), M))
    if opts.up_to_iso:
        stream = [(k, from_key(k)) for k in sorted(found)]
    else:
        keyed.sort(key=lambda t: (t[0], t[1]))
        stream = [(k, M) for k, _, M in keyed]
    emitted = 0
    for _, M in stream:
        if opts.limit is not None and emitted >= opts.limit:
            return
        if _passes(M, opts.restrict):
            emitted += 1
            yield M


def from_key(key: bytes) -> FiniteHoop:
    """Rebuild the algebra whose canonical serialization is ``key``."""
    n = key[0]
    flat = list(key[1:])
    tabs = [tuple(tuple(flat[t * n * n + i * n: t * n * n + (i + 1) * n]) for i in range(n))
            for t in range(3)]
    M = validate(n, n - 1, tabs[0], tabs[1], tabs[2])
    assert isinstance(M, FiniteHoop), "canonical key does not decode to a pseudo hoop"
    return M


def all_hoops(max_size: int, restrict: Iterable[str] = ()) -> list[FiniteHoop]:
    """Isomorphism-class representatives of sizes ``1..max_size``."""
    out: list[FiniteHoop] = []
    for n in range(1, max_size + 1):
        out.extend(enumerate_hoops(EnumOptions(n, True, frozenset(restrict))))
    return out
