"""Filters of a finite pseudo hoop.

Filters are bit-sets over element indices (bit ``x`` set iff ``x`` belongs).
Everything here is exhaustive, so sizes stay small.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Iterator

from .core import FiniteHoop, nmax, power, validate
from .errors import ContractError, InapplicableError, InconsistencyError


@dataclass(frozen=True)
class Filter:
    bits: int
    algebra: FiniteHoop = field(compare=False, repr=False)

    def __contains__(self, x: int) -> bool:
        return bool(self.bits >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return (x for x in self.algebra.elements if self.bits >> x & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __le__(self, other: Filter) -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: Filter) -> bool:
        return self <= other and self.bits != other.bits

    @property
    def elements(self) -> frozenset[int]:
        return frozenset(self)

    @property
    def proper(self) -> bool:
        return self.bits != self.algebra.full_mask

    def __and__(self, other: Filter) -> Filter:
        return Filter(self.bits & other.bits, self.algebra)

    def __repr__(self) -> str:
        return f"Filter({sorted(self)})"


@dataclass(frozen=True)
class QuotientStructure:
    side: str
    classes: tuple[frozenset[int], ...]
    class_of: tuple[int, ...]
    order: tuple[tuple[bool, ...], ...]

    def le(self, i: int, j: int) -> bool:
        return self.order[i][j]

    def is_total(self) -> bool:
        k = len(self.classes)
        return all(self.order[i][j] or self.order[j][i] for i in range(k) for j in range(k))

    def chain(self) -> list[int]:
        """Class ids sorted upward; only meaningful when the order is total."""
        return sorted(range(len(self.classes)), key=lambda i: sum(self.order[j][i] for j in range(len(self.classes))))


@dataclass(frozen=True)
class ValueRecord:
    g: int
    value: Filter
    cover: Filter


PRIME_CONDITIONS = ("i", "ii", "iii", "iii'", "iv", "v", "vi", "vii", "viii")


@dataclass(frozen=True)
class PrimeReport:
    conditions: dict  # condition id -> bool, or None when inapplicable
    agree: bool

    @property
    def prime(self) -> bool:
        return bool(self.conditions["i"])


@dataclass
class LatticeReport:
    filters: list[Filter]
    join: list[list[int]]
    meet: list[list[int]]
    distributive: bool
    witness: tuple[int, int, int] | None
    infinite_law: bool
    family_witness: tuple | None


# ---------------------------------------------------------------------------
# generation
# ---------------------------------------------------------------------------

def _close(M: FiniteHoop, bits: int) -> int:
    bits |= 1 << M.unit
    while True:
        members = [x for x in M.elements if bits >> x & 1]
        new = bits
        for x in members:
            new |= M.up_mask[x]
            for y in members:
                new |= 1 << M.prod[x][y]
        if new == bits:
            return bits
        bits = new


def generated_filter(M: FiniteHoop, S: Iterable[int]) -> Filter:
    return Filter(_close(M, sum(1 << s for s in set(S))), M)


def principal_filter(M: FiniteHoop, a: int, n: int | None = None) -> Filter:
    """``{x : x ≥ a**k for some 1 <= k <= n}``, with ``n`` defaulting to the size."""
    bits = 0
    for k in range(1, nmax(M, n) + 1):
        bits |= M.up_mask[power(M, a, k)]
    return Filter(bits, M)


def is_filter(M: FiniteHoop, bits: int) -> bool:
    return _close(M, bits) == bits and bits >> M.unit & 1 == 1


def all_filters(M: FiniteHoop) -> list[Filter]:
    """Every filter of ``M`` ordered by bit-set value.

    Starts from the filters generated by single elements and closes the
    collection under joins.
    """
    found = {_close(M, 1 << a) for a in M.elements} | {_close(M, 0)}
    while True:
        extra = {_close(M, a | b) for a, b in combinations(sorted(found), 2)} - found
        if not extra:
            break
        found |= extra
    return [Filter(b, M) for b in sorted(found)]


def filter_join(F: Filter, G: Filter) -> Filter:
    return Filter(_close(F.algebra, F.bits | G.bits), F.algebra)


def filter_lattice(M: FiniteHoop, max_family: int = 16) -> LatticeReport:
    """Join/meet tables on all filters plus both distributive laws.

    The law for arbitrary families is exhausted over all subfamilies when
    there are at most ``max_family`` filters (always, for the sizes we
    enumerate).
    """
    fs = all_filters(M)
    idx = {F.bits: i for i, F in enumerate(fs)}
    k = len(fs)
    join = [[idx[_close(M, fs[i].bits | fs[j].bits)] for j in range(k)] for i in range(k)]
    meet = [[idx[fs[i].bits & fs[j].bits] for j in range(k)] for i in range(k)]
    witness = None
    for a, b, c in product(range(k), repeat=3):
        if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
            witness = (a, b, c)
            break
    family_witness = None
    if k <= max_family:
        for fam in range(1 << k):
            members = [i for i in range(k) if fam >> i & 1]
            union = 0
            for i in members:
                union |= fs[i].bits
            big = _close(M, union)
            for a in range(k):
                lhs = fs[a].bits & big
                rhs = _close(M, 0)
                for i in members:
                    rhs = _close(M, rhs | (fs[a].bits & fs[i].bits))
                if lhs != rhs:
                    family_witness = (a, tuple(members))
                    break
            if family_witness:
                break
    return LatticeReport(fs, join, meet, witness is None, witness,
                         family_witness is None, family_witness)


# ---------------------------------------------------------------------------
# normality and quotients
# ---------------------------------------------------------------------------

def is_normal_filter(M: FiniteHoop, F: Filter) -> bool:
    """Checks both ``a ⊙ F = F ⊙ a`` and ``x → y ∈ F ⇔ x ⇝ y ∈ F``."""
    by_translation = all({M.prod[a][h] for h in F} == {M.prod[h][a] for h in F}
                         for a in M.elements)
    by_arrows = all((M.rimp[x][y] in F) == (M.limp[x][y] in F)
                    for x, y in product(M.elements, repeat=2))
    if by_translation != by_arrows:
        raise InconsistencyError(f"normality tests disagree on {F}")
    return by_arrows


def class_structure(M: FiniteHoop, F: Filter, side: str = "right") -> QuotientStructure:
    """Right classes (via →) or left classes (via ⇝) of ``F`` with their order.

    Class ids follow the smallest member index. The order ``[a] ≤ [b]`` is
    ``a → b ∈ F`` (right) or ``a ⇝ b ∈ F`` (left); it is checked against the
    multiplicative description ``x ⊙ a ≤ b`` (resp. ``a ⊙ x ≤ b``) for some
    ``x ∈ F``.
    """
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    arrow = M.rimp if side == "right" else M.limp
    class_of = [-1] * M.size
    classes: list[set[int]] = []
    for a in M.elements:
        if class_of[a] >= 0:
            continue
        cls = {b for b in M.elements if arrow[a][b] in F and arrow[b][a] in F}
        for b in cls:
            class_of[b] = len(classes)
        classes.append(cls)
    reps = [min(c) for c in classes]
    order = []
    for i, a in enumerate(reps):
        row = []
        for j, b in enumerate(reps):
            by_arrow = arrow[a][b] in F
            if side == "right":
                by_mul = any(M.le(M.prod[x][a], b) for x in F)
            else:
                by_mul = any(M.le(M.prod[a][x], b) for x in F)
            if by_arrow != by_mul:
                raise InconsistencyError(f"class order descriptions disagree at {(a, b)} for {F}")
            row.append(by_arrow)
        order.append(tuple(row))
    return QuotientStructure(side, tuple(frozenset(c) for c in classes), tuple(class_of), tuple(order))


def quotient(M: FiniteHoop, F: Filter) -> tuple[FiniteHoop, tuple[int, ...]]:
    """``M/F`` for a normal filter, with the projection as a list of class ids."""
    if not is_normal_filter(M, F):
        raise ContractError(f"{F} is not a normal filter")
    qs = class_structure(M, F, "right")
    cls = qs.class_of
    k = len(qs.classes)
    tables = []
    for t in (M.prod, M.rimp, M.limp):
        q = [[-1] * k for _ in range(k)]
        for x, y in product(M.elements, repeat=2):
            v = cls[t[x][y]]
            if q[cls[x]][cls[y]] not in (-1, v):
                raise InconsistencyError(f"filter {F} does not induce a congruence")
            q[cls[x]][cls[y]] = v
        tables.append(q)
    Q = validate(k, cls[M.unit], *tables, zero=None if M.zero is None else cls[M.zero])
    if isinstance(Q, list):
        raise InconsistencyError(f"quotient by {F} fails the axioms: {Q[:3]}")
    return Q, cls


# ---------------------------------------------------------------------------
# primes, values, extensions
# ---------------------------------------------------------------------------

def _prime_by_definition(M: FiniteHoop, F: Filter, fs: list[Filter]) -> bool:
    for F1, F2 in product(fs, repeat=2):
        if (F1 & F2) <= F and not (F1 <= F or F2 <= F):
            return False
    return True


def prime_tests(M: FiniteHoop, F: Filter) -> PrimeReport:
    """Evaluate every primality condition independently by brute force.

    Conditions mentioning joins are ``None`` when ``M`` is not a lattice.
    For basic ``M`` all results must agree; a disagreement raises
    :class:`InconsistencyError`.
    """
    if not F.proper:
        raise ContractError("primality is only defined for proper filters")
    fs = all_filters(M)
    r = list(M.elements)
    R, L, P = M.rimp, M.limp, M.prod
    lattice = M.flags.lattice
    pairs = list(product(r, repeat=2))
    res: dict = {}
    res["i"] = _prime_by_definition(M, F, fs)
    res["ii"] = (all(f in F or g in F for f, g in pairs if M.join(f, g) == M.unit)
                 if lattice else None)
    res["iii"] = all(R[f][g] in F or R[g][f] in F for f, g in pairs)
    res["iii'"] = all(L[f][g] in F or L[g][f] in F for f, g in pairs)
    res["iv"] = (all(f in F or g in F for f, g in pairs if M.join(f, g) in F)
                 if lattice else None)
    res["v"] = all(any(M.le(P[c][f], g) or M.le(P[c][g], f) for c in F) for f, g in pairs)
    above = [G for G in fs if F <= G]
    res["vi"] = all(F1 <= F2 or F2 <= F1 for F1, F2 in product(above, repeat=2))
    strict = [G for G in above if F < G]
    res["vii"] = all(F < (F1 & F2) for F1, F2 in product(strict, repeat=2))
    res["viii"] = (all(M.join(f, g) not in F for f, g in pairs if f not in F and g not in F)
                   if lattice else None)
    applicable = {v for v in res.values() if v is not None}
    agree = len(applicable) == 1
    if not agree and M.flags.basic:
        raise InconsistencyError(f"primality conditions disagree on basic algebra for {F}: {res}")
    return PrimeReport(res, agree)


def is_prime(M: FiniteHoop, F: Filter) -> bool:
    """Proper and meet-prime among filters."""
    return F.proper and _prime_by_definition(M, F, all_filters(M))


def values_of(M: FiniteHoop, g: int) -> list[ValueRecord]:
    """All filters maximal with respect to omitting ``g``, with their covers."""
    if g == M.unit:
        raise ContractError("the unit has no values")
    omit = [F for F in all_filters(M) if g not in F]
    values = [V for V in omit if not any(V < W for W in omit)]
    out = [ValueRecord(g, V, generated_filter(M, set(V) | {g})) for V in values]
    if M.flags.basic:
        for rec in out:
            if not prime_tests(M, rec.value).prime:
                raise InconsistencyError(f"value {rec.value} of {g} is not prime")
    return out


def all_values(M: FiniteHoop) -> list[ValueRecord]:
    return [rec for g in M.elements if g != M.unit for rec in values_of(M, g)]


def prime_filters(M: FiniteHoop) -> list[Filter]:
    fs = all_filters(M)
    return [F for F in fs if F.proper and _prime_by_definition(M, F, fs)]


def minimal_primes(M: FiniteHoop) -> list[Filter]:
    ps = prime_filters(M)
    return [P for P in ps if not any(Q < P for Q in ps)]


def maximal_filters(M: FiniteHoop) -> list[Filter]:
    proper = [F for F in all_filters(M) if F.proper]
    return [F for F in proper if not any(F < G for G in proper)]


def has_strong_unit(M: FiniteHoop, u: int) -> bool:
    return generated_filter(M, {u}).bits == M.full_mask


def _require_basic(M: FiniteHoop, what: str) -> None:
    if not M.flags.basic:
        raise InapplicableError(f"{what} needs a basic pseudo hoop", "basic")


def perp(M: FiniteHoop, X: Iterable[int]) -> Filter:
    """``{x : x ∨ a = 1 for all a ∈ X}``; always a filter when ``M`` is basic."""
    _require_basic(M, "perp")
    X = list(X)
    bits = 0
    for x in M.elements:
        ok = True
        for a in X:
            j = M.join(x, a)
            if j is None:
                raise InapplicableError(f"join of {x} and {a} does not exist", "lattice")
            if j != M.unit:
                ok = False
                break
        if ok:
            bits |= 1 << x
    if not is_filter(M, bits):
        raise InconsistencyError(f"perp of {X} is not a filter")
    return Filter(bits, M)


def is_lattice_ideal(M: FiniteHoop, A: Iterable[int]) -> bool:
    A = set(A)
    if not A:
        return False
    for a in A:
        if any(M.le(b, a) and b not in A for b in M.elements):
            return False
    return all(M.join(a, b) in A for a, b in product(A, repeat=2))


def prime_extension(M: FiniteHoop, F: Filter, A: Iterable[int]) -> Filter:
    """A filter maximal among those containing ``F`` and missing ``A``; it is prime.

    Elements are tried greedily in index order, which reaches a maximal
    filter in the finite case.
    """
    _require_basic(M, "prime_extension")
    A = set(A)
    if not is_lattice_ideal(M, A):
        raise ContractError(f"{sorted(A)} is not a lattice ideal")
    amask = sum(1 << a for a in A)
    if F.bits & amask:
        raise ContractError("filter meets the ideal")
    bits = F.bits
    for x in M.elements:
        cand = _close(M, bits | 1 << x)
        if cand & amask == 0:
            bits = cand
    P = Filter(bits, M)
    if not prime_tests(M, P).prime:
        raise InconsistencyError(f"extension {P} of {F} away from {sorted(A)} is not prime")
    return P


def lattice_ideals(M: FiniteHoop) -> list[frozenset[int]]:
    out = []
    for mask in range(1, 1 << M.size):
        A = [x for x in M.elements if mask >> x & 1]
        if is_lattice_ideal(M, A):
            out.append(frozenset(A))
    return out
