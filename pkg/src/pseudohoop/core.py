"""Finite pseudo hoops as operation tables.

Elements are the integers ``0 .. size-1``. ``prod[x][y]`` is ``x ⊙ y`` (left
factor is the row), ``rimp[x][y]`` is ``x → y`` and ``limp[x][y]`` is ``x ⇝ y``.
The order is ``x ≤ y`` iff ``x → y`` is the unit.
"""
from __future__ import annotations

from dataclasses import dataclass, field, fields
from functools import cached_property
from itertools import product
from typing import NamedTuple, Sequence

from .errors import InconsistencyError, InputError, ResiduationError

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class FiniteHoop:
    """A validated finite pseudo hoop.

    Build instances with :func:`validate` or :func:`make_hoop`; the
    constructor itself does not check the axioms.
    """

    size: int
    unit: int
    prod: Table
    rimp: Table
    limp: Table
    zero: int | None = None
    name: str | None = field(default=None, compare=False)

    @property
    def elements(self) -> range:
        return range(self.size)

    @cached_property
    def leq(self) -> tuple[tuple[bool, ...], ...]:
        u = self.unit
        return tuple(tuple(v == u for v in row) for row in self.rimp)

    def le(self, x: int, y: int) -> bool:
        return self.rimp[x][y] == self.unit

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.rimp[x][y] == self.unit

    @cached_property
    def up_mask(self) -> tuple[int, ...]:
        """Bit-set of the elements above each element."""
        return tuple(sum(1 << y for y in self.elements if self.leq[x][y]) for x in self.elements)

    @cached_property
    def down_mask(self) -> tuple[int, ...]:
        return tuple(sum(1 << y for y in self.elements if self.leq[y][x]) for x in self.elements)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def mul(self, x: int, y: int) -> int:
        return self.prod[x][y]

    def meet(self, x: int, y: int) -> int:
        return self.prod[self.rimp[x][y]][x]

    @cached_property
    def join_table(self) -> tuple[tuple[int | None, ...], ...]:
        return tuple(tuple(_least(self, self.up_mask[x] & self.up_mask[y]) for y in self.elements)
                     for x in self.elements)

    def join(self, x: int, y: int) -> int | None:
        """Order-theoretic least upper bound, or ``None`` if it does not exist."""
        return self.join_table[x][y]

    def power(self, x: int, n: int) -> int:
        return power(self, x, n)

    @cached_property
    def flags(self) -> ClassFlags:
        return classify(self)

    def relabel(self, perm: Sequence[int]) -> FiniteHoop:
        """The isomorphic copy in which element ``x`` is renamed ``perm[x]``."""
        n = self.size
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old

        def move(t: Table) -> Table:
            return tuple(tuple(perm[t[inv[i]][inv[j]]] for j in range(n)) for i in range(n))

        return FiniteHoop(n, perm[self.unit], move(self.prod), move(self.rimp), move(self.limp),
                          None if self.zero is None else perm[self.zero], self.name)


def _least(M: FiniteHoop, mask: int) -> int | None:
    for z in M.elements:
        if mask >> z & 1 and mask & ~M.up_mask[z] == 0:
            return z
    return None


class MeetJoin(NamedTuple):
    meet: int
    vee1: int
    vee2: int
    join: int | None


@dataclass(frozen=True)
class ClassFlags:
    bounded: bool
    commutative: bool
    cancellative: bool
    prelinear: bool
    basic: bool
    good: bool
    eq64: bool
    pseudoBL: bool
    lattice: bool

    @classmethod
    def names(cls) -> tuple[str, ...]:
        return tuple(f.name for f in fields(cls))

    def as_dict(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in self.names()}


# ---------------------------------------------------------------------------
# construction and validation
# ---------------------------------------------------------------------------

def _as_table(size: int, data, name: str, *, boolean: bool = False) -> tuple:
    if not isinstance(data, (list, tuple)) or len(data) != size:
        raise InputError(f"{name} must have {size} rows", name)
    rows = []
    for i, row in enumerate(data):
        if not isinstance(row, (list, tuple)) or len(row) != size:
            raise InputError(f"{name}[{i}] must have {size} entries", name, (i,))
        out = []
        for j, v in enumerate(row):
            if boolean:
                if not isinstance(v, bool) and v not in (0, 1):
                    raise InputError(f"{name}[{i}][{j}] is not a truth value", name, (i, j))
                out.append(bool(v))
            else:
                if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < size:
                    raise InputError(f"{name}[{i}][{j}] = {v!r} is out of range", name, (i, j))
                out.append(v)
        rows.append(tuple(out))
    return tuple(rows)


def _check_index(size: int, v, name: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < size:
        raise InputError(f"{name} = {v!r} is out of range", name)
    return v


def divisibility_order(size: int, prod: Sequence[Sequence[int]]) -> tuple[tuple[bool, ...], ...]:
    """``x ≤ y`` iff ``x = z ⊙ y`` for some ``z``; the order of any pseudo hoop."""
    leq = [[False] * size for _ in range(size)]
    for z, y in product(range(size), repeat=2):
        leq[prod[z][y]][y] = True
    return tuple(tuple(r) for r in leq)


def _is_partial_order(size: int, leq) -> bool:
    r = range(size)
    if not all(leq[x][x] for x in r):
        return False
    for x, y in product(r, repeat=2):
        if x != y and leq[x][y] and leq[y][x]:
            return False
    for x, y, z in product(r, repeat=3):
        if leq[x][y] and leq[y][z] and not leq[x][z]:
            return False
    return True


def _greatest(size: int, leq, candidates: list[int]) -> int | None:
    for g in candidates:
        if all(leq[c][g] for c in candidates):
            return g
    return None


def derive_arrows(size: int, unit: int, prod, leq=None) -> tuple[Table, Table]:
    """Residuals of ``prod`` under the order ``leq``.

    ``rimp[x][y]`` is the greatest ``z`` with ``z ⊙ x ≤ y`` and ``limp[x][y]``
    the greatest ``z`` with ``x ⊙ z ≤ y``. Without ``leq`` the divisibility
    order of ``prod`` is used. Raises :class:`ResiduationError` naming the
    first pair with no greatest candidate.
    """
    prod = _as_table(size, prod, "prod")
    _check_index(size, unit, "unit")
    if leq is None:
        leq = divisibility_order(size, prod)
        if not _is_partial_order(size, leq):
            raise ResiduationError("divisibility relation of prod is not a partial order")
    else:
        leq = _as_table(size, leq, "leq", boolean=True)
        if not _is_partial_order(size, leq):
            raise ResiduationError("leq is not a partial order")
    r = range(size)
    rimp = [[0] * size for _ in r]
    limp = [[0] * size for _ in r]
    for x, y in product(r, repeat=2):
        g = _greatest(size, leq, [z for z in r if leq[prod[z][x]][y]])
        if g is None:
            raise ResiduationError(f"no greatest z with z*{x} <= {y}", (x, y), "rimp")
        rimp[x][y] = g
        g = _greatest(size, leq, [z for z in r if leq[prod[x][z]][y]])
        if g is None:
            raise ResiduationError(f"no greatest z with {x}*z <= {y}", (x, y), "limp")
        limp[x][y] = g
    return tuple(map(tuple, rimp)), tuple(map(tuple, limp))


def axiom_violations(size: int, unit: int, prod: Table, rimp: Table, limp: Table,
                     zero: int | None = None) -> list[AxiomViolation]:
    """Every failing instance of the pseudo hoop axioms, in a fixed order."""
    out: list[AxiomViolation] = []
    r = range(size)
    for x in r:
        if prod[x][unit] != x or prod[unit][x] != x:
            out.append(AxiomViolation("i", (x,)))
    for x in r:
        if rimp[x][x] != unit or limp[x][x] != unit:
            out.append(AxiomViolation("ii", (x,)))
    for x, y, z in product(r, repeat=3):
        if rimp[prod[x][y]][z] != rimp[x][rimp[y][z]]:
            out.append(AxiomViolation("iii", (x, y, z)))
    for x, y, z in product(r, repeat=3):
        if limp[prod[x][y]][z] != limp[y][limp[x][z]]:
            out.append(AxiomViolation("iv", (x, y, z)))
    for x, y in product(r, repeat=2):
        a = prod[rimp[x][y]][x]
        if not a == prod[rimp[y][x]][y] == prod[x][limp[x][y]] == prod[y][limp[y][x]]:
            out.append(AxiomViolation("v", (x, y)))
    for x, y in product(r, repeat=2):
        if (rimp[x][y] == unit) != (limp[x][y] == unit):
            out.append(AxiomViolation("order", (x, y)))
    if zero is not None:
        for x in r:
            if rimp[zero][x] != unit:
                out.append(AxiomViolation("zero", (x,)))
    return out


def validate(size: int, unit: int, prod, rimp=None, limp=None, zero: int | None = None,
             leq=None, name: str | None = None) -> FiniteHoop | list[AxiomViolation]:
    """Check the pseudo hoop axioms on the given tables.

    Returns the :class:`FiniteHoop` when every axiom holds, otherwise the list
    of all violated instances. Missing arrow tables are derived by residuation
    (from ``leq`` when given, else from whichever arrow is present, else from
    divisibility). Malformed input raises :class:`InputError`.

    A valid finite pseudo hoop always has a least element; when ``zero`` is
    not supplied it is filled in.
    """
    if isinstance(size, bool) or not isinstance(size, int) or size < 1:
        raise InputError(f"size must be a positive integer, got {size!r}", "size")
    unit = _check_index(size, unit, "unit")
    prod = _as_table(size, prod, "prod")
    if rimp is not None:
        rimp = _as_table(size, rimp, "rimp")
    if limp is not None:
        limp = _as_table(size, limp, "limp")
    if leq is not None:
        leq = _as_table(size, leq, "leq", boolean=True)
    if zero is not None:
        zero = _check_index(size, zero, "zero")

    if rimp is None or limp is None:
        order = leq
        if order is None and rimp is not None:
            order = tuple(tuple(v == unit for v in row) for row in rimp)
        if order is None and limp is not None:
            order = tuple(tuple(v == unit for v in row) for row in limp)
        try:
            d_rimp, d_limp = derive_arrows(size, unit, prod, order)
        except ResiduationError as exc:
            return [AxiomViolation("residuation", exc.pair or ())]
        rimp = d_rimp if rimp is None else rimp
        limp = d_limp if limp is None else limp

    violations = axiom_violations(size, unit, prod, rimp, limp, zero)
    if leq is not None:
        for x, y in product(range(size), repeat=2):
            if leq[x][y] != (rimp[x][y] == unit):
                violations.append(AxiomViolation("leq", (x, y)))
    if violations:
        return violations
    if zero is None:
        zero = next(z for z in range(size) if all(rimp[z][x] == unit for x in range(size)))
    return FiniteHoop(size, unit, prod, rimp, limp, zero, name)


class AxiomError(ValueError):
    def __init__(self, violations: list[AxiomViolation]):
        super().__init__(f"{len(violations)} axiom violation(s), first: {violations[0]}")
        self.violations = violations


def make_hoop(size: int, unit: int, prod, rimp=None, limp=None, zero=None, leq=None,
              name=None) -> FiniteHoop:
    """Like :func:`validate` but raises :class:`AxiomError` on violations."""
    result = validate(size, unit, prod, rimp, limp, zero, leq, name)
    if isinstance(result, list):
        raise AxiomError(result)
    return result


# ---------------------------------------------------------------------------
# powers
# ---------------------------------------------------------------------------

def power(M: FiniteHoop, x: int, n: int) -> int:
    """``x**n`` with ``x**0 = 1``.

    Powers are stable from index ``size`` on, so large exponents are clamped.
    """
    if n < 0:
        raise ValueError("exponent must be non-negative")
    p = M.unit
    for _ in range(min(n, M.size)):
        p = M.prod[p][x]
    return p


def stab_index(M: FiniteHoop, x: int) -> int:
    """Least ``n >= 1`` with ``x**n == x**(n+1)``."""
    n, p = 1, x
    while True:
        q = M.prod[p][x]
        if q == p:
            return n
        n, p = n + 1, q


def nmax(M: FiniteHoop, override: int | None = None) -> int:
    """Power bound standing in for "all n"; defaults to the size of ``M``."""
    return M.size if override is None else override


# ---------------------------------------------------------------------------
# meets, joins and class predicates
# ---------------------------------------------------------------------------

def vee1(M: FiniteHoop, x: int, y: int) -> int:
    R, L = M.rimp, M.limp
    return M.meet(R[L[x][y]][y], R[L[y][x]][x])


def vee2(M: FiniteHoop, x: int, y: int) -> int:
    R, L = M.rimp, M.limp
    return M.meet(L[R[x][y]][y], L[R[y][x]][x])


def meet_join(M: FiniteHoop, x: int, y: int) -> MeetJoin:
    res = MeetJoin(M.meet(x, y), vee1(M, x, y), vee2(M, x, y), M.join(x, y))
    if M.flags.prelinear and not res.vee1 == res.vee2 == res.join:
        raise InconsistencyError(f"prelinear algebra but vee1/vee2/join differ at {(x, y)}: {res}")
    return res


def is_commutative(M: FiniteHoop) -> bool:
    return all(M.prod[x][y] == M.prod[y][x] for x, y in product(M.elements, repeat=2))


def is_cancellative(M: FiniteHoop) -> bool:
    P, r = M.prod, M.elements
    for x in r:
        if len(set(P[x])) != M.size or len({P[s][x] for s in r}) != M.size:
            return False
    return True


def is_lattice(M: FiniteHoop) -> bool:
    return all(j is not None for row in M.join_table for j in row)


def is_prelinear(M: FiniteHoop) -> bool:
    R, L, u = M.rimp, M.limp, M.unit
    return all(M.join(R[x][y], R[y][x]) == u and M.join(L[x][y], L[y][x]) == u
               for x, y in product(M.elements, repeat=2))


def is_basic(M: FiniteHoop) -> bool:
    R, L = M.rimp, M.limp
    for x, y, z in product(M.elements, repeat=3):
        if not M.le(R[R[x][y]][z], R[R[R[y][x]][z]][z]):
            return False
        if not M.le(L[L[x][y]][z], L[L[L[y][x]][z]][z]):
            return False
    return True


def is_good(M: FiniteHoop) -> bool:
    if M.zero is None:
        return False
    R, L, o = M.rimp, M.limp, M.zero
    return all(L[R[x][o]][o] == R[L[x][o]][o] for x in M.elements)


def satisfies_eq64(M: FiniteHoop) -> bool:
    """``(x → y) ⇝ y = (x ⇝ y) → y`` for all pairs."""
    R, L = M.rimp, M.limp
    return all(L[R[x][y]][y] == R[L[x][y]][y] for x, y in product(M.elements, repeat=2))


def bottom(M: FiniteHoop) -> int | None:
    return _least(M, M.full_mask)


def classify(M: FiniteHoop) -> ClassFlags:
    bounded = bottom(M) is not None
    prelinear = is_prelinear(M)
    return ClassFlags(
        bounded=bounded,
        commutative=is_commutative(M),
        cancellative=is_cancellative(M),
        prelinear=prelinear,
        basic=is_basic(M),
        good=bounded and is_good(M),
        eq64=satisfies_eq64(M),
        pseudoBL=bounded and prelinear,
        lattice=is_lattice(M),
    )


def is_distributive_lattice(M: FiniteHoop) -> bool:
    for x, y, z in product(M.elements, repeat=3):
        j = M.join(y, z)
        if j is None or M.meet(x, j) != M.join(M.meet(x, y), M.meet(x, z)):
            return False
    return True
