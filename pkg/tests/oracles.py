"""Brute-force oracles kept independent of the package's search paths."""
from __future__ import annotations

from itertools import permutations, product

from pseudohoop.core import FiniteHoop, validate


def monoid_tables(n: int):
    """All associative tables on 0..n-1 with absorbing 0 and identity n-1."""
    if n == 1:
        yield ((0,),)
        return
    top = n - 1
    free = [(x, y) for x in range(1, top) for y in range(1, top)]
    T = [[0] * n for _ in range(n)]
    for x in range(n):
        T[top][x] = T[x][top] = x
    for values in product(range(n), repeat=len(free)):
        for (x, y), v in zip(free, values):
            T[x][y] = v
        if all(T[T[a][b]][c] == T[a][T[b][c]] for a, b, c in product(range(1, top), repeat=3)):
            yield tuple(map(tuple, T))


def brute_force_hoops(n: int) -> list[FiniteHoop]:
    """Every pseudo hoop on a carrier with bottom 0 and unit n-1.

    Arrows come from the divisibility order inside ``validate``.
    """
    out = []
    for prod in monoid_tables(n):
        M = validate(n, n - 1, prod)
        if isinstance(M, FiniteHoop):
            out.append(M)
    return out


def brute_iso_classes(hoops: list[FiniteHoop]) -> int:
    """Count isomorphism classes by trying every bijection that fixes 0 and the unit."""
    reps: list[FiniteHoop] = []
    for M in hoops:
        n = M.size
        if not any(_iso_by_permutation(M, R) for R in reps if R.size == n):
            reps.append(M)
    return len(reps)


def _iso_by_permutation(A: FiniteHoop, B: FiniteHoop) -> bool:
    n = A.size
    for p in permutations(range(n)):
        if all(p[A.prod[x][y]] == B.prod[p[x]][p[y]] for x in range(n) for y in range(n)):
            return True
    return False
