"""Riesz decomposition: explicit witnesses and whole-algebra checks."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import FiniteHoop
from .errors import ContractError, InconsistencyError
from .filters import all_filters, filter_join, principal_filter


@dataclass(frozen=True)
class RdpWitness:
    a: int
    b: int
    c: int
    b_prime: int
    c_prime: int


def rdp_witness(M: FiniteHoop, a: int, b: int, c: int) -> RdpWitness:
    """Decompose ``a ≥ b ⊙ c`` as ``a = b' ⊙ c'`` with ``b ≤ b'`` and ``c ≤ c'``.

    ``c' = (c → a) ⇝ a`` and ``b' = c' → a``. Both inequalities and the
    equality are checked before returning.
    """
    R, L, P = M.rimp, M.limp, M.prod
    if not M.le(P[b][c], a):
        raise ContractError(f"{b} * {c} is not below {a}")
    c1 = L[R[c][a]][a]
    b1 = R[c1][a]
    if not (M.le(b, b1) and M.le(c, c1) and P[b1][c1] == a):
        raise InconsistencyError(f"decomposition fails for {(a, b, c)}: b'={b1}, c'={c1}")
    return RdpWitness(a, b, c, b1, c1)


@dataclass
class RdpReport:
    passed: bool
    checked: int
    failure: tuple[int, int, int] | None = None


def verify_rdp(M: FiniteHoop) -> RdpReport:
    checked = 0
    for a, b, c in product(M.elements, repeat=3):
        if not M.le(M.prod[b][c], a):
            continue
        checked += 1
        try:
            rdp_witness(M, a, b, c)
        except InconsistencyError:
            return RdpReport(False, checked, (a, b, c))
    return RdpReport(True, checked)


@dataclass
class FilterProductReport:
    eq61: bool
    principal_law: bool  # F(a)⊙F(b) = F(a⊙b) = F(b⊙a) = F(b)⊙F(a) for all a, b
    filter_law: bool     # F⊙G = F∨G = G⊙F for all filters
    passed: bool
    witness: tuple | None = None


def _set_product(M: FiniteHoop, A, B) -> int:
    bits = 0
    for a in A:
        for b in B:
            bits |= 1 << M.prod[a][b]
    return bits


def check_filter_products(M: FiniteHoop, nmax: int | None = None) -> FilterProductReport:
    """Products of filters versus joins.

    When ``M`` satisfies ``x²⊙y² ≤ y⊙x`` the principal law must hold; the
    principal law and the law for all filters must hold or fail together
    whatever ``M`` is.
    """
    from .normalvalued import check_61

    eq61 = check_61(M).holds
    principal_witness = None
    for a, b in product(M.elements, repeat=2):
        Fa, Fb = principal_filter(M, a, nmax), principal_filter(M, b, nmax)
        ab = principal_filter(M, M.prod[a][b], nmax).bits
        ba = principal_filter(M, M.prod[b][a], nmax).bits
        if not _set_product(M, Fa, Fb) == ab == ba == _set_product(M, Fb, Fa):
            principal_witness = (a, b)
            break
    filter_witness = None
    fs = all_filters(M)
    for F, G in product(fs, repeat=2):
        if not _set_product(M, F, G) == filter_join(F, G).bits == _set_product(M, G, F):
            filter_witness = (F.bits, G.bits)
            break
    principal_law = principal_witness is None
    filter_law = filter_witness is None
    passed = principal_law == filter_law and (principal_law or not eq61)
    witness = None
    if not passed:
        witness = principal_witness or filter_witness
    return FilterProductReport(eq61, principal_law, filter_law, passed, witness)
