"""Deciding normal-valuedness, plus the claim catalog.

Two independent routes decide normal-valuedness of a finite basic algebra:
the direct one inspects every value inside its cover, the equational one
evaluates the three inequalities of the countable basis with the power
index bounded by ``nmax`` (the algebra size by default, after which all
powers are stable). The same module hosts the claim catalog used by the
``check-claim`` command and the search for algebras separating the single
inequality ``x²⊙y² ≤ y⊙x`` from normal-valuedness.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable

from . import core
from .core import FiniteHoop, power
from .errors import InapplicableError, InputError
from .filters import (
    all_filters,
    all_values,
    class_structure,
    generated_filter,
    is_filter,
    lattice_ideals,
    minimal_primes,
    perp,
    prime_extension,
    prime_filters,
    prime_tests,
    values_of,
    filter_lattice,
    principal_filter,
    has_strong_unit,
)
from .rdp import check_filter_products


def k_sequence(n: int) -> list[int]:
    """``k_1 .. k_n`` with ``k_1 = 1`` and ``k_{m+1} = 2 k_m + 2``."""
    ks = [1]
    while len(ks) < n:
        ks.append(2 * ks[-1] + 2)
    return ks[:n]


def conjugates(M: FiniteHoop, f: int, x: int) -> tuple[int, int]:
    """Left and right conjugates ``f ⇝ (x ⊙ f)`` and ``f → (f ⊙ x)``."""
    return M.limp[f][M.prod[x][f]], M.rimp[f][M.prod[f][x]]


@dataclass
class Verdict:
    holds: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.holds


def _require_basic(M: FiniteHoop) -> None:
    if not M.flags.basic:
        raise InapplicableError("normal-valuedness is defined for basic pseudo hoops", "basic")


def is_normal_valued_direct(M: FiniteHoop) -> Verdict:
    """Every value is closed under both conjugations by elements of its cover.

    The failure witness is ``(g, value elements, f, v)``.
    """
    _require_basic(M)
    for rec in all_values(M):
        V = rec.value
        for f in rec.cover:
            for v in V:
                lam, rho = conjugates(M, f, v)
                if lam not in V or rho not in V:
                    return Verdict(False, (rec.g, tuple(V), f, v))
    return Verdict(True)


def _ineq_i(M: FiniteHoop, x: int, y: int) -> bool:
    P = M.prod
    return M.le(P[power(M, x, 2)][power(M, y, 2)], P[y][x])


def _ineq_ii(M: FiniteHoop, x: int, y: int, n: int) -> bool:
    R, L = M.rimp, M.limp
    lhs = power(M, L[power(M, R[x][y], n)][y], 2)
    return M.le(lhs, R[power(M, L[x][y], 2 * n)][y])


def _ineq_iii(M: FiniteHoop, x: int, y: int, n: int) -> bool:
    R, L = M.rimp, M.limp
    lhs = power(M, R[power(M, L[x][y], n)][y], 2)
    return M.le(lhs, L[power(M, R[x][y], 2 * n)][y])


def check_61(M: FiniteHoop) -> Verdict:
    """``x²⊙y² ≤ y⊙x`` for all pairs; witness ``(x, y)``."""
    for x, y in product(M.elements, repeat=2):
        if not _ineq_i(M, x, y):
            return Verdict(False, (x, y))
    return Verdict(True)


def equational_basis_check(M: FiniteHoop, nmax: int | None = None) -> Verdict:
    """All three basis inequalities, powers ``1..nmax``; witness ``(which, x, y, n)``."""
    top = core.nmax(M, nmax)
    v = check_61(M)
    if not v:
        return Verdict(False, ("i", *v.witness, 0))
    for x, y in product(M.elements, repeat=2):
        for n in range(1, top + 1):
            if not _ineq_ii(M, x, y, n):
                return Verdict(False, ("ii", x, y, n))
            if not _ineq_iii(M, x, y, n):
                return Verdict(False, ("iii", x, y, n))
    return Verdict(True)


# ---------------------------------------------------------------------------
# claim catalog
# ---------------------------------------------------------------------------

@dataclass
class ClaimReport:
    claim: str
    status: str  # "pass" | "fail" | "inapplicable"
    witness: tuple | None = None
    hypothesis: str | None = None
    anchor: str = ""


@dataclass(frozen=True)
class _Claim:
    anchor: str
    hypotheses: tuple[str, ...]
    check: Callable[[FiniteHoop, int], tuple | None]  # returns a witness on failure
    extra: dict = field(default_factory=dict)


def _hyp_holds(M: FiniteHoop, h: str) -> bool:
    f = M.flags
    if h in ("basic", "prelinear", "bounded", "eq64"):
        return getattr(f, h)
    if h == "eq61":
        return check_61(M).holds
    if h == "normal_valued":
        return f.basic and is_normal_valued_direct(M).holds
    if h == "equational_basis":
        return equational_basis_check(M).holds
    if h == "strong_unit":
        return any(has_strong_unit(M, u) for u in M.elements if u != M.unit)
    if h == "proper_prime":
        return bool(prime_filters(M))
    raise ValueError(h)


def _pairs(M):
    return product(M.elements, repeat=2)


def _c_prop31(M, N):
    P = M.prod
    for x, y, z in product(M.elements, repeat=3):
        m = M.meet(x, y)
        if P[z][m] != M.meet(P[z][x], P[z][y]) or P[m][z] != M.meet(P[x][z], P[y][z]):
            return (x, y, z)
    return None


def _c_eq31(M, N):
    for x, y in _pairs(M):
        j = M.join(x, y)
        if j is None or not core.vee1(M, x, y) == core.vee2(M, x, y) == j:
            return (x, y)
    return None


def _c_eq41(M, N):
    for a, b in _pairs(M):
        Fab = principal_filter(M, M.prod[a][b], N).bits
        Fba = principal_filter(M, M.prod[b][a], N).bits
        j = generated_filter(M, set(principal_filter(M, a, N)) | set(principal_filter(M, b, N))).bits
        if not Fab == j == Fba:
            return (a, b)
    return None


def _c_eq42(M, N):
    for a, b in _pairs(M):
        j = M.join(a, b)
        if j is None:
            continue
        if principal_filter(M, j, N).bits != (principal_filter(M, a, N).bits & principal_filter(M, b, N).bits):
            return (a, b)
    return None


def _c_prop42(M, N):
    rep = filter_lattice(M)
    if not rep.distributive:
        return ("triple", *rep.witness)
    if not rep.infinite_law:
        return ("family", rep.family_witness)
    return None


def _c_prop43(M, N):
    for F in all_filters(M):
        if F.proper and not prime_tests(M, F).agree:
            return (F.bits,)
    return None


def _c_lemma44(M, N):
    for F in all_filters(M):
        for A in lattice_ideals(M):
            if any(a in F for a in A):
                continue
            P = prime_extension(M, F, A)
            if not (F <= P and not any(a in P for a in A) and prime_tests(M, P).prime):
                return (F.bits, tuple(sorted(A)))
    return None


def _c_lemma46(M, N):
    vals = all_values(M)
    fixed = {}
    for rec in vals:
        fixed.setdefault(rec.g, rec)
    R = M.rimp
    for f, g in _pairs(M):
        all_v = all(R[f][g] in rec.value for rec in vals)
        fixed_v = all(R[f][g] in rec.value for rec in fixed.values())
        if not M.le(f, g) == all_v == fixed_v:
            return (f, g)
    return None


def _c_eq61(M, N):
    v = check_61(M)
    return None if v else v.witness


def _c_eq62(M, N):
    ks = k_sequence(N)
    P = M.prod
    for a, b in _pairs(M):
        for n in range(1, N + 1):
            k = ks[n - 1]
            if not M.le(P[power(M, a, k)][power(M, b, k)], power(M, P[a][b], n)):
                return (a, b, n, k)
    return None


def _c_prop61(M, N):
    rep = check_filter_products(M, N)
    return None if rep.passed else (rep.eq61, rep.principal_law, rep.filter_law, rep.witness)


def _c_lemma62(M, N):
    for mask in range(1 << M.size):
        X = [x for x in M.elements if mask >> x & 1]
        if not is_filter(M, perp(M, X).bits):
            return tuple(X)
    return None


def _c_lemma63(M, N):
    for u in M.elements:
        if u == M.unit or not has_strong_unit(M, u):
            continue
        inter = M.full_mask
        for rec in values_of(M, u):
            inter &= rec.value.bits
        for a in M.elements:
            if inter >> a & 1 and not all(M.le(u, power(M, a, n)) for n in range(1, N + 1)):
                return (u, a)
    return None


def _c_remark64(M, N):
    inter = M.full_mask
    for P in minimal_primes(M):
        inter &= P.bits
    if inter != 1 << M.unit:
        return tuple(x for x in M.elements if inter >> x & 1)
    return None


def _c_lemma65(M, N):
    P, R = M.prod, M.rimp
    vals = {x: values_of(M, x) for x in M.elements if x != M.unit}
    for a, b, x in product(M.elements, repeat=3):
        if x == M.unit:
            continue
        if all(R[P[a][b]][x] in rec.value for rec in vals[x]):
            if not M.le(P[power(M, a, 2)][power(M, b, 2)], x):
                return (a, b, x)
    return None


def _c_ineq(which: str):
    def check(M, N):
        for x, y in _pairs(M):
            if which == "i":
                if not _ineq_i(M, x, y):
                    return (x, y)
                continue
            for n in range(1, N + 1):
                ok = _ineq_ii(M, x, y, n) if which == "ii" else _ineq_iii(M, x, y, n)
                if not ok:
                    return (x, y, n)
        return None
    return check


def _c_lemma67(M, N):
    P = M.prod
    for F in all_filters(M):
        for a in M.elements:
            target = generated_filter(M, set(F) | {a}).bits
            left = right = 0
            for f in F:
                for n in range(1, N + 1):
                    left |= M.up_mask[P[f][power(M, a, n)]]
                    right |= M.up_mask[P[power(M, a, n)][f]]
            if not left == right == target:
                return (F.bits, a)
    return None


def _c_thm68(M, N):
    v = is_normal_valued_direct(M)
    return None if v else v.witness


def _c_cor69(M, N):
    d = is_normal_valued_direct(M).holds
    e = equational_basis_check(M, N).holds
    return None if d == e else (d, e)


def _c_lemma610(M, N):
    for rec in all_values(M):
        V = rec.value
        right = class_structure(M, V, "right")
        for x in rec.cover:
            if x in V:
                continue
            cx, cx2 = right.class_of[x], right.class_of[power(M, x, 2)]
            if not (right.le(cx2, cx) and not right.le(cx, cx2)):
                continue
            for y in right.classes[cx]:
                if not (M.limp[x][y] in V and M.limp[y][x] in V):
                    return (rec.g, V.bits, x, y)
    return None


def _c_eq63(M, N):
    R, L, o = M.rimp, M.limp, M.zero
    for x in M.elements:
        if L[R[x][o]][o] != R[L[x][o]][o]:
            return (x,)
    return None


def _c_eq64(M, N):
    R, L = M.rimp, M.limp
    for x, y in _pairs(M):
        if L[R[x][y]][y] != R[L[x][y]][y]:
            return (x, y)
    return None


def _c_eq65(M, N):
    R, L = M.rimp, M.limp
    for x, y in _pairs(M):
        for n in range(1, N + 1):
            if L[power(M, R[x][y], n)][y] != R[power(M, L[x][y], n)][y]:
                return (x, y, n)
    return None


def _c_thm612(M, N):
    a = check_61(M).holds
    b = is_normal_valued_direct(M).holds
    return None if a == b else (a, b)


def _c_conjsub(M, N):
    # Checked as stated. It already fails on the 3-element Lukasiewicz chain
    # (f = a, x = y = 0); the reverse inequality is the one residuation gives.
    P = M.prod
    for f, x, y in product(M.elements, repeat=3):
        lxy, rxy = conjugates(M, f, P[x][y])
        lx, rx = conjugates(M, f, x)
        ly, ry = conjugates(M, f, y)
        if not (M.le(lxy, P[lx][ly]) and M.le(rxy, P[rx][ry])):
            return (f, x, y)
    return None


CLAIMS: dict[str, _Claim] = {
    "PROP31": _Claim("prelinearity: ⊙ distributes over ∧ on both sides", ("prelinear",), _c_prop31),
    "EQ31": _Claim("prelinearity: vee1 = vee2 = join", ("prelinear",), _c_eq31),
    "EQ41": _Claim("F(a⊙b) = F(a) ∨ F(b) = F(b⊙a)", (), _c_eq41),
    "EQ42": _Claim("F(a∨b) = F(a) ∩ F(b)", (), _c_eq42),
    "PROP42": _Claim("filter lattice is distributive, also for arbitrary families", (), _c_prop42),
    "PROP43": _Claim("all primality conditions agree", ("basic",), _c_prop43),
    "LEMMA44": _Claim("a filter missing a lattice ideal extends to a prime missing it", ("basic",), _c_lemma44),
    "LEMMA46": _Claim("f ≤ g iff Vf ≤ Vg for all values V", ("basic",), _c_lemma46),
    "EQ61": _Claim("x²⊙y² ≤ y⊙x", (), _c_eq61),
    "EQ62": _Claim("under x²⊙y² ≤ y⊙x: (a⊙b)^n ≥ a^k_n ⊙ b^k_n", ("eq61",), _c_eq62),
    "PROP61": _Claim("filter products versus filter joins", (), _c_prop61),
    "LEMMA62": _Claim("X⊥ is a filter", ("basic",), _c_lemma62),
    "LEMMA63": _Claim("values of a strong unit u lie inside {a : a^n ≥ u}", ("basic", "strong_unit"), _c_lemma63),
    "REMARK64": _Claim("minimal primes intersect to {1}", ("basic", "proper_prime"), _c_remark64),
    "LEMMA65": _Claim("V(a⊙b) ≤ Vx for all values V of x implies a²⊙b² ≤ x", ("basic",), _c_lemma65),
    "THM66i": _Claim("normal-valued implies x²⊙y² ≤ y⊙x", ("basic", "normal_valued"), _c_ineq("i")),
    "THM66ii": _Claim("normal-valued implies ((x→y)^n⇝y)² ≤ (x⇝y)^2n→y", ("basic", "normal_valued"), _c_ineq("ii")),
    "THM66iii": _Claim("normal-valued implies ((x⇝y)^n→y)² ≤ (x→y)^2n⇝y", ("basic", "normal_valued"), _c_ineq("iii")),
    "LEMMA67": _Claim("under x²⊙y² ≤ y⊙x: one-sided descriptions of the filter generated by F and a", ("eq61",), _c_lemma67),
    "THM68": _Claim("the equational basis implies normal-valued", ("basic", "equational_basis"), _c_thm68),
    "COR69": _Claim("normal-valued iff the equational basis holds", ("basic",), _c_cor69),
    "LEMMA610": _Claim("under x²⊙y² ≤ y⊙x: Vx ⊆ xV when Vx > Vx²", ("basic", "eq61"), _c_lemma610),
    "EQ63": _Claim("x^-~ = x^~-", ("bounded",), _c_eq63),
    "EQ64": _Claim("(x→y)⇝y = (x⇝y)→y", (), _c_eq64),
    "EQ65": _Claim("under the two-arrow identity: (x→y)^n⇝y = (x⇝y)^n→y", ("basic", "eq64"), _c_eq65),
    "THM612": _Claim("under the two-arrow identity: normal-valued iff x²⊙y² ≤ y⊙x", ("basic", "eq64"), _c_thm612),
    "CONJSUB": _Claim("conjugation is submultiplicative", (), _c_conjsub),
}
CLAIM_ALIASES = {"LEMMA611": "EQ65"}
CLAIM_IDS = tuple(CLAIMS)


def check_claim(M: FiniteHoop, claim_id: str, nmax: int | None = None) -> ClaimReport:
    """Check one catalogued statement exhaustively on ``M``.

    Statements with hypotheses report ``inapplicable`` (naming the first
    failing hypothesis) instead of being checked.
    """
    cid = CLAIM_ALIASES.get(claim_id, claim_id)
    if cid not in CLAIMS:
        raise InputError(f"unknown claim id {claim_id!r}", "claim")
    claim = CLAIMS[cid]
    for h in claim.hypotheses:
        if not _hyp_holds(M, h):
            return ClaimReport(claim_id, "inapplicable", hypothesis=h, anchor=claim.anchor)
    witness = claim.check(M, core.nmax(M, nmax))
    status = "pass" if witness is None else "fail"
    return ClaimReport(claim_id, status, witness, anchor=claim.anchor)


def normal_filter_by_conjugates(M: FiniteHoop, F) -> bool:
    """Normality of ``F`` read off as closure under all conjugations."""
    return all(set(conjugates(M, f, v)) <= set(F) for f in M.elements for v in F)


# ---------------------------------------------------------------------------
# separating search
# ---------------------------------------------------------------------------

@dataclass
class Q2Result:
    candidates: list[FiniteHoop]
    inconsistencies: list[tuple[FiniteHoop, bool, bool]]
    basic_checked: int
    skipped_non_basic: int
    direct_false_seen: int  # basic algebras that are not normal-valued
    eq61_false_seen: int    # basic algebras failing x²⊙y² ≤ y⊙x


def q2_search(source: Iterable[FiniteHoop], nmax: int | None = None) -> Q2Result:
    """Look for basic algebras with ``x²⊙y² ≤ y⊙x`` that are not normal-valued.

    On every basic algebra the direct and equational decisions are compared;
    a disagreement is recorded as an inconsistency, which can only come from
    a bug or a non-pseudo-hoop input.
    """
    res = Q2Result([], [], 0, 0, 0, 0)
    for M in source:
        if not M.flags.basic:
            res.skipped_non_basic += 1
            continue
        res.basic_checked += 1
        direct = is_normal_valued_direct(M).holds
        eq = equational_basis_check(M, nmax).holds
        if direct != eq:
            res.inconsistencies.append((M, direct, eq))
        i61 = check_61(M).holds
        if not direct:
            res.direct_false_seen += 1
        if not i61:
            res.eq61_false_seen += 1
        if i61 and not direct:
            res.candidates.append(M)
    return res
