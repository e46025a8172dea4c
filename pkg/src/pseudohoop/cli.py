"""Command-line front end.

Exit codes depend only on the report status: 0 for pass (and for
inapplicable checks, which assert nothing), 1 for a failed property or a
counterexample, 2 for input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import formats
from .cones import ConeModel, SAMPLED_PROPERTIES, direct_product, make_chain, ordinal_sum, sample_check
from .core import AxiomError, classify
from .enumeration import EnumOptions, all_hoops, canonical_form, enumerate_hoops, key_hash
from .errors import ContractError, InapplicableError, InconsistencyError, InputError
from .filters import (
    all_filters,
    filter_lattice,
    is_normal_filter,
    minimal_primes,
    prime_tests,
    values_of,
)
from .holland import build_representation, export_representation, verify_representation
from .normalvalued import (
    CLAIM_ALIASES,
    CLAIM_IDS,
    check_claim,
    equational_basis_check,
    is_normal_valued_direct,
    q2_search,
)
from .rdp import rdp_witness, verify_rdp

EXIT_CODES = {"pass": 0, "inapplicable": 0, "fail": 1, "error": 2}


@dataclass
class Report:
    verb: str
    status: str
    witnesses: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    anchors: list = field(default_factory=list)
    timing: float = 0.0

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


def _jsonable(v):
    if isinstance(v, (list, tuple, set, frozenset)):
        items = sorted(v) if isinstance(v, (set, frozenset)) else v
        return [_jsonable(x) for x in items]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def render(report: Report, mode: str = "text") -> bytes:
    if mode == "json":
        doc = {
            "verb": report.verb,
            "status": report.status,
            "witnesses": _jsonable(report.witnesses),
            "anchors": _jsonable(report.anchors),
            "timing": round(report.timing, 6),
            "data": _jsonable(report.data),
        }
        return (json.dumps(doc, sort_keys=True) + "\n").encode()
    lines = [f"{report.verb}: {report.status}"]
    for k in sorted(report.data):
        lines.append(f"  {k}: {_jsonable(report.data[k])}")
    for w in report.witnesses:
        lines.append(f"  witness: {_jsonable(w)}")
    for a in report.anchors:
        lines.append(f"  claim: {a}")
    return ("\n".join(lines) + "\n").encode()


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def _cmd_check(args) -> Report:
    try:
        M = formats.load_algebra(args.file)
    except AxiomError as exc:
        return Report("check", "fail", [[v.axiom, list(v.witness)] for v in exc.violations],
                      {"violations": len(exc.violations)})
    return Report("check", "pass", data={"size": M.size, "unit": M.unit, "zero": M.zero})


def _cmd_classify(args) -> Report:
    M = formats.load_algebra(args.file)
    return Report("classify", "pass", data=classify(M).as_dict())


def _fset(F) -> list[int]:
    return sorted(F)


def _cmd_filters(args) -> Report:
    M = formats.load_algebra(args.file)
    fs = all_filters(M)
    data: dict = {"filters": [_fset(F) for F in fs],
                  "normal": [is_normal_filter(M, F) for F in fs]}
    status = "pass"
    witnesses = []
    if args.primes:
        rows = []
        for F in fs:
            if F.proper:
                rep = prime_tests(M, F)
                rows.append({"filter": _fset(F), "conditions": rep.conditions, "agree": rep.agree})
        data["primes"] = rows
    if args.values is not None:
        g = args.values
        if not 0 <= g < M.size:
            raise InputError(f"element {g} out of range", "values")
        data["values"] = [{"value": _fset(r.value), "cover": _fset(r.cover)} for r in values_of(M, g)]
    if args.minimal_primes:
        data["minimal_primes"] = [_fset(P) for P in minimal_primes(M)]
    if args.lattice:
        rep = filter_lattice(M)
        data["lattice"] = {"join": rep.join, "meet": rep.meet, "distributive": rep.distributive,
                           "infinite_law": rep.infinite_law}
        if not (rep.distributive and rep.infinite_law):
            status = "fail"
            witnesses.append(rep.witness or rep.family_witness)
    return Report("filters", status, witnesses, data)


def _cmd_rdp(args) -> Report:
    M = formats.load_algebra(args.file)
    data: dict = {}
    if args.witness:
        a, b, c = args.witness
        w = rdp_witness(M, a, b, c)
        data["witness"] = {"a": a, "b": b, "c": c, "b_prime": w.b_prime, "c_prime": w.c_prime}
    status, witnesses = "pass", []
    if args.verify or not args.witness:
        rep = verify_rdp(M)
        data["checked"] = rep.checked
        if not rep.passed:
            status, witnesses = "fail", [list(rep.failure)]
    return Report("rdp", status, witnesses, data, ["every pseudo hoop has the Riesz decomposition property"])


def _cmd_normal_valued(args) -> Report:
    M = formats.load_algebra(args.file)
    if not M.flags.basic:
        return Report("normal-valued", "inapplicable", data={"hypothesis": "basic"})
    data: dict = {}
    witnesses = []
    results = []
    if args.method in ("direct", "both"):
        v = is_normal_valued_direct(M)
        data["direct"] = v.holds
        results.append(v.holds)
        if not v:
            witnesses.append(["direct", *v.witness])
    if args.method in ("equational", "both"):
        v = equational_basis_check(M, args.nmax)
        data["equational"] = v.holds
        results.append(v.holds)
        if not v:
            witnesses.append(["equational", *v.witness])
    if len(set(results)) > 1:
        raise InconsistencyError("direct and equational decisions differ")
    return Report("normal-valued", "pass" if all(results) else "fail", witnesses, data,
                  ["normal-valued iff the equational basis holds"])


def _cmd_check_claim(args) -> Report:
    M = formats.load_algebra(args.file)
    rep = check_claim(M, args.claim, args.nmax)
    data = {"claim": rep.claim}
    if rep.hypothesis:
        data["hypothesis"] = rep.hypothesis
    return Report("check-claim", rep.status, [] if rep.witness is None else [list(rep.witness)],
                  data, [f"{rep.claim}: {rep.anchor}"])


def _cmd_holland(args) -> Report | bytes:
    M = formats.load_algebra(args.file)
    R = build_representation(M)
    if args.verify:
        rep = verify_representation(R)
        return Report("holland", "pass" if rep.passed else "fail",
                      [[p, list(w)] for p, w in rep.failures],
                      {"points": len(R.omega), "segments": len(R.omega.segments), "checks": rep.checks})
    return export_representation(R, args.out)


def _cmd_gen(args) -> Report | bytes:
    kind = args.kind
    if kind in ("lukasiewicz", "godel"):
        if len(args.params) != 1:
            raise InputError(f"gen {kind} takes one length", "params")
        try:
            n = int(args.params[0])
        except ValueError:
            raise InputError("chain length must be an integer", "params") from None
        if n < 1:
            raise InputError("chain length must be at least 1", "params")
        M = make_chain(kind, n)
    elif kind in ("product", "osum"):
        if len(args.params) != 2:
            raise InputError(f"gen {kind} takes two algebra files", "params")
        A, B = (formats.load_algebra(p) for p in args.params)
        M = direct_product(A, B) if kind == "product" else ordinal_sum(A, B)
    elif kind == "cone":
        model = ConeModel(args.dim, args.order)
        props = args.property or [p for p in SAMPLED_PROPERTIES]
        rows, status, witnesses = {}, "pass", []
        for p in props:
            r = sample_check(model, p, args.sample, args.box, args.seed)
            rows[p] = {"status": r.status, "passes": r.passes, "trials": r.trials}
            if r.status == "fail":
                status = "fail"
                witnesses.append([p, *r.counterexample])
        return Report("gen", status, witnesses,
                      {"dim": args.dim, "order": args.order, "seed": args.seed, "properties": rows})
    else:
        raise InputError(f"unknown generator {kind!r}", "kind")
    text = formats.dumps(M)
    if args.save:
        formats.save_algebra(M, args.save)
    return text.encode()


def _cmd_enumerate(args) -> Report | bytes:
    restrict = set()
    if args.basic:
        restrict.add("basic")
    if args.bounded:
        restrict.add("bounded")
    opts = EnumOptions(args.size, args.up_to_iso, frozenset(restrict))
    hoops = list(enumerate_hoops(opts))
    if args.count_only:
        return Report("enumerate", "pass", data={"size": args.size, "count": len(hoops)})
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        names = []
        for i, M in enumerate(hoops):
            h = key_hash(canonical_form(M))
            # labeled duplicates share a class hash; keep them apart
            name = f"{h}.json" if args.up_to_iso else f"{h}-{i}.json"
            formats.save_algebra(M, out / name)
            names.append(name)
        return Report("enumerate", "pass", data={"size": args.size, "count": len(hoops), "files": names})
    return "".join(formats.dumps(M) for M in hoops).encode()


def _cmd_q2(args) -> Report:
    res = q2_search(all_hoops(args.max_size), args.nmax)
    status = "fail" if res.inconsistencies or res.candidates else "pass"
    witnesses = [["inconsistency", formats.to_dict(M), d, e] for M, d, e in res.inconsistencies]
    witnesses += [["candidate", formats.to_dict(M)] for M in res.candidates]
    data = {"basic_checked": res.basic_checked, "skipped_non_basic": res.skipped_non_basic,
            "candidates": len(res.candidates), "inconsistencies": len(res.inconsistencies),
            "not_normal_valued_seen": res.direct_false_seen, "eq61_false_seen": res.eq61_false_seen}
    return Report("q2-search", status, witnesses, data,
                  ["is x²⊙y² ≤ y⊙x alone enough for normal-valuedness?"])


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable report")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--nmax", type=int, default=argparse.SUPPRESS,
                        help="power bound replacing 'for all n' (default: algebra size)")

    p = argparse.ArgumentParser(prog="pseudohoop", parents=[common],
                                description="Finite pseudo hoop workbench")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("check", parents=[common], help="validate an algebra file")
    s.add_argument("file")
    s.set_defaults(func=_cmd_check)

    s = sub.add_parser("classify", parents=[common], help="class flags")
    s.add_argument("file")
    s.set_defaults(func=_cmd_classify)

    s = sub.add_parser("filters", parents=[common], help="filter theory")
    s.add_argument("file")
    s.add_argument("--primes", action="store_true")
    s.add_argument("--values", type=int, metavar="G")
    s.add_argument("--minimal-primes", action="store_true")
    s.add_argument("--lattice", action="store_true")
    s.set_defaults(func=_cmd_filters)

    s = sub.add_parser("rdp", parents=[common], help="Riesz decomposition")
    s.add_argument("file")
    s.add_argument("--witness", type=int, nargs=3, metavar=("A", "B", "C"))
    s.add_argument("--verify", action="store_true")
    s.set_defaults(func=_cmd_rdp)

    s = sub.add_parser("normal-valued", parents=[common], help="decide normal-valuedness")
    s.add_argument("file")
    s.add_argument("--method", choices=("direct", "equational", "both"), default="both")
    s.set_defaults(func=_cmd_normal_valued)

    s = sub.add_parser("check-claim", parents=[common], help="check a catalogued statement")
    s.add_argument("file")
    s.add_argument("--claim", required=True, choices=CLAIM_IDS + tuple(CLAIM_ALIASES))
    s.set_defaults(func=_cmd_check_claim)

    s = sub.add_parser("holland", parents=[common], help="chain representation")
    s.add_argument("file")
    s.add_argument("--out", choices=("json", "dot"), default="json")
    s.add_argument("--verify", action="store_true")
    s.set_defaults(func=_cmd_holland)

    s = sub.add_parser("gen", parents=[common], help="construct algebras or sample cones")
    s.add_argument("kind", choices=("lukasiewicz", "godel", "product", "osum", "cone"))
    s.add_argument("params", nargs="*")
    s.add_argument("--save", metavar="PATH", help="also write the algebra to PATH")
    s.add_argument("--dim", type=int, default=2)
    s.add_argument("--order", choices=("pointwise", "lex"), default="pointwise")
    s.add_argument("--sample", type=int, default=1000)
    s.add_argument("--box", type=int, default=20)
    s.add_argument("--property", action="append", choices=SAMPLED_PROPERTIES)
    s.set_defaults(func=_cmd_gen)

    s = sub.add_parser("enumerate", parents=[common], help="all pseudo hoops of a size")
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--basic", action="store_true")
    s.add_argument("--bounded", action="store_true")
    s.add_argument("--up-to-iso", action="store_true")
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--out", metavar="DIR")
    s.set_defaults(func=_cmd_enumerate)

    s = sub.add_parser("q2-search", parents=[common], help="search for separating algebras")
    s.add_argument("--max-size", type=int, default=5)
    s.set_defaults(func=_cmd_q2)
    return p


def dispatch(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout.buffer
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    args.json = getattr(args, "json", False)
    args.seed = getattr(args, "seed", 0)
    args.nmax = getattr(args, "nmax", None)
    mode = "json" if args.json else "text"
    start = time.perf_counter()
    try:
        result = args.func(args)
    except (InputError, ContractError, AxiomError, ValueError) as exc:
        if isinstance(exc, InapplicableError):
            result = Report(args.verb, "inapplicable", data={"hypothesis": exc.hypothesis,
                                                             "message": str(exc)})
        elif isinstance(exc, AxiomError):
            result = Report(args.verb, "error",
                            [[v.axiom, list(v.witness)] for v in exc.violations[:20]],
                            {"message": str(exc)})
        else:
            data = {"message": str(exc)}
            if isinstance(exc, InputError) and exc.field:
                data["field"] = exc.field
                if exc.index is not None:
                    data["index"] = list(exc.index)
            result = Report(args.verb, "error", data=data)
    except InconsistencyError as exc:
        result = Report(args.verb, "error", data={"message": f"inconsistency: {exc}"})
    if isinstance(result, bytes):
        out.write(result)
        return 0
    result.timing = time.perf_counter() - start
    out.write(render(result, mode))
    return result.exit_code


def main() -> None:
    sys.exit(dispatch())
