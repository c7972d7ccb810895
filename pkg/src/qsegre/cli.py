"""Command line interface: one subcommand per computation, one verify verb
per identity, and a suite runner whose exit status is 0 exactly when every
check passes.  All JSON output has sorted keys and canonical rational
rendering, so identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import besselseries, exactalg, permstats, poset, subspace, symfrob

EL_MATRIX = ((2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2))
EL_SEGRE_MATRIX = ((2, 2), (2, 3), (3, 2))
CHAIN_MATRIX = EL_MATRIX
MOBIUS_MATRIX = ((2, 2), (2, 3), (2, 4), (3, 2), (3, 3))
BETTI_MATRIX = ((2, 2), (2, 3), (3, 2))


def prime_power(q: int) -> tuple[int, int]:
    """Split q as p^k with p prime, or reject."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k = 0
    rest = q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, k


_BNQ_CACHE: dict = {}


def _bnq(n: int, q: int, count_bound=None):
    key = ("b", n, q, count_bound)
    if key not in _BNQ_CACHE:
        field = subspace.field_make(*prime_power(q))
        _BNQ_CACHE[key] = subspace.build_bnq(n, field, count_bound)
    return _BNQ_CACHE[key]


def _segre(n: int, q: int, count_bound=None):
    key = ("s", n, q, count_bound)
    if key not in _BNQ_CACHE:
        field = subspace.field_make(*prime_power(q))
        _BNQ_CACHE[key] = subspace.build_segre_bnq(n, field, count_bound)
    return _BNQ_CACHE[key]


def _warn_raised_bound(name: str, value, default) -> None:
    if value is not None and value > default:
        print(f"warning: {name} raised to {value} (default {default}); "
              "expect a long runtime", file=sys.stderr)


def _ratfun_json(r: exactalg.QRationalFunction) -> dict:
    return {"num": exactalg.poly_coeff_strings(r.num),
            "den": exactalg.poly_coeff_strings(r.den)}


def _word_str(word: tuple) -> str:
    if word and isinstance(word[0], tuple):
        return "|".join(",".join(str(x) for x in pair) for pair in word)
    return "".join(str(x) for x in word)


def _parts_str(parts: tuple) -> str:
    return ",".join(str(x) for x in parts)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _chain_report_json(report: poset.ChainReport) -> dict:
    return {
        "words": {_word_str(w): c for w, c in report.by_label_word.items()},
        "increasing": report.increasing_count,
        "descending": report.descending_count,
        "total": report.total,
    }


# ---------------------------------------------------------------------------
# suite checks; top level so the process pool can pickle them

def _check_csv(max_n: int) -> dict:
    failures = [n for n in range(1, max_n + 1)
                if not permstats.verify_q_csv_identity(n).is_zero()]
    if failures:
        return {"check": "csv", "status": "FAIL",
                "detail": f"nonzero residual at n in {failures}"}
    return {"check": "csv", "status": "PASS",
            "detail": f"alternating identity residual zero for n=1..{max_n}"}


def _check_bessel(order: int) -> dict:
    flags = besselseries.verify_reciprocal(order)
    if not all(flags):
        bad = [i for i, ok in enumerate(flags) if not ok]
        return {"check": "bessel", "status": "FAIL",
                "detail": f"reciprocal coefficient mismatch at {bad}"}
    return {"check": "bessel", "status": "PASS",
            "detail": f"reciprocal coefficients match through order {order}"}


def _check_el(_arg=None) -> dict:
    for n, q in EL_MATRIX:
        ok, violation = poset.check_el_labeling(*_bnq(n, q))
        if not ok:
            return {"check": "el", "status": "FAIL",
                    "detail": f"lattice n={n} q={q}: {violation.reason}"}
    for n, q in EL_SEGRE_MATRIX:
        ok, violation = poset.check_el_labeling(*_segre(n, q))
        if not ok:
            return {"check": "el", "status": "FAIL",
                    "detail": f"segre n={n} q={q}: {violation.reason}"}
    return {"check": "el", "status": "PASS",
            "detail": f"every interval shellable on {len(EL_MATRIX)} lattices "
                      f"and {len(EL_SEGRE_MATRIX)} segre squares"}


def _check_chains(_arg=None) -> dict:
    import itertools
    for n, q in CHAIN_MATRIX:
        p, labeling = _bnq(n, q)
        report = poset.chain_report(p, labeling)
        expected = {}
        for img in itertools.permutations(range(1, n + 1)):
            expected[img] = q ** permstats.inversions(permstats.Permutation(img))
        if report.by_label_word != expected:
            return {"check": "chains", "status": "FAIL",
                    "detail": f"word counts differ from q^inv at n={n} q={q}"}
        total = exactalg.q_factorial(n).evaluate(q)
        if report.total != total:
            return {"check": "chains", "status": "FAIL",
                    "detail": f"total chains != q-factorial at n={n} q={q}"}
    return {"check": "chains", "status": "PASS",
            "detail": "per-word chain counts equal q^inv on the whole matrix"}


def _check_mobius(_arg=None) -> dict:
    for n, q in MOBIUS_MATRIX:
        sp, labeling = _segre(n, q)
        mu = poset.mobius_number(sp)
        descending = poset.chain_report(sp, labeling).descending_count
        w_q = int(permstats.w_polynomial(n).evaluate(q))
        if mu != (-1) ** n * w_q or descending != w_q:
            return {"check": "mobius", "status": "FAIL",
                    "detail": f"n={n} q={q}: mu={mu} descending={descending} W={w_q}"}
    return {"check": "mobius", "status": "PASS",
            "detail": "Mobius and descending counts match the pair polynomial"}


def _check_betti(_arg=None) -> dict:
    for n, q in BETTI_MATRIX:
        sp, _ = _segre(n, q)
        betti = poset.rational_betti_numbers(poset.proper_part(sp))
        w_q = int(permstats.w_polynomial(n).evaluate(q))
        if len(betti) != n - 1 or betti[-1] != w_q or any(betti[:-1]):
            return {"check": "betti", "status": "FAIL",
                    "detail": f"n={n} q={q}: betti={betti}, expected top {w_q}"}
    return {"check": "betti", "status": "PASS",
            "detail": "homology concentrated on top with the expected rank"}


def _check_hh_identity(max_n: int) -> dict:
    failures = [n for n in range(1, max_n + 1)
                if not symfrob.h_alternating_residual(n).is_zero()]
    if failures:
        return {"check": "thm31", "status": "FAIL",
                "detail": f"nonzero residual at n in {failures}"}
    return {"check": "thm31", "status": "PASS",
            "detail": f"homogeneous alternating residual zero for n=1..{max_n}"}


def _check_specialization(max_n: int) -> dict:
    failures = [n for n in range(1, max_n + 1)
                if not symfrob.verify_specialization_identity(n)]
    if failures:
        return {"check": "thm48", "status": "FAIL",
                "detail": f"specialization mismatch at n in {failures}"}
    return {"check": "thm48", "status": "PASS",
            "detail": f"specialized characteristic matches for n=1..{max_n}"}


def _check_induction(size_cap: int) -> dict:
    for k in range(size_cap + 1):
        for m in range(size_cap + 1 - k):
            for l in range(size_cap + 1):
                for n in range(size_cap + 1 - l):
                    if not symfrob.verify_induction_homomorphism(k, l, m, n):
                        return {"check": "prop26", "status": "FAIL",
                                "detail": f"sizes ({k},{l},{m},{n})"}
    return {"check": "prop26", "status": "PASS",
            "detail": f"homomorphism property for all sizes with sums <= {size_cap}"}


_SUITE = {
    "csv": _check_csv,
    "bessel": _check_bessel,
    "el": _check_el,
    "chains": _check_chains,
    "mobius": _check_mobius,
    "betti": _check_betti,
    "thm31": _check_hh_identity,
    "thm48": _check_specialization,
    "prop26": _check_induction,
}


def _run_suite_task(task: tuple) -> dict:
    name, arg = task
    return _SUITE[name](arg)


def _suite_tasks(max_n: int) -> list[tuple]:
    return [
        ("csv", 6),
        ("bessel", 5),
        ("el", None),
        ("chains", None),
        ("mobius", None),
        ("betti", None),
        ("thm31", max_n),
        ("thm48", max_n),
        ("prop26", 4),
    ]


# ---------------------------------------------------------------------------
# subcommand handlers

def _cmd_wq(args) -> int:
    _warn_raised_bound("enumeration bound", args.bound, permstats.ENUMERATION_BOUND)
    bound = args.bound if args.bound is not None else permstats.ENUMERATION_BOUND
    if args.n <= bound:
        polynomial = permstats.w_polynomial(args.n, bound=bound)
        method = "enumeration"
    else:
        polynomial = permstats.w_polynomial_recurrence(args.n, bound=bound)
        method = "recurrence"
        print(f"note: W_{args.n}(q) is recurrence-derived "
              f"(enumeration bound {bound})", file=sys.stderr)
    if args.at is not None:
        print(polynomial.evaluate(args.at))
        return 0
    if args.json:
        print(_dump({"n": args.n, "coeffs": exactalg.poly_coeff_strings(polynomial),
                     "method": method}))
    else:
        print(json.dumps(exactalg.poly_coeff_strings(polynomial)))
    return 0


def _cmd_qbinom(args) -> int:
    polynomial = permstats.q_binomial(args.n, args.k)
    if args.at is not None:
        print(polynomial.evaluate(args.at))
        return 0
    if args.json:
        print(_dump({"n": args.n, "k": args.k,
                     "coeffs": exactalg.poly_coeff_strings(polynomial)}))
    else:
        print(json.dumps(exactalg.poly_coeff_strings(polynomial)))
    return 0


def _cmd_bessel(args) -> int:
    data = besselseries.bessel_coefficients(args.order)
    checks = besselseries.verify_reciprocal(args.order)
    print(_dump({
        "order": args.order,
        "f": [_ratfun_json(c) for c in data.f.coeffs],
        "f_inv": [_ratfun_json(c) for c in data.f_inv.coeffs],
        "checks": checks,
    }))
    return 0 if all(checks) else 1


def _cmd_lattice(args) -> int:
    count_bound = getattr(args, "count_bound", None)
    _warn_raised_bound("subspace count bound", count_bound,
                       subspace.SUBSPACE_COUNT_BOUND)
    builder = _segre if getattr(args, "segre", False) else _bnq
    p, labeling = builder(args.n, args.q, count_bound)
    doc = {"poset": poset.to_interchange(p, labeling)}
    if args.chains:
        doc["chains"] = _chain_report_json(poset.chain_report(p, labeling))
    if args.check_el:
        ok, violation = poset.check_el_labeling(p, labeling)
        doc["el"] = {"pass": ok,
                     "violation": None if ok else violation.reason}
    if args.json:
        print(_dump(doc))
    else:
        kind = "segre square" if getattr(args, "segre", False) else "lattice"
        print(f"{kind} n={args.n} q={args.q}: {len(p)} elements, "
              f"rank sizes {p.rank_sizes()}")
        if args.chains:
            report = doc["chains"]
            for word in sorted(report["words"]):
                print(f"  chain word {word}: {report['words'][word]}")
            print(f"  total={report['total']} increasing={report['increasing']} "
                  f"descending={report['descending']}")
        if args.check_el:
            print(f"  EL check: {'PASS' if doc['el']['pass'] else 'FAIL'}")
    if args.check_el and not doc["el"]["pass"]:
        return 1
    return 0


def _cmd_segre(args) -> int:
    args.segre = True
    return _cmd_lattice(args)


def _cmd_mobius(args) -> int:
    count_bound = getattr(args, "count_bound", None)
    _warn_raised_bound("subspace count bound", count_bound,
                       subspace.SUBSPACE_COUNT_BOUND)
    p, _ = (_segre if args.segre else _bnq)(args.n, args.q, count_bound)
    value = poset.mobius_number(p)
    if args.json:
        print(_dump({"n": args.n, "q": args.q, "segre": args.segre,
                     "mobius": value}))
    else:
        print(value)
    return 0


def _cmd_betti(args) -> int:
    count_bound = getattr(args, "count_bound", None)
    _warn_raised_bound("subspace count bound", count_bound,
                       subspace.SUBSPACE_COUNT_BOUND)
    p, _ = (_segre if args.segre else _bnq)(args.n, args.q, count_bound)
    betti = poset.rational_betti_numbers(poset.proper_part(p))
    if args.json:
        print(_dump({"n": args.n, "q": args.q, "segre": args.segre,
                     "betti": betti}))
    else:
        print(json.dumps(betti))
    return 0


def _cmd_frobenius(args) -> int:
    table = symfrob.lefschetz_character(args.n)
    characteristic = symfrob.homology_characteristic(args.n)
    specialized = symfrob.principal_specialization(characteristic)
    doc = {
        "character": {f"{_parts_str(mu)}|{_parts_str(lam)}": v
                      for (mu, lam), v in table.values.items()},
        "ch": {f"{_parts_str(mu)}|{_parts_str(lam)}": str(c)
               for (mu, lam), c in characteristic.terms.items()},
        "ps": str(specialized),
    }
    print(_dump(doc))
    return 0


def _print_results(results: list[dict], as_json: bool) -> int:
    ok = all(r["status"] == "PASS" for r in results)
    if as_json:
        print(_dump({"checks": results, "status": "PASS" if ok else "FAIL"}))
    else:
        for r in results:
            print(f"{r['status']} {r['check']}: {r['detail']}")
    return 0 if ok else 1


def _cmd_verify_csv(args) -> int:
    residual = permstats.verify_q_csv_identity(args.n)
    ok = residual.is_zero()
    if args.json:
        print(_dump({"check": "csv", "n": args.n,
                     "residual": exactalg.poly_coeff_strings(residual),
                     "status": "PASS" if ok else "FAIL"}))
    else:
        print(f"{'PASS' if ok else 'FAIL'} csv n={args.n}: residual={residual}")
    return 0 if ok else 1


def _cmd_verify_bessel(args) -> int:
    return _print_results([_check_bessel(args.order)], args.json)


def _cmd_verify_el(args) -> int:
    p, labeling = (_segre if args.segre else _bnq)(args.n, args.q)
    ok, violation = poset.check_el_labeling(p, labeling)
    kind = "segre" if args.segre else "lattice"
    detail = "every interval shellable" if ok else violation.reason
    return _print_results([{"check": "el", "status": "PASS" if ok else "FAIL",
                            "detail": f"{kind} n={args.n} q={args.q}: {detail}"}],
                          args.json)


def _cmd_verify_mobius(args) -> int:
    sp, labeling = _segre(args.n, args.q)
    mu = poset.mobius_number(sp)
    descending = poset.chain_report(sp, labeling).descending_count
    w_q = int(permstats.w_polynomial(args.n).evaluate(args.q))
    ok = mu == (-1) ** args.n * w_q and descending == w_q
    detail = f"mu={mu} descending={descending} expected W={w_q}"
    return _print_results([{"check": "mobius", "status": "PASS" if ok else "FAIL",
                            "detail": detail}], args.json)


def _cmd_verify_thm31(args) -> int:
    residual = symfrob.h_alternating_residual(args.n)
    ok = residual.is_zero()
    detail = "residual zero" if ok else f"residual {residual!r}"
    return _print_results([{"check": "thm31", "status": "PASS" if ok else "FAIL",
                            "detail": f"n={args.n}: {detail}"}], args.json)


def _cmd_verify_thm48(args) -> int:
    ok = symfrob.verify_specialization_identity(args.n)
    return _print_results([{"check": "thm48", "status": "PASS" if ok else "FAIL",
                            "detail": f"n={args.n}"}], args.json)


def _cmd_verify_prop26(args) -> int:
    try:
        k, l, m, n = (int(x) for x in args.sizes.split(","))
    except ValueError:
        print("--sizes expects four comma-separated integers k,l,m,n",
              file=sys.stderr)
        return 2
    ok = symfrob.verify_induction_homomorphism(k, l, m, n)
    return _print_results([{"check": "prop26", "status": "PASS" if ok else "FAIL",
                            "detail": f"sizes ({k},{l},{m},{n})"}], args.json)


def _cmd_verify_all(args) -> int:
    tasks = _suite_tasks(args.max_n)
    if args.threads > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            results = list(pool.map(_run_suite_task, tasks))
    else:
        results = [_run_suite_task(t) for t in tasks]
    return _print_results(results, args.json)


def _add_json_flag(p) -> None:
    p.add_argument("--json", action="store_true",
                   help="emit machine-readable JSON with sorted keys")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsegre",
        description="Exact computations and identity checks for Segre "
                    "products of subset and subspace lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wq", help="pair polynomial W_n(q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--at", type=int, help="evaluate at this integer q")
    p.add_argument("--bound", type=int,
                   help="override the enumeration bound (larger n fall back "
                        "to the recurrence; expect long runtimes)")
    _add_json_flag(p)
    p.set_defaults(func=_cmd_wq)

    p = sub.add_parser("qbinom", help="Gaussian binomial [n choose k]_q")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--at", type=int)
    _add_json_flag(p)
    p.set_defaults(func=_cmd_qbinom)

    p = sub.add_parser("bessel", help="alternating series and its reciprocal")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=_cmd_bessel)

    for name, handler in (("lattice", _cmd_lattice), ("segre", _cmd_segre)):
        p = sub.add_parser(name, help=f"build the {'Segre square' if name == 'segre' else 'subspace lattice'}")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        if name == "lattice":
            p.add_argument("--segre", action="store_true",
                           help="build the Segre square instead")
        p.add_argument("--chains", action="store_true",
                       help="tally maximal chains by label word")
        p.add_argument("--check-el", dest="check_el", action="store_true",
                       help="run the shelling check")
        p.add_argument("--count-bound", dest="count_bound", type=int,
                       help="override the subspace count bound")
        _add_json_flag(p)
        p.set_defaults(func=handler)

    p = sub.add_parser("mobius", help="Mobius number of the bounded poset")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--segre", action="store_true")
    p.add_argument("--count-bound", dest="count_bound", type=int,
                   help="override the subspace count bound")
    _add_json_flag(p)
    p.set_defaults(func=_cmd_mobius)

    p = sub.add_parser("betti", help="rational Betti numbers of the proper part")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--segre", action="store_true")
    p.add_argument("--count-bound", dest="count_bound", type=int,
                   help="override the subspace count bound")
    _add_json_flag(p)
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("frobenius",
                       help="homology character, characteristic, specialization")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_frobenius)

    v = sub.add_parser("verify", help="identity checks (exit 0 iff PASS)")
    vsub = v.add_subparsers(dest="check", required=True)

    p = vsub.add_parser("csv", help="alternating Gaussian-square identity")
    p.add_argument("--n", type=int, required=True)
    _add_json_flag(p)
    p.set_defaults(func=_cmd_verify_csv)

    p = vsub.add_parser("bessel", help="reciprocal series coefficients")
    p.add_argument("--order", type=int, default=5)
    _add_json_flag(p)
    p.set_defaults(func=_cmd_verify_bessel)

    p = vsub.add_parser("el", help="shelling property of the edge labeling")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--segre", action="store_true")
    _add_json_flag(p)
    p.set_defaults(func=_cmd_verify_el)

    p = vsub.add_parser("mobius", help="Mobius number of the Segre square")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    _add_json_flag(p)
    p.set_defaults(func=_cmd_verify_mobius)

    p = vsub.add_parser("thm31", help="alternating homogeneous identity "
                                      "for the homology characteristics")
    p.add_argument("--n", type=int, required=True)
    _add_json_flag(p)
    p.set_defaults(func=_cmd_verify_thm31)

    p = vsub.add_parser("thm48", help="principal specialization identity")
    p.add_argument("--n", type=int, required=True)
    _add_json_flag(p)
    p.set_defaults(func=_cmd_verify_thm48)

    p = vsub.add_parser("prop26", help="characteristic of induction products")
    p.add_argument("--sizes", type=str, required=True,
                   help="four comma-separated sizes k,l,m,n")
    _add_json_flag(p)
    p.set_defaults(func=_cmd_verify_prop26)

    p = vsub.add_parser("all", help="run the whole suite")
    p.add_argument("--max-n", dest="max_n", type=int, default=4,
                   help="upper bound for the symmetric-function checks")
    p.add_argument("--threads", type=int, default=1,
                   help="run independent checks in this many processes")
    _add_json_flag(p)
    p.set_defaults(func=_cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
