"""Command-line front end.

Exit codes: 0 success, 1 a checked claim failed, 2 usage error, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from math import gcd

from . import dickson, gf2n, gf2poly, resultant, scan as scanmod, spectra
from . import families as fam

log = logging.getLogger("apnlike")

EXIT_OK, EXIT_CLAIM, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _record_text(rec: spectra.ClassificationRecord) -> str:
    d = rec.to_dict()
    return "\n".join(f"{k}: {json.dumps(v)}" for k, v in d.items())


def cmd_field(args, parser) -> int:
    f = gf2n.make_field(args.n, args.modulus)
    info = {
        "n": f.n,
        "modulus": hex(f.modulus),
        "modulus_poly": gf2poly.to_str(f.modulus),
        "irreducible": gf2poly.is_irreducible(f.modulus),
        "tables": f.has_tables,
        "generator": f.generator,
    }
    if args.format == "json":
        print(json.dumps(info))
    else:
        for k, v in info.items():
            print(f"{k}: {v}")
    return EXIT_OK


def cmd_analyze(args, parser) -> int:
    if args.d < 1:
        parser.error("exponent must be >= 1")
    if args.bu and args.n > spectra.BOOMERANG_MAX_DEGREE:
        print(f"refusing: boomerang pass limited to n <= {spectra.BOOMERANG_MAX_DEGREE}", file=sys.stderr)
        return EXIT_BUDGET
    f = gf2n.make_field(args.n, args.modulus)
    rec = spectra.classify(f, args.d, with_bu=args.bu)
    print(json.dumps(rec.to_dict()) if args.format == "json" else _record_text(rec))
    return EXIT_OK


def cmd_scan(args, parser) -> int:
    try:
        scanmod.check_budget(args.n, args.bu)
    except scanmod.BudgetError as exc:
        print(f"refusing: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    report = scanmod.scan(args.n, args.bu, workers=args.threads, modulus=args.modulus)
    if args.format == "csv":
        _emit(report.to_csv().rstrip("\n"), args.out)
    elif args.format == "json":
        _emit(report.to_json(), args.out)
    else:
        lines = [f"n={report.n} modulus={report.modulus:#x} cosets={len(report.rows)}"]
        for r in report.rows:
            lines.append(
                f"{r.coset_rep:>6} du={r.du:<5} bu={'-' if r.bu is None else r.bu:<5} "
                f"apn={int(r.is_apn)} loc={int(r.is_locally_apn)} zero={int(r.is_zero_apn)} "
                f"perm={int(r.is_permutation)} {','.join(r.matched_families)}"
            )
        lines.append("summary: " + json.dumps(report.summary))
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def _observed(rec: spectra.ClassificationRecord) -> dict[str, bool]:
    return {
        "apn": rec.is_apn,
        "zero_apn": rec.is_zero_apn,
        "locally_apn": rec.is_locally_apn,
        "bu2": rec.bu == 2,
    }


def cmd_verify(args, parser) -> int:
    try:
        spec = fam.get_family(args.family)
    except KeyError as exc:
        parser.error(str(exc.args[0]))
    if args.bu and args.n > spectra.BOOMERANG_MAX_DEGREE:
        print(f"refusing: boomerang pass limited to n <= {spectra.BOOMERANG_MAX_DEGREE}", file=sys.stderr)
        return EXIT_BUDGET
    try:
        exps = fam.gen_exponents(spec, args.n)
    except fam.FamilyShapeError as exc:
        parser.error(str(exc))
    claims = [c for c in spec.claims if c != "bu2" or args.bu]
    f = gf2n.make_field(args.n)
    ok = True
    results = []
    for d, params in exps:
        rec = spectra.classify(f, d, with_bu=args.bu, families=False)
        seen = _observed(rec)
        failed = [c for c in claims if not seen[c]]
        ok &= not failed
        results.append({"d": d, "params": params, "du": rec.du, "bu": rec.bu,
                        "apn": rec.is_apn, "locally_apn": rec.is_locally_apn,
                        "zero_apn": rec.is_zero_apn, "failed": failed})
    if args.format == "json":
        print(json.dumps({"family": spec.name, "n": args.n, "claims": claims,
                          "ok": ok, "exponents": results}))
    else:
        print(f"family {spec.name} ({spec.formula}; {spec.conditions}) n={args.n} checking {', '.join(claims)}")
        for r in results:
            status = "FAIL " + ",".join(r["failed"]) if r["failed"] else "ok"
            bu = "" if r["bu"] is None else f" bu={r['bu']}"
            print(f"  d={r['d']} {r['params']} du={r['du']}{bu} apn={r['apn']} "
                  f"locally_apn={r['locally_apn']} zero_apn={r['zero_apn']}  {status}")
        if not results:
            print("  (no exponent satisfies the side conditions at this n)")
        print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_CLAIM


def _int_list(text: str) -> list[int]:
    return sorted(int(t) for t in text.split(",") if t.strip()) if text else []


def cmd_coverage(args, parser) -> int:
    try:
        claim = scanmod.Claim.parse(args.claim)
    except scanmod.ClaimError as exc:
        parser.error(str(exc))
    with_bu = args.bu or claim.needs_bu
    try:
        scanmod.check_budget(args.n, with_bu)
    except scanmod.BudgetError as exc:
        print(f"refusing: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    names = args.families.split(",") if args.families else None
    if names:
        for name in names:
            if name not in fam.CATALOG:
                parser.error(f"unknown family {name!r}")
    if args.closure and (names or args.with_inverses or claim.text.replace(" ", "") != "locally_apn&!apn"):
        parser.error("--closure applies only to the claim 'locally_apn & !apn' without --families")
    report = scanmod.scan(args.n, with_bu, workers=args.threads)
    if args.closure:
        cov = scanmod.explained_locally_apn(report)
    else:
        cov = scanmod.coverage(report, claim, names, with_inverses=args.with_inverses)
    expected = _int_list(args.expect_unexplained)
    ok = sorted(cov.unexplained) == expected
    if args.format == "json":
        print(json.dumps({"n": args.n, "claim": cov.claim, "families": cov.families,
                          "satisfying": cov.satisfying, "explained": cov.explained,
                          "unexplained": cov.unexplained, "expected_unexplained": expected, "ok": ok}))
    else:
        print(f"n={args.n} claim: {cov.claim}  families: {','.join(cov.families)}")
        print(f"satisfying cosets: {cov.satisfying}")
        for rep, hits in cov.explained.items():
            print(f"  {rep}: {','.join(hits)}")
        print(f"unexplained: {cov.unexplained} (expected {expected})")
        print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_CLAIM


def cmd_dickson(args, parser) -> int:
    if args.check_t1:
        if args.m is None or args.j is None:
            parser.error("--check-t1 needs --m and --j")
        if args.j < 1 or not 2 <= args.m <= gf2n.MAX_DEGREE:
            parser.error("need j >= 1 and 2 <= m <= 24")
        f = gf2n.make_field(args.m)
        verdict = dickson.dickson_permutes_t1(f, args.m, args.j)
        g = gcd(args.j, (1 << args.m) + 1)
        print(f"m={args.m} j={args.j} permutes_T1={verdict} gcd(j,2^m+1)={g} criterion={g == 1}")
        return EXIT_OK if verdict == (g == 1) else EXIT_CLAIM
    if args.n is None or args.k is None:
        parser.error("need --check-t1 with --m/--j, or --n/--k [--a] for the field check")
    if args.k < 1:
        parser.error("k must be >= 1")
    f = gf2n.make_field(args.n)
    if not 1 <= args.a < f.order:
        parser.error("a must be a nonzero field element")
    verdict = dickson.dickson_permutes_field(f, args.k, args.a)
    g = gcd(args.k, (1 << 2 * args.n) - 1)
    print(f"n={args.n} k={args.k} a={args.a} permutes_field={verdict} "
          f"gcd(k,2^(2n)-1)={g} criterion={g == 1}")
    if args.coeffs:
        c = dickson.dickson_coeffs(args.k)
        print("D_k(x,a) = " + " + ".join(resultant._monomial(i, 0) + ("" if j == 0 else f"*a^{j}" if j > 1 else "*a")
                                         for i, j in c.terms))
    return EXIT_OK if verdict == (g == 1) else EXIT_CLAIM


def cmd_resultant(args, parser) -> int:
    try:
        fp = resultant.parse_bpoly(args.f)
        gp = resultant.parse_bpoly(args.g)
        expect = resultant.parse_factored(args.expect) if args.expect else None
    except ValueError as exc:
        parser.error(str(exc))
    res = resultant.resultant_y(fp, gp)
    print(res)
    if expect is not None:
        if res == expect:
            print("matches expected factored form")
            return EXIT_OK
        print(f"MISMATCH: expected {expect}", file=sys.stderr)
        return EXIT_CLAIM
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="apnlike", description="Differential and boomerang properties of power maps over GF(2^n).")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats=("text", "json")):
        sp.add_argument("--format", choices=formats, default="text")

    sp = sub.add_parser("field", help="show the field construction for GF(2^n)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--modulus", type=lambda s: int(s, 0))
    common(sp)
    sp.set_defaults(func=cmd_field, subparser=sp)

    sp = sub.add_parser("analyze", help="classify one exponent")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--bu", action="store_true", help="also compute boomerang uniformity")
    sp.add_argument("--modulus", type=lambda s: int(s, 0))
    common(sp)
    sp.set_defaults(func=cmd_analyze, subparser=sp)

    sp = sub.add_parser("scan", help="classify every cyclotomic coset")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--bu", action="store_true")
    sp.add_argument("--out")
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--modulus", type=lambda s: int(s, 0))
    common(sp, ("text", "json", "csv"))
    sp.set_defaults(func=cmd_scan, subparser=sp)

    sp = sub.add_parser("verify", help="check a catalog family's claim")
    sp.add_argument("family", help=", ".join(fam.CATALOG))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--bu", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_verify, subparser=sp)

    sp = sub.add_parser("coverage", help="which cosets with a property are explained by families")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--claim", required=True, help="e.g. 'locally_apn & !apn' or 'bu=2 & !apn'")
    sp.add_argument("--families", help="comma-separated family names (default: by claim kind)")
    sp.add_argument("--expect-unexplained", default="", help="comma-separated coset reps expected unexplained")
    sp.add_argument("--closure", action="store_true",
                    help="explain by f1 shape (any m), f2, reciprocity pairs and linear maps")
    sp.add_argument("--with-inverses", action="store_true",
                    help="also count a permutation exponent whose inverse coset meets a family")
    sp.add_argument("--bu", action="store_true")
    sp.add_argument("--threads", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_coverage, subparser=sp)

    sp = sub.add_parser("dickson", help="Dickson permutation criteria")
    sp.add_argument("--m", type=int)
    sp.add_argument("--j", type=int)
    sp.add_argument("--check-t1", action="store_true")
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--a", type=int, default=1)
    sp.add_argument("--coeffs", action="store_true")
    sp.set_defaults(func=cmd_dickson, subparser=sp)

    sp = sub.add_parser("resultant", help="resultant in y of two polynomials over GF(2)")
    sp.add_argument("--f", required=True)
    sp.add_argument("--g", required=True)
    sp.add_argument("--expect", help="factored form, e.g. 'x^2*(x+1)^2'")
    sp.set_defaults(func=cmd_resultant, subparser=sp)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args, args.subparser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except gf2n.FieldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
