"""Command-line front end: ``slce-lab {gen,corr,multipliers,verify-paper,family}``.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from math import gcd

import numpy as np

from . import export, seq
from ._nt import phi
from .ads import multiplier_group_brute
from .corr import check_bound, correlation, predicted_slce_offphase
from .errors import HypothesisViolated, SlceLabError
from .gf import make_field
from .mult import prove_trivial, slce_set
from .verify import CHECKS, SECTIONS, Config, run_checks

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3
FORMATS = ("json", "csv", "tsv", "text")


class UsageError(Exception):
    pass


def _json_default(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.floating):
        return float(o)
    if isinstance(o, (set, frozenset, tuple, np.ndarray)):
        return list(o)
    raise TypeError(f"cannot serialise {type(o).__name__}")


def _to_json(obj) -> str:
    return json.dumps(obj, indent=2, default=_json_default) + "\n"


def _set_workers(n):
    if n is None:
        return
    if n < 1:
        raise UsageError("--workers must be positive")
    try:
        import numba
    except ImportError:
        return
    numba.set_num_threads(min(n, numba.config.NUMBA_NUM_THREADS))


# commands -----------------------------------------------------------------

def cmd_gen(args):
    F = make_field(args.p, args.d, args.seed)
    s = seq.gen_sidelnikov(F, args.M)
    doc = export.sequence_to_dict(s)
    doc["field"] = F.descriptor()
    fmt = args.format
    if fmt == "csv":
        return export.sequences_to_csv([s]), EXIT_OK
    if fmt == "tsv":
        return export.table_to_tsv(["i", "s"], enumerate(doc["terms"])), EXIT_OK
    if fmt == "text":
        return (f"GF({F.q}) alpha={F.alpha_coeffs} M={args.M} period={s.period}\n"
                + " ".join(map(str, doc["terms"])) + "\n"), EXIT_OK
    return _to_json(doc), EXIT_OK


def _corr_pair(args, F, warnings):
    s = seq.gen_sidelnikov(F, args.M)
    v = s.period
    if args.auto:
        return s, s, None

    t1, t2 = args.t1 % v, args.t2 % v
    c1, c2 = args.c1, args.c2
    for name, t in (("t1", t1), ("t2", t2)):
        if gcd(t, v) != 1:
            warnings.append(f"{name}={t}: decimation not a unit mod {v}, no multiplier semantics")
    if any("not a unit" in w for w in warnings):
        a = seq.const_mul(c1, seq.decimate(s, t1))
        b = seq.const_mul(c2, seq.decimate(s, t2))
        return a, b, None

    half = v // 2
    if t1 == 1 and t2 == v - 1 and v > 2:
        # s and s[-1] are the members u_{c1,0;0} and v_{0,c2;0} of the M family
        return seq.u_member(s, c1, 0, 0), seq.v_member(s, 0, c2, 0), "family_M"
    a = seq.const_mul(c1, seq.decimate(s, t1))
    b = seq.const_mul(c2, seq.decimate(s, t2))
    if t1 == t2 == 1:
        return a, b, "good"
    if (args.M == 2 and F.q % 4 == 1 and t1 == 1 and c1 == c2 == 1
            and t2 in ((half - 1) % v, (half + 1) % v)):
        return a, b, "weak"
    return a, b, "weil_decimation"


def cmd_corr(args):
    if args.auto and any(x is not None for x in (args.t1, args.t2, args.c1, args.c2)):
        raise UsageError("--auto cannot be combined with --t1/--t2/--c1/--c2")
    if not args.auto:
        args.t1 = 1 if args.t1 is None else args.t1
        args.t2 = 1 if args.t2 is None else args.t2
        args.c1 = 1 if args.c1 is None else args.c1
        args.c2 = 1 if args.c2 is None else args.c2
    F = make_field(args.p, args.d, args.seed)
    warnings = []
    a, b, kind = _corr_pair(args, F, warnings)
    spec = correlation(a, b)
    doc = {"spectrum": spec.to_dict(), "bound": None, "warnings": warnings}
    if kind is not None:
        try:
            doc["bound"] = check_bound(a, b, kind).to_dict()
        except HypothesisViolated as exc:
            warnings.append(f"no bound applies ({kind}): {exc}")
    if args.auto and args.M == 2:
        doc["predicted_offphase"] = sorted(predicted_slce_offphase(F.q))
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)

    fmt = args.format
    if fmt in ("csv", "tsv"):
        header, rows = export.spectrum_rows(doc["spectrum"])
        if fmt == "csv":
            return export.table_to_csv(header, rows), EXIT_OK
        return export.table_to_tsv(header, rows), EXIT_OK
    if fmt == "text":
        lines = [f"pair: {spec.pair[0]}  vs  {spec.pair[1]}",
                 f"values: {doc['spectrum']['values']}" if args.M == 2
                 else f"|C|: {[round(float(m), 6) for m in spec.magnitudes()]}",
                 f"max off-phase |C| = {spec.max_offphase_magnitude:.6g}"]
        bd = doc["bound"]
        if bd:
            lines.append(f"bound {bd['kind']}: {bd['max']:.6g} <= {bd['bound']:.6g} "
                         f"{'holds' if bd['holds'] else 'VIOLATED'}")
        return "\n".join(lines) + "\n", EXIT_OK
    return _to_json(doc), EXIT_OK


def cmd_multipliers(args):
    q = args.p ** args.d
    make_field(args.p, args.d)  # validates p and d
    if args.mode == "brute":
        rep = multiplier_group_brute(slce_set(q))
        doc = {"p": args.p, "d": args.d, "mode": "brute",
               "verdict": "trivial" if rep.group == (1 % rep.v,) else "nontrivial",
               **rep.to_dict()}
        rows = [[e["t"], e["verdict"], e.get("witness", "")] for e in doc["evidence"]]
        header = ["t", "verdict", "witness"]
    else:
        if args.d != 1:
            raise HypothesisViolated("pipeline mode covers prime fields only (d = 1)")
        doc = {"mode": "pipeline", **prove_trivial(args.p, args.strategy).to_dict()}
        rows = [[c["t"], c["method"], c.get("witness", "")] for c in doc["candidates"]]
        header = ["t", "method", "witness"]

    fmt = args.format
    if fmt == "csv":
        return export.table_to_csv(header, rows), EXIT_OK
    if fmt == "tsv":
        return export.table_to_tsv(header, rows), EXIT_OK
    if fmt == "text":
        out = f"GF({q}) {args.mode}: {doc['verdict']}, group {doc['group']}\n"
        if doc.get("survivors"):
            out += f"survivors of the stabiliser test: {doc['survivors']}\n"
        return out, EXIT_OK
    return _to_json(doc), EXIT_OK


def cmd_verify(args):
    names = None
    if args.sections:
        names = [n.strip() for n in args.sections.split(",") if n.strip()]
        unknown = [n for n in names if n not in SECTIONS]
        if unknown:
            raise UsageError(f"unknown sections {unknown}; choose from {sorted(SECTIONS)}")
    cfg = Config(seed=args.seed or 0)
    if args.max_p is not None:
        cfg.max_p = args.max_p
        cfg.f1_max_p = min(cfg.f1_max_p, args.max_p)
    if args.max_q is not None:
        cfg.max_q = args.max_q
    if args.pair_budget is not None:
        cfg.pair_budget = args.pair_budget
    results = run_checks(names, cfg)
    passed = all(r.passed for r in results)
    checks = []
    for r in results:
        d = r.to_dict()
        if not args.timings:
            d.pop("seconds")
        checks.append(d)
    doc = {"passed": passed, "config": vars(cfg), "checks": checks}
    for r in results:
        if not r.passed:
            print(f"FAILED check {r.name} (criterion {r.criterion}): {r.summary}", file=sys.stderr)
    code = EXIT_OK if passed else EXIT_VERIFY

    fmt = args.format
    header = ["name", "criterion", "passed", "summary"] + (["seconds"] if args.timings else [])
    rows = [[c["name"], c["criterion"], c["passed"], c["summary"]]
            + ([c["seconds"]] if args.timings else []) for c in checks]
    if fmt == "csv":
        return export.table_to_csv(header, rows), code
    if fmt == "tsv":
        return export.table_to_tsv(header, rows), code
    if fmt == "text":
        lines = [f"{'PASS' if c['passed'] else 'FAIL'}  [{c['criterion']:>2}] {c['name']}: "
                 f"{c['summary']}" + (f" ({c['seconds']:.1f}s)" if args.timings else "")
                 for c in checks]
        lines.append(f"{sum(c['passed'] for c in checks)}/{len(checks)} checks passed")
        return "\n".join(lines) + "\n", code
    return _to_json(doc), code


def cmd_family(args):
    F = make_field(args.p, args.d, args.seed)
    q = F.q
    if args.kind == "F1":
        if args.d != 1:
            raise HypothesisViolated("F1 is defined over prime fields (d = 1)")
        if args.M not in (None, 2):
            raise UsageError("F1 is binary; --M must be 2 or omitted")
        M = 2
        fam = seq.build_family_F1(F)
        expected = phi(q - 1)
    else:
        M = 2 if args.M is None else args.M
        if args.kind == "L":
            fam = seq.build_family_L(F, M)
            expected = seq.family_L_size(q, M)
        else:
            fam = seq.build_family_M(F, M)
            expected = seq.family_M_size(q, M)
    doc = {"p": args.p, "d": args.d, "M": M, "kind": args.kind, "size": len(fam),
           "expected_size": expected}
    if args.kind == "F1":
        doc["pairwise_shift_inequivalent"] = all(
            seq.shift_equivalent(fam[i], fam[j]) is None
            for i in range(len(fam)) for j in range(i + 1, len(fam)))
    doc["sequences"] = [export.sequence_to_dict(s) for s in fam]

    fmt = args.format
    if fmt == "csv":
        return export.sequences_to_csv(fam), EXIT_OK
    if fmt == "tsv":
        rows = [[s.provenance.label(), "".join(map(str, s.terms)) if M <= 10
                 else ",".join(map(str, s.terms))] for s in fam]
        return export.table_to_tsv(["member", "terms"], rows), EXIT_OK
    if fmt == "text":
        out = f"{args.kind} over GF({q}), M={M}: {len(fam)} sequences (closed form {expected})\n"
        if "pairwise_shift_inequivalent" in doc:
            out += f"pairwise shift-inequivalent: {doc['pairwise_shift_inequivalent']}\n"
        return out, EXIT_OK
    return _to_json(doc), EXIT_OK


# parser -------------------------------------------------------------------

def _common(p):
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--output", "-o", help="write to this file instead of stdout")
    p.add_argument("--workers", type=int, help="numba thread count (output does not depend on it)")
    p.add_argument("--seed", type=int, default=None, help="primitive element index / sampling seed")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings")


def _field_args(p, need_M=True):
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--d", type=int, default=1)
    if need_M:
        p.add_argument("--M", type=int, default=2)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slce-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a Sidelnikov sequence")
    _field_args(g)
    _common(g)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("corr", help="periodic correlation with the applicable bound")
    _field_args(c)
    c.add_argument("--auto", action="store_true", help="autocorrelation of s")
    c.add_argument("--t1", type=int, help="decimation of the first sequence (default 1)")
    c.add_argument("--t2", type=int, help="decimation of the second sequence (default 1)")
    c.add_argument("--c1", type=int, help="constant multiple of the first sequence (default 1)")
    c.add_argument("--c2", type=int, help="constant multiple of the second sequence (default 1)")
    _common(c)
    c.set_defaults(func=cmd_corr)

    m = sub.add_parser("multipliers", help="multiplier group of the SLCE set")
    _field_args(m, need_M=False)
    m.add_argument("--mode", choices=("brute", "pipeline"), default="pipeline")
    m.add_argument("--strategy", choices=("akiyama", "nec"), default="akiyama")
    _common(m)
    m.set_defaults(func=cmd_multipliers)

    v = sub.add_parser("verify-paper", help="run every reproducibility check")
    v.add_argument("--max-p", type=int)
    v.add_argument("--max-q", type=int)
    v.add_argument("--sections", help="comma-separated subset of: " + ",".join(c.name for c in CHECKS))
    v.add_argument("--pair-budget", type=int, help="largest family swept exhaustively (pairs)")
    _common(v)
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("family", help="build an L, M or F1 family")
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--d", type=int, default=1)
    f.add_argument("--M", type=int, default=None)
    f.add_argument("--kind", choices=("L", "M", "F1"), required=True)
    _common(f)
    f.set_defaults(func=cmd_family)
    return parser


def _error(exc, code):
    doc = {"error": {"type": type(exc).__name__, "message": str(exc), "exit_code": code}}
    sys.stderr.write(json.dumps(doc) + "\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _set_workers(args.workers)
        t0 = time.perf_counter()
        text, code = args.func(args)
        if args.timings:
            print(f"elapsed {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        return _error(exc, EXIT_USAGE)
    except (SlceLabError, ValueError) as exc:
        return _error(exc, EXIT_DOMAIN)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
