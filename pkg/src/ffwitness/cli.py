"""Command-line interface.

Every command writes JSON (or CSV for row-oriented output) to stdout or
--out, and exits with: 0 success, 1 audit or verification failure, 2 bad
input, 3 resource cap exceeded. The FFWITNESS_CAP environment variable, when
set, overrides --cap-field.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import nt
from .charsum import weil_audit_instances
from .construct import (
    audit_bounds_rows,
    construct_pipeline,
    coulter_kosick_check,
    hm_artin_schreier_check,
    mn_conjecture_search,
    primitive_set_search,
    survey_rows,
    verify_report,
)
from .field import DEFAULT_CAP, CapExceeded

EXIT_OK = 0
EXIT_AUDIT = 1
EXIT_BAD_INPUT = 2
EXIT_CAP = 3


def _effective_cap(args) -> int:
    env = os.environ.get("FFWITNESS_CAP")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"FFWITNESS_CAP must be an integer, got {env!r}") from None
    return args.cap_field


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _csv_text(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def _rows_out(rows: list[dict], columns: list[str], args) -> None:
    if args.format == "csv":
        _emit(_csv_text(rows, columns), args.out)
    else:
        _emit(_json_text(rows), args.out)


# -- commands ----------------------------------------------------------------


def _cmd_construct(args) -> int:
    cap = _effective_cap(args)
    rep = construct_pipeline(
        args.p, args.k, args.h, args.d, alpha_index=args.alpha, t=args.t, cap=cap
    )
    _emit(_json_text(rep.to_json()), args.out)
    return EXIT_OK if rep.verified else EXIT_AUDIT


SURVEY_COLUMNS = [
    "q", "h", "d", "r", "t", "t_strict", "set_size", "m_h",
    "cond1", "cond2", "cond3", "cond4", "guaranteed", "certified",
    "floor_log2_qm1", "sqrt_q", "log2_claim_ok", "status",
]


def _cmd_survey(args) -> int:
    cap = _effective_cap(args)
    if args.q_min > args.q_max:
        raise ValueError("--q-min must not exceed --q-max")
    rows = survey_rows(args.q_min, args.q_max, args.h, args.d, cap=cap)
    _rows_out(rows, SURVEY_COLUMNS, args)
    bad = any(r.get("status") == "ok" and not r.get("certified") for r in rows)
    return EXIT_AUDIT if bad else EXIT_OK


WEIL_COLUMNS = ["q", "m", "f", "chi", "re", "im", "abs", "bound", "applicable", "ok"]


def _cmd_audit_weil(args) -> int:
    cap = _effective_cap(args)
    qs = [int(x) for x in args.q_list.split(",") if x]
    rows = []
    violated = False
    for q in qs:
        for inst in weil_audit_instances(
            q, args.m, args.count, max_degree=args.max_degree, seed=args.seed, cap=cap
        ):
            res = inst.result
            ok = inst.ok
            if ok is False:
                violated = True
            rows.append(
                {
                    "q": inst.q,
                    "m": inst.m,
                    "f": ":".join(str(c) for c in inst.f.coeffs),
                    "chi": inst.chi.index,
                    "re": f"{res.value.real:.9f}",
                    "im": f"{res.value.imag:.9f}",
                    "abs": f"{abs(res.value):.9f}",
                    "bound": "" if res.bound is None else f"{res.bound:.9f}",
                    "applicable": "unknown" if res.applicable is None else res.applicable,
                    "ok": ok,
                }
            )
    _rows_out(rows, WEIL_COLUMNS, args)
    return EXIT_AUDIT if violated else EXIT_OK


BOUNDS_COLUMNS = ["q", "m_h", "floor_log2_qm1", "sqrt_ok", "log2_claim_ok"]


def _cmd_audit_bounds(args) -> int:
    rows = audit_bounds_rows(args.q_max, args.h)
    _rows_out(rows, BOUNDS_COLUMNS, args)
    return EXIT_AUDIT if any(not r["sqrt_ok"] for r in rows) else EXIT_OK


def _cmd_primitive(args) -> int:
    cap = _effective_cap(args)
    rep = primitive_set_search(args.q, args.n, args.t, alpha_index=args.alpha, cap=cap)
    _emit(_json_text(rep.to_json()), args.out)
    return EXIT_OK if rep.verified else EXIT_AUDIT


def _cmd_mn_search(args) -> int:
    cap = _effective_cap(args)
    witness = mn_conjecture_search(args.q, args.kk, args.l, cap=cap)
    payload = {
        "q": args.q,
        "kk": args.kk,
        "l": args.l,
        "found": witness is not None,
        "witness": None if witness is None else witness.to_json(),
    }
    _emit(_json_text(payload), args.out)
    return EXIT_OK if witness is not None else EXIT_AUDIT


def _cmd_ck_check(args) -> int:
    cap = _effective_cap(args)
    results = []
    for q in nt.prime_powers_in(args.q_min, args.q_max):
        if q % 2 == 1:
            results.append({"q": q, "ok": coulter_kosick_check(q, cap=cap)})
    payload = {"results": results, "all_ok": all(r["ok"] for r in results)}
    if args.format == "csv":
        _emit(_csv_text(results, ["q", "ok"]), args.out)
    else:
        _emit(_json_text(payload), args.out)
    return EXIT_OK if payload["all_ok"] else EXIT_AUDIT


def _cmd_hm_check(args) -> int:
    cap = _effective_cap(args)
    results = []
    for p in [int(x) for x in args.p_list.split(",") if x]:
        results.append({"p": p, "ok": hm_artin_schreier_check(p, cap=cap)})
    payload = {"results": results, "all_ok": all(r["ok"] for r in results)}
    if args.format == "csv":
        _emit(_csv_text(results, ["p", "ok"]), args.out)
    else:
        _emit(_json_text(payload), args.out)
    return EXIT_OK if payload["all_ok"] else EXIT_AUDIT


def _cmd_verify(args) -> int:
    cap = _effective_cap(args)
    try:
        with open(args.report, "r", encoding="utf-8") as fh:
            report = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read report: {exc}") from None
    ok, problems = verify_report(report, cap=cap)
    _emit(_json_text({"ok": ok, "problems": problems}), args.out)
    return EXIT_OK if ok else EXIT_AUDIT


# -- parser ------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument(
        "--cap-field",
        type=int,
        default=DEFAULT_CAP,
        help=f"largest constructible field (default {DEFAULT_CAP}); FFWITNESS_CAP overrides",
    )
    common.add_argument("--seed", type=int, default=0, help="RNG seed for sampled audits")

    ap = argparse.ArgumentParser(
        prog="ffwitness",
        description="explicit subsets of finite fields with certified special elements",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="build one set and certify a non-d-th power")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--h", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--t", type=int, default=None, help="force t instead of deriving it")
    c.add_argument("--alpha", type=int, default=None, help="alpha index (default: minimal primitive)")
    c.set_defaults(fn=_cmd_construct)

    s = sub.add_parser("survey", parents=[common], help="one pipeline row per prime power in a range")
    s.add_argument("--q-min", type=int, required=True)
    s.add_argument("--q-max", type=int, required=True)
    s.add_argument("--h", type=int, default=2)
    s.add_argument("--d", type=int, default=2)
    s.set_defaults(fn=_cmd_survey)

    w = sub.add_parser("audit-weil", parents=[common], help="seeded random character-sum bound audit")
    w.add_argument("--q-list", required=True, help="comma-separated base prime powers")
    w.add_argument("--m", type=int, default=2)
    w.add_argument("--count", type=int, default=200, help="applicable instances per q")
    w.add_argument("--max-degree", type=int, default=3)
    w.set_defaults(fn=_cmd_audit_weil)

    b = sub.add_parser("audit-bounds", parents=[common], help="M(h) < sqrt(q) audit and log2 claim tabulation")
    b.add_argument("--q-max", type=int, default=10000)
    b.add_argument("--h", type=int, default=2)
    b.set_defaults(fn=_cmd_audit_bounds)

    pr = sub.add_parser("primitive", parents=[common], help="primitive elements in a constructed set")
    pr.add_argument("--q", type=int, required=True)
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--t", type=int, default=1)
    pr.add_argument("--alpha", type=int, default=None)
    pr.set_defaults(fn=_cmd_primitive)

    mn = sub.add_parser("mn-search", parents=[common], help="search a constrained irreducible witness")
    mn.add_argument("--q", type=int, required=True)
    mn.add_argument("--kk", type=int, required=True)
    mn.add_argument("--l", type=int, required=True)
    mn.set_defaults(fn=_cmd_mn_search)

    ck = sub.add_parser("ck-check", parents=[common], help="square/non-square coset check over a range")
    ck.add_argument("--q-min", type=int, default=7)
    ck.add_argument("--q-max", type=int, default=49)
    ck.set_defaults(fn=_cmd_ck_check)

    hm = sub.add_parser("hm-check", parents=[common], help="Artin-Schreier non-square coset check")
    hm.add_argument("--p-list", default="3,5,7", help="comma-separated odd primes")
    hm.set_defaults(fn=_cmd_hm_check)

    v = sub.add_parser("verify", parents=[common], help="re-check a saved construction report")
    v.add_argument("report", help="path to a report JSON file")
    v.set_defaults(fn=_cmd_verify)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
