"""Command-line driver: ``list``, ``verify``, ``scan``, ``wz`` and ``padic``.

Exit codes: 0 when every congruence and identity check holds, 1 on any
such failure (or conjecture/variant failure with ``--conjectures-strict``), 2 on usage
errors, 3 when a q-exponent comes out fractional.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import padic, suites, wzpairs
from .qfactor import cyclotomic_cache

SCHEMA = 1

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_EXPONENT = 0, 1, 2, 3

# desk-scale defaults used when no range is given
DEFAULT_N = {
    "thm3": range(1, 21),
    "conj2": range(1, 21),
    "conj3": range(1, 22),
    "conj4": (5, 9, 13, 17, 21),
    "extra7": range(1, 22),
    "q_staver": range(1, 41),
    "q_hamme": (3, 5, 7, 11),
    "lemma5": range(2, 26),
    "lemma5_alt": range(2, 26),
    "lemma3": range(3, 16),
    "lemma3_half": range(3, 16),
    "lemma4": range(3, 16),
    "reduce3": range(1, 12),
    "reduce": range(1, 12),
    "sun1": range(1, 201),
    "sun2": range(1, 201),
    "mao_sun": range(0, 11),
}
DEFAULT_N_ODD = range(3, 26)

DEFAULT_PR = {
    "div1": [(p, 1) for p in (3, 5, 7, 11, 13)],
    "div2": [(p, 1) for p in (5, 7, 11)],
    "div3": [(p, 1) for p in (3, 5, 7, 11, 13)],
    "div_gen_r1": [(3, 2), (3, 3), (5, 2), (7, 2)],
    "div_gen_r2": [(3, 2), (3, 3), (5, 2), (7, 2)],
    "div3_pr": [(3, 2), (3, 3), (5, 2), (7, 2)],
    "div2_alternating": [(p, 1) for p in (5, 7, 11)],
    "div3_pr_power_sign": [(3, 2), (3, 3), (5, 2), (7, 2)],
    "sun_hu": [(5, 1), (7, 1), (5, 2)],
    "st": [(p, 1) for p in padic.primes(5, 97)],
    "swisher_j3": [(5, 1), (7, 1), (5, 2)],
}
for _c in ("conj5a", "conj5b", "conj5c", "conj5d"):
    DEFAULT_PR[_c] = [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2)]


class UsageError(Exception):
    pass


# -- catalogue ----------------------------------------------------------------


def catalogue():
    """Every checkable id with kind, admissibility text and anchor formula."""
    out = []
    for s in suites.SUITES.values():
        out.append({"id": s.id, "kind": s.kind, "admissible": s.admissible_text, "anchor": s.anchor})
    for lid in suites.LEMMA_IDS:
        out.append({"id": lid, "kind": "congruence", "admissible": "odd n >= 1", "anchor": suites.LEMMA_ANCHORS[lid]})
    for pid, (kind, adm, anchor) in padic.PADIC_CATALOGUE.items():
        out.append({"id": pid, "kind": kind, "admissible": adm, "anchor": anchor})
    return out



def _family(id):
    if id in suites.SUITES or id in suites.ALIASES or id in suites.LEMMA_IDS:
        return "q"
    if id in padic.PRIME_IDS:
        return "prime"
    if id in padic.N_IDS:
        return "n"
    raise UsageError(f"unknown id {id!r}")


# -- argument parsing ---------------------------------------------------------


def parse_int_set(text):
    """``A..B`` (inclusive range), ``a,b,c`` or a single integer.

    Returns (values, is_range).
    """
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
            if hi < lo:
                raise UsageError(f"empty range {text!r}")
            return list(range(lo, hi + 1)), True
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"cannot parse integer set {text!r}") from None
    if not vals:
        raise UsageError("empty integer set")
    return vals, False


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="qcongruence", description="Exact verifier for q-congruences and supercongruences.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ls = sub.add_parser("list", help="enumerate suite ids")
    ls.add_argument("--kind", choices=["identity", "congruence", "conjecture", "variant"])
    ls.add_argument("--json", action="store_true", help="machine-readable catalogue on stdout")

    def add_run_flags(sp):
        sp.add_argument("ids", nargs="+", help="suite ids, or 'all'")
        sp.add_argument("--n", help="A..B or a,b,c")
        sp.add_argument("--primes", help="comma-separated primes")
        sp.add_argument("--r", help="A..B or a,b,c (prime-power exponent)")
        sp.add_argument("--json", dest="json_path", metavar="PATH", help="write JSON report ('-' for stdout)")
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--cache-max", type=int, default=None)
        sp.add_argument("--conjectures-strict", action="store_true")

    add_run_flags(sub.add_parser("verify", help="run checks and report each case"))
    add_run_flags(sub.add_parser("scan", help="run checks over ranges and summarize"))
    add_run_flags(sub.add_parser("padic", help="run q=1 valuation checks"))

    wz = sub.add_parser("wz", help="check a WZ pair's relation and telescoping sums")
    wz.add_argument("pair", choices=sorted(wzpairs.PAIRS))
    wz.add_argument("--grid", type=int, default=12)
    wz.add_argument("--json", dest="json_path", metavar="PATH")
    return p


# -- jobs ---------------------------------------------------------------------


def _orders_json(d):
    return {str(t): ("inf" if v == "inf" or v == math.inf else int(v)) for t, v in d.items()}


def run_job(job):
    """Execute one (family, id, ...) job and return a schema-ordered record."""
    family, id = job[0], job[1]
    t0 = time.perf_counter()
    if family == "q":
        n = job[2]
        try:
            rep = suites.verify(id, n)
        except suites.FractionalExponentError as exc:
            return {"error": "fractional-exponent", "suite": id, "n": n, "message": str(exc)}
        kind = rep.kind
        head = {"suite": rep.suite, "n": n}
        holds, na = rep.holds, rep.not_applicable
        observed, required = _orders_json(rep.observed_orders), _orders_json(rep.required_orders)
        anchor = rep.anchor
    elif family == "prime":
        p, r = job[2], job[3]
        v = padic.check(id, p=p, r=r)
        kind = padic.PADIC_CATALOGUE[id][0]
        head = {"suite": id, "p": p, "r": r}
        holds, na = v.holds, False
        observed, required = _orders_json({p: v.observed_order}), _orders_json({p: v.required_order})
        anchor = padic.PADIC_CATALOGUE[id][2]
    else:
        n = job[2]
        v = padic.check(id, n=n)
        kind = padic.PADIC_CATALOGUE[id][0]
        head = {"suite": id, "n": n}
        holds, na = bool(v), False
        observed, required = {}, {}
        anchor = padic.PADIC_CATALOGUE[id][2]
    elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return {
        **head,
        "kind": kind,
        "holds": bool(holds),
        "not_applicable": bool(na),
        "observed_orders": observed,
        "required_orders": required,
        "elapsed_ms": elapsed_ms,
        "anchor": anchor,
    }


def _q_admissible(id, n):
    return suites.is_admissible(suites.ALIASES.get(id, id), n)


def _n_admissible(id, n):
    return n >= 0


def plan_jobs(ids, n_text, primes_text, r_text, strict_n=True):
    """Expand ids and ranges into an ordered job list.

    An explicitly listed n that is inadmissible is a usage error when
    ``strict_n``; ranges are filtered silently.
    """
    if ids == ["all"]:
        ids = [c["id"] for c in catalogue()]
    jobs = []
    for id in ids:
        family = _family(id)
        if family == "prime":
            if n_text:
                raise UsageError(f"{id} takes --primes/--r, not --n")
            if primes_text or r_text:
                ps = parse_int_set(primes_text)[0] if primes_text else sorted({p for p, _ in DEFAULT_PR[id]})
                rs = parse_int_set(r_text)[0] if r_text else [1]
                pairs = [(p, r) for p in ps for r in rs]
            else:
                pairs = DEFAULT_PR[id]
            for p, r in pairs:
                if not padic.is_prime(p):
                    raise UsageError(f"{p} is not prime")
                jobs.append(("prime", id, p, r))
            continue
        if primes_text or r_text:
            raise UsageError(f"{id} takes --n, not --primes/--r")
        check = _q_admissible if family == "q" else _n_admissible
        if n_text:
            ns, is_range = parse_int_set(n_text)
        else:
            ns, is_range = list(DEFAULT_N.get(id, DEFAULT_N_ODD)), True
        bad = [n for n in ns if not check(id, n)]
        if bad and (strict_n and not is_range):
            raise UsageError(f"{id}: inadmissible n {bad}")
        jobs.extend((family, id, n) for n in ns if check(id, n))
    return jobs


def run_jobs(jobs, n_workers=1):
    if n_workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            return list(pool.map(run_job, jobs))
    return [run_job(j) for j in jobs]


# -- output -------------------------------------------------------------------


def dumps(obj):
    """Canonical JSON: insertion-ordered keys, no floats, trailing newline."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _verdict(rec):
    if rec.get("not_applicable"):
        return "not-applicable"
    return "holds" if rec["holds"] else "FAILS"


def format_record(rec):
    where = f"n={rec['n']}" if "n" in rec else f"p={rec['p']} r={rec['r']}"
    orders = ""
    if rec["required_orders"]:
        orders = " orders " + " ".join(
            f"{t}:{rec['observed_orders'].get(t)}/{req}" for t, req in rec["required_orders"].items()
        )
    return f"{rec['suite']:<20} {where:<10} {rec['kind']:<10} {_verdict(rec):<14}{orders}  {rec['elapsed_ms']}ms"


def summarize(records):
    by_suite = {}
    for rec in records:
        s = by_suite.setdefault(rec["suite"], {"kind": rec["kind"], "holds": 0, "fails": 0, "not_applicable": 0})
        if rec["not_applicable"]:
            s["not_applicable"] += 1
        elif rec["holds"]:
            s["holds"] += 1
        else:
            s["fails"] += 1
    return by_suite


def exit_status(records, strict):
    for rec in records:
        if rec["holds"]:
            continue
        if rec["kind"] in ("conjecture", "variant") and not strict:
            continue
        return EXIT_FAIL
    return EXIT_OK


def _emit_json(path, payload):
    text = dumps(payload)
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# -- commands -----------------------------------------------------------------


def cmd_list(args, out):
    entries = [c for c in catalogue() if args.kind is None or c["kind"] == args.kind]
    if args.json:
        out.write(dumps({"schema": SCHEMA, "suites": entries}))
    else:
        for c in entries:
            out.write(f"{c['id']:<20} {c['kind']:<10} {c['admissible']:<22} {c['anchor']}\n")
    return EXIT_OK


def _max_requested_n(jobs):
    return max((j[2] for j in jobs if j[0] == "q"), default=0)


def cmd_run(args, out, summary_only=False):
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    jobs = plan_jobs(args.ids, args.n, args.primes, args.r, strict_n=not summary_only)
    if not jobs and not summary_only:
        raise UsageError("no admissible cases")
    if args.cache_max is not None:
        if args.cache_max < _max_requested_n(jobs):
            raise UsageError(f"--cache-max {args.cache_max} below largest n {_max_requested_n(jobs)}")
        cyclotomic_cache.max_n = args.cache_max
    order = {id: i for i, id in enumerate(dict.fromkeys(j[1] for j in jobs))}
    records = run_jobs(jobs, args.jobs)
    errors = [r for r in records if "error" in r]
    records = [r for r in records if "error" not in r]
    records.sort(key=lambda r: (order[r["suite"]], r.get("n", r.get("p")), r.get("r", 0)))
    summary = summarize(records)
    status = exit_status(records, args.conjectures_strict)
    if errors:
        status = EXIT_EXPONENT
        for e in errors:
            out.write(f"{e['suite']} n={e['n']}: {e['message']}\n")
    if not summary_only:
        for rec in records:
            out.write(format_record(rec) + "\n")
    for sid, s in summary.items():
        flag = " (conjecture failures are findings)" if s["kind"] == "conjecture" and s["fails"] else ""
        out.write(f"{sid}: {s['holds']} hold, {s['fails']} fail, {s['not_applicable']} not-applicable{flag}\n")
    if args.json_path:
        _emit_json(args.json_path, {
            "schema": SCHEMA,
            "command": args.command,
            "exit_status": status,
            "reports": records,
            "summary": summary,
        })
    return status


def cmd_wz(args, out):
    if args.grid < 1:
        raise UsageError("--grid must be >= 1")
    pair = wzpairs.PAIRS[args.pair]
    t0 = time.perf_counter()
    rel = wzpairs.verify_relation(pair, args.grid, args.grid)
    out.write(f"{pair.name}: relation {'holds' if rel.ok else 'FAILS'} at {rel.points} points"
              f"{'' if rel.ok else f' (first failure at {rel.witness})'}\n")
    tele = {}
    upper = min(args.grid, 12 if pair.name == "he" else 11)
    for m in range(1, upper + 1):
        if pair.name == "divergent1" and m % 2 == 0:
            continue
        tele[str(m)] = wzpairs.telescope_check(pair, m)
    bad = [m for m, ok in tele.items() if not ok]
    out.write(f"{pair.name}: telescoping {'holds' if not bad else 'FAILS at ' + ','.join(bad)} for m in 1..{upper}\n")
    status = EXIT_OK if rel.ok and not bad else EXIT_FAIL
    if args.json_path:
        _emit_json(args.json_path, {
            "schema": SCHEMA,
            "command": "wz",
            "pair": pair.name,
            "grid": args.grid,
            "relation_holds": rel.ok,
            "points": rel.points,
            "witness": list(rel.witness) if rel.witness else None,
            "telescoping": tele,
            "elapsed_ms": int((time.perf_counter() - t0) * 1000),
            "exit_status": status,
        })
    return status


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command == "list":
            return cmd_list(args, out)
        if args.command == "wz":
            return cmd_wz(args, out)
        return cmd_run(args, out, summary_only=args.command == "scan")
    except UsageError as exc:
        sys.stderr.write(f"qcongruence: {exc}\n")
        return EXIT_USAGE
    except suites.InadmissibleError as exc:
        sys.stderr.write(f"qcongruence: {exc}\n")
        return EXIT_USAGE
    except padic.PreconditionError as exc:
        sys.stderr.write(f"qcongruence: {exc}\n")
        return EXIT_USAGE


def main_exit():
    sys.exit(main())
