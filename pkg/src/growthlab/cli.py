"""The growthlab command line.

    growthlab verify [--corpus FILE] [--check ID[,ID...]] [--out FILE]
                     [--format csv|json] [--workers N]
    growthlab ab|rep|sub|zeta|table --group SPEC [--rel YSPEC] [--n N] [--t T]
    growthlab replay WITNESS_FILE

Exit codes: 0 all checks pass, 1 some check failed, 2 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import checks, chartab, growth
from .corpus import BaselineSpec, default_corpus, parse_corpus, parse_entry
from .constructors import GroupSpec
from .errors import CorpusParseError, GrowthLabError
from .report import (FAIL, CheckResult, GrowthReport, emit_report)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CorpusParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GrowthLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="growthlab")
    sub = p.add_subparsers(required=True)

    v = sub.add_parser("verify", help="run checks over a corpus")
    v.add_argument("--corpus", help="corpus file (default: built-in corpus)")
    v.add_argument("--check", help="comma-separated check ids")
    v.add_argument("--out", help="write the report here")
    v.add_argument("--format", choices=("csv", "json"), default="csv")
    v.add_argument("--workers", type=int, default=1)
    v.set_defaults(fn=cmd_verify)

    for name in ("ab", "rep", "sub", "subs"):
        g = sub.add_parser(name, help=f"{name} growth table for one group")
        g.add_argument("--group", required=True)
        g.add_argument("--n", type=int, default=None)
        if name in ("ab", "rep"):
            g.add_argument("--rel", help="baseline: trivial | stab P | cyclic-sub (..)")
        g.set_defaults(fn=cmd_growth, which="sub" if name == "subs" else name)

    z = sub.add_parser("zeta", help="Witten zeta value")
    z.add_argument("--group", required=True)
    z.add_argument("--t", type=int, default=3)
    z.set_defaults(fn=cmd_zeta)

    t = sub.add_parser("table", help="character table summary as JSON")
    t.add_argument("--group", required=True)
    t.set_defaults(fn=cmd_table)

    r = sub.add_parser("replay", help="replay a failure witness")
    r.add_argument("witness")
    r.set_defaults(fn=cmd_replay)
    return p


def _run_one(payload):
    line, filt, with_tables = payload
    return checks.run_entry_line(line, filt, with_tables)


def run_verify(corpus_text: str | None, check_filter: list[str] | None,
               workers: int = 1) -> GrowthReport:
    entries = (parse_corpus(corpus_text) if corpus_text is not None
               else default_corpus())
    payloads = [(e.line(), check_filter, True) for e in entries]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outs = list(pool.map(_run_one, payloads))
    else:
        outs = [_run_one(pl) for pl in payloads]
    report = GrowthReport()
    for rows, tables in outs:
        report.results.extend(CheckResult.from_dict(r) for r in rows)
        report.tables.extend(tables)
    return report


def cmd_verify(args) -> int:
    corpus_text = None
    if args.corpus:
        with open(args.corpus) as fh:
            corpus_text = fh.read()
    filt = args.check.split(",") if args.check else None
    if filt:
        for c in filt:
            if c not in checks.CHECK_IDS:
                raise CorpusParseError(f"unknown check id {c!r}")
    report = run_verify(corpus_text, filt, args.workers)
    blob = emit_report(report, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(blob)
    else:
        sys.stdout.write(blob.decode())
    counts = report.counts()
    print(f"pass={counts['pass']} fail={counts['fail']} "
          f"reported={counts['reported']}", file=sys.stderr)
    return 1 if report.failures() else 0


def _build_group(spec_text: str):
    return GroupSpec.parse(spec_text).build()


def cmd_growth(args) -> int:
    G = _build_group(args.group)
    n_max = args.n
    rel = getattr(args, "rel", None)
    if args.which == "ab":
        if rel:
            Y = BaselineSpec.parse(rel).build(G)
            table = growth.ab_growth_rel(G, Y, n_max)
        else:
            table = growth.ab_growth(G, n_max)
    elif args.which == "rep":
        if rel:
            Y = BaselineSpec.parse(rel).build(G)
            table = chartab.rep_growth_rel(G, Y, n_max)
        else:
            table = chartab.rep_growth(G, n_max)
    else:
        return _emit_sub_table(G, n_max)
    print("n,value")
    for n in sorted(table.jumps):
        print(f"{n},{table.jumps[n]}")
    if table.n_max not in table.jumps:
        print(f"{table.n_max},{table.value(table.n_max)}")
    return 0


def _emit_sub_table(G, n_max: int | None) -> int:
    from .subgroups import subgroup_classes

    lat = subgroup_classes(G, n_max if n_max else G.order())
    print("index,order,class_length,is_normal,abelianization_order")
    for c in lat.classes:
        print(f"{c.index},{c.order},{c.class_length},"
              f"{str(c.is_normal).lower()},{c.abelianization_order()}")
    return 0


def cmd_zeta(args) -> int:
    from . import config

    G = _build_group(args.group)
    z = chartab.zeta(G, args.t, cap=config.CLASS_ITER_CAP)
    print(f"{z.numerator}/{z.denominator} ~ {float(z):.9f}")
    return 0


def cmd_table(args) -> int:
    from . import config

    G = _build_group(args.group)
    tab = chartab.character_table(G, cap=config.CLASS_ITER_CAP)
    doc = {
        "group": args.group.strip(),
        "order": G.order(),
        "classes": tab.k,
        "class_sizes": list(tab.classes.sizes),
        "degrees": sorted(tab.degrees),
        "exponent": tab.e,
        "dixon_prime": tab.p,
    }
    print(json.dumps(doc, indent=1, sort_keys=True))
    return 0


def cmd_replay(args) -> int:
    with open(args.witness) as fh:
        doc = json.load(fh)
    entry = parse_entry(doc["entry"])
    rows = checks.run_check(doc["check_id"], entry)
    for r in rows:
        print(",".join(r.row()))
    return 1 if any(r.status == FAIL for r in rows) else 0


if __name__ == "__main__":
    raise SystemExit(main())
