"""Command-line front end: ``spmine mine|oracle|bench``.

Exit codes: 0 success, 2 input error, 3 oracle capacity guard.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections import Counter

from . import bench as _bench
from .core import PatternRecord, TemporalDatabase
from .distance import Combiner
from .errors import CapacityError, SpmineError
from .ingest import load_database, parse_reference
from .miner import MinerConfig, Mode, mine
from .oracle import exact_mine
from .scan import PassCounter

logger = logging.getLogger("spmine")

EXIT_OK, EXIT_INPUT, EXIT_CAPACITY = 0, 2, 3


def _seq(values) -> list[float]:
    return [float(v) for v in values]


def pattern_json(db: TemporalDatabase, rec: PatternRecord) -> dict:
    return {
        "items": sorted(db.labels(rec.itemset)),
        "lower": _seq(rec.bounds.lower),
        "upper": _seq(rec.bounds.upper),
        "ulb": rec.ulb,
        "llb": rec.llb,
        "lb": rec.lb,
        "actual": rec.actual_distance,
        "status": rec.status.value,
    }


def _fmt_seq(values) -> str:
    return "<" + ", ".join(f"{v:.4f}" for v in values) + ">"


def _fmt_num(v) -> str:
    return "-" if v is None else f"{v:.4f}"


def _table(headers, rows) -> list[str]:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    line = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()  # noqa: E731
    return [line(headers), line(["-" * w for w in widths])] + [line(r) for r in rows]


def render_table(report: dict) -> str:
    """Human-readable rendering of a mine/oracle report dict."""
    out = []
    params = report["parameters"]
    out.append("parameters: " + "  ".join(
        f"{k}={_fmt_seq(v) if isinstance(v, list) else v}" for k, v in params.items()))
    out.append(f"scan_count: {report['scan_count']}")
    out.append("")
    if report["levels"]:
        headers = list(report["levels"][0])
        out += _table(headers, [[lv[h] for h in headers] for lv in report["levels"]])
        out.append("")
    if "sequences" in report:
        out.append("support sequences:")
        out += _table(["itemset", "support"],
                      [[",".join(s["items"]), _fmt_seq(s["support"])] for s in report["sequences"]])
        out.append("")
    out.append(f"similar patterns ({len(report['similar'])}):")
    out += _table(
        ["itemset", "lower", "upper", "ulb", "llb", "lb", "actual", "status"],
        [[",".join(p["items"]), _fmt_seq(p["lower"]), _fmt_seq(p["upper"]), _fmt_num(p["ulb"]),
          _fmt_num(p["llb"]), _fmt_num(p["lb"]), _fmt_num(p["actual"]), p["status"]]
         for p in report["similar"]])
    return "\n".join(out)


def _load(args):
    db = load_database(args.db, with_tid=args.with_tid)
    ref = parse_reference(args.ref, db.n_slots)
    return db, ref


def mine_report(db, ref, cfg: MinerConfig) -> dict:
    result = mine(db, ref, cfg)
    return {
        "parameters": {"theta": cfg.theta, "ref": _seq(ref), "mode": cfg.mode.value,
                       "combiner": cfg.combiner.value, "epsilon": cfg.epsilon},
        "scan_count": result.scan_count,
        "levels": [{"level": s.level, "generated": s.generated, "pruned": s.pruned,
                    "evaluated": s.evaluated, "retained": s.retained, "similar": s.similar}
                   for s in result.levels],
        "similar": [pattern_json(db, r) for r in result.similar],
    }


def oracle_report(db, ref, theta: float) -> dict:
    counter = PassCounter()
    sequences: list = []
    found = exact_mine(db, ref, theta, counter=counter, with_sequences=sequences)
    enumerated = Counter(len(p) for p, _ in sequences)
    similar = Counter(r.level for r in found)
    return {
        "parameters": {"theta": theta, "ref": _seq(ref)},
        "scan_count": counter.passes,
        "levels": [{"level": k, "enumerated": n, "similar": similar[k]} for k, n in sorted(enumerated.items())],
        "sequences": [{"items": sorted(db.labels(p)), "support": _seq(s)} for p, s in sequences],
        "similar": [pattern_json(db, r) for r in found],
    }


def _emit(report: dict, output: str) -> None:
    if output == "json":
        print(json.dumps(report, indent=2))
    else:
        print(render_table(report))


def cmd_mine(args) -> int:
    db, ref = _load(args)
    cfg = MinerConfig(args.theta, combiner=Combiner(args.combiner), mode=Mode(args.mode))
    _emit(mine_report(db, ref, cfg), args.output)
    return EXIT_OK


def cmd_oracle(args) -> int:
    db, ref = _load(args)
    _emit(oracle_report(db, ref, args.theta), args.output)
    return EXIT_OK


def bench_report(args) -> dict:
    if args.synthetic:
        params = _bench.parse_synthetic(args.synthetic)
        seeds = [params["seed"] + i for i in range(args.instances)]
        runs = []
        for seed in seeds:
            db = _bench.synthetic_database(params["items"], params["slots"], params["tx-per-slot"],
                                           seed, params["density"])
            ref = parse_reference(args.ref, db.n_slots)
            runs.append({"seed": seed, **_bench.compare(db, ref, args.theta, Combiner(args.combiner))})
    else:
        db, ref = _load(args)
        runs = [_bench.compare(db, ref, args.theta, Combiner(args.combiner))]
    return {
        "parameters": {"db": args.db, "synthetic": args.synthetic, "ref": args.ref, "theta": args.theta,
                       "combiner": args.combiner, "instances": len(runs)},
        "runs": runs,
        "summary": {
            "false_positives": sum(len(r["false_positives"]) for r in runs),
            "false_negatives": sum(len(r["false_negatives"]) for r in runs),
            "instances_with_false_negatives": sum(bool(r["false_negatives"]) for r in runs),
            "paper_passes": sorted({r["paper"]["passes"] for r in runs}),
        },
    }


def render_bench(report: dict) -> str:
    rows = []
    for i, r in enumerate(report["runs"]):
        cands = " ".join(f"{k}:{v}" for k, v in r["paper"]["candidates"].items())
        rows.append([r.get("seed", i), r["paper"]["passes"], r["oracle"]["passes"], cands,
                     f"{r['paper']['seconds'] * 1e3:.2f}", f"{r['oracle']['seconds'] * 1e3:.2f}",
                     len(r["false_positives"]), len(r["false_negatives"])])
    out = [f"backend: {report['runs'][0]['backend']}" if report["runs"] else "backend: -"]
    out += _table(["run", "paper_passes", "oracle_passes", "candidates/level", "paper_ms", "oracle_ms",
                   "false_pos", "false_neg"], rows)
    s = report["summary"]
    out.append("")
    out.append(f"false positives: {s['false_positives']}  false negatives: {s['false_negatives']}  "
               f"instances with false negatives: {s['instances_with_false_negatives']}")
    return "\n".join(out)


def cmd_bench(args) -> int:
    if bool(args.db) == bool(args.synthetic):
        raise SpmineError("bench needs exactly one of --db or --synthetic")
    report = bench_report(args)
    if args.output == "json":
        print(json.dumps(report, indent=2))
    else:
        print(render_bench(report))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spmine", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, db_required=True):
        p.add_argument("--db", required=db_required, help="transaction file (slot<TAB>item,item,...)")
        p.add_argument("--ref", required=True, help="comma-separated reference supports, one per slot")
        p.add_argument("--theta", required=True, type=float, help="distance threshold")
        p.add_argument("--output", choices=["table", "json"], default="table")
        p.add_argument("--with-tid", action="store_true", help="input lines carry a leading transaction id")

    p = sub.add_parser("mine", help="single-scan bound-based mining")
    common(p)
    p.add_argument("--mode", choices=[m.value for m in Mode], default="paper")
    p.add_argument("--combiner", choices=[c.value for c in Combiner], default="sum")
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("oracle", help="exhaustive exact mining (one pass per itemset)")
    common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="compare the single-scan miner against the oracle")
    common(p, db_required=False)
    p.add_argument("--synthetic", help="items=<n>,slots=<m>,tx-per-slot=<k>,seed=<s>,density=<p>")
    p.add_argument("--instances", type=int, default=1, help="synthetic instances, seeds seed..seed+N-1")
    p.add_argument("--combiner", choices=[c.value for c in Combiner], default="sum")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (SpmineError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
