"""Command-line front door.

Subcommands: ``compute`` (measure tables over a dataset), ``audit`` (full
axiom audit of one measure), ``attack`` (distortion search), ``witness``
(curated case replay), and ``replay`` (re-verify the witnesses embedded in
a previously written JSON report).

Exit status 0 means expectations were met (audit matched the registry, all
cases passed, all witnesses replayed); 1 means the run completed but an
expectation failed; 2 means the command itself could not run.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from datetime import datetime, timezone

from . import __version__
from .axioms import AuditConfig, replay, run_audit, witness_from_dict
from .attack import FAMILIES, WITNESS_CASE_IDS, maximize_distortion, replay_witness
from .dataset import parse_dataset
from .econ import ReportMatrix, Tolerance, check_conservation, make_distribution
from .errors import MeasureDomainError, SybilineqError
from .measures import parse_measure

_ZERO_TIME = "1970-01-01T00:00:00+00:00"


def _parse_dims(text: str) -> tuple[int, int]:
    match = re.fullmatch(r"(\d+)\.\.(\d+)", text.strip())
    if not match:
        raise argparse.ArgumentTypeError(f"dims must look like 2..8, got {text!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if not 2 <= lo <= hi:
        raise argparse.ArgumentTypeError(f"dims need 2 <= lo <= hi, got {text!r}")
    return lo, hi


def _parse_values(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--seed", type=int, default=42, help="master seed (default 42)")
    sp.add_argument("--atol", type=float, default=1e-12, help="absolute tolerance")
    sp.add_argument("--rtol", type=float, default=1e-9, help="relative tolerance")
    sp.add_argument("--trials", type=int, default=1000, help="random trials per checker")
    sp.add_argument(
        "--dims", type=_parse_dims, default=(2, 8), metavar="LO..HI",
        help="sampled distribution lengths (default 2..8)",
    )
    sp.add_argument("--json", metavar="PATH", help="write the JSON report here")
    sp.add_argument(
        "--deterministic", action="store_true",
        help="zero timestamps so identical runs emit identical bytes",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sybilineq",
        description="Inequality measures, sybil manipulations, and axiom audits.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("compute", help="evaluate measures over dataset groups")
    sp.add_argument("--data", required=True, help="input file")
    sp.add_argument("--format", choices=("long", "row"), default="long")
    sp.add_argument(
        "--measures", required=True,
        help="comma-separated measure ids, e.g. gini,theil-t,ge:2",
    )
    sp.add_argument("--csv", metavar="PATH", help="also write the table as CSV")
    _add_common(sp)

    sp = sub.add_parser("audit", help="audit one measure against every axiom")
    sp.add_argument("--measure", required=True, help="measure id, e.g. gini")
    sp.add_argument(
        "--decomp-budget", type=int, default=20000,
        help="evaluation budget for the decomposability search",
    )
    _add_common(sp)

    sp = sub.add_parser("attack", help="search for a distortion-maximizing manipulation")
    sp.add_argument("--measure", required=True)
    sp.add_argument("--hidden", required=True, type=_parse_values, metavar="V1,V2,...")
    sp.add_argument("--family", choices=FAMILIES, default="pure-sybil")
    sp.add_argument("--identities", type=int, default=None)
    sp.add_argument("--budget", type=int, default=10000)
    sp.add_argument("--restarts", type=int, default=20)
    _add_common(sp)

    sp = sub.add_parser("witness", help="replay curated witness cases")
    sp.add_argument("--case", default="all", help="case id or 'all'")
    _add_common(sp)

    sp = sub.add_parser("replay", help="re-verify witnesses embedded in a JSON report")
    sp.add_argument("report", help="path to a report written with --json")
    _add_common(sp)

    return parser


def _document(args, results) -> dict:
    config = {
        "seed": args.seed,
        "atol": args.atol,
        "rtol": args.rtol,
        "trials": args.trials,
        "dims": list(args.dims),
    }
    for extra in ("measure", "family", "identities", "budget", "case", "format"):
        if hasattr(args, extra) and getattr(args, extra) is not None:
            config[extra] = getattr(args, extra)
    timestamp = (
        _ZERO_TIME if args.deterministic
        else datetime.now(timezone.utc).isoformat(timespec="seconds")
    )
    return {
        "version": __version__,
        "command": args.cmd,
        "config": config,
        "results": results,
        "timestamp": timestamp,
    }


def _emit(args, doc: dict) -> None:
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")


def _cmd_compute(args) -> int:
    dataset = parse_dataset(args.data, args.format)
    measures = [parse_measure(tok) for tok in args.measures.split(",") if tok.strip()]
    rows = []
    for name, dist in dataset.groups.items():
        for m in measures:
            try:
                value, error = m(dist), None
            except MeasureDomainError as exc:
                value, error = None, f"{type(exc).__name__}: {exc}"
            rows.append({"group": name, "measure": m.id, "value": value, "error": error})

    width = max([len(r["group"]) for r in rows] + [5])
    print(f"{'group':<{width}}  {'measure':<14}  value")
    for r in rows:
        shown = "null" if r["value"] is None else f"{r['value']:.9g}"
        note = f"  ({r['error']})" if r["error"] else ""
        print(f"{r['group']:<{width}}  {r['measure']:<14}  {shown}{note}")

    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write("group,measure,value,error\n")
            for r in rows:
                value = "" if r["value"] is None else repr(r["value"])
                error = r["error"] or ""
                fh.write(f"{r['group']},{r['measure']},{value},{error}\n")
    _emit(args, _document(args, {"table": rows}))
    return 0


def _cmd_audit(args) -> int:
    measure = parse_measure(args.measure)
    config = AuditConfig(
        trials=args.trials,
        seed=args.seed,
        atol=args.atol,
        rtol=args.rtol,
        dims=args.dims,
        decomp_budget=args.decomp_budget,
    )
    report = run_audit(measure, config)
    print(f"audit of {measure.id} (seed {args.seed}, {args.trials} trials)")
    for axiom, verdict in report.verdicts.items():
        mark = ""
        if axiom in report.expected:
            mark = " [expected]" if axiom not in report.mismatches else " [MISMATCH]"
        detail = ""
        if verdict.witness is not None:
            detail = f"  gap={verdict.witness.gap:.6g} trial={verdict.witness.trial}"
        print(f"  {axiom:<20} {verdict.status}{detail}{mark}")
    for axiom, err in report.errors.items():
        print(f"  {axiom:<20} error: {err}")
    if report.mismatches:
        print(f"registry mismatches: {', '.join(report.mismatches)}")
    else:
        print("registry mismatches: none")
    _emit(args, _document(args, report.to_dict()))
    return 0 if report.ok else 1


def _cmd_attack(args) -> int:
    measure = parse_measure(args.measure)
    hidden = make_distribution(args.hidden)
    result = maximize_distortion(
        measure,
        hidden,
        family=args.family,
        identities=args.identities,
        budget=args.budget,
        seed=args.seed,
        restarts=args.restarts,
        tol=Tolerance(args.atol, args.rtol),
    )
    print(
        f"attack on {measure.id}: distortion {result.distortion:.9g} "
        f"({result.value_hidden:.9g} -> {result.value_observable:.9g}) "
        f"after {result.iterations} evaluations"
    )
    for row in result.report:
        print("  " + "  ".join(f"{v:.6f}" for v in row))
    _emit(args, _document(args, result.to_dict()))
    return 0


def _cmd_witness(args) -> int:
    ids = WITNESS_CASE_IDS if args.case == "all" else (args.case,)
    outcomes = [replay_witness(cid) for cid in ids]
    for outcome in outcomes:
        status = "PASS" if outcome.passed else "FAIL"
        n_ok = sum(a.passed for a in outcome.assertions)
        print(f"{status} {outcome.case_id} ({n_ok}/{len(outcome.assertions)} assertions)")
        for a in outcome.assertions:
            if not a.passed:
                print(f"    FAILED: {a.label}: computed {a.computed!r}, expected {a.expected!r}")
    passed = sum(o.passed for o in outcomes)
    print(f"{passed}/{len(outcomes)} cases passed")
    _emit(args, _document(args, {"cases": [o.to_dict() for o in outcomes]}))
    return 0 if passed == len(outcomes) else 1


def _replay_audit(doc: dict, tol: Tolerance) -> tuple[int, int]:
    results = doc["results"]
    measure = parse_measure(results["measure"])
    checked = failed = 0
    for axiom, verdict in results["verdicts"].items():
        if not verdict.get("witness"):
            continue
        checked += 1
        witness = witness_from_dict(verdict["witness"])
        violated, gap = replay(measure, witness, tol)
        status = "ok" if violated else "FAILED"
        if not violated:
            failed += 1
        print(f"  {axiom:<20} witness replay {status} (gap {gap:.6g})")
    return checked, failed


def _replay_attack(doc: dict, tol: Tolerance) -> tuple[int, int]:
    results = doc["results"]
    measure = parse_measure(results["measure"])
    hidden = make_distribution(results["hidden"])
    observable = make_distribution(results["observable"])
    report = ReportMatrix(results["report"])
    ok = check_conservation(hidden, report, observable, tol)
    distortion = abs(measure(hidden) - measure(observable))
    ok = ok and abs(distortion - results["distortion"]) <= tol.bound(
        distortion, results["distortion"]
    )
    print(f"  attack witness replay {'ok' if ok else 'FAILED'} (distortion {distortion:.9g})")
    return 1, 0 if ok else 1


def _cmd_replay(args) -> int:
    with open(args.report) as fh:
        doc = json.load(fh)
    tol = Tolerance(
        doc.get("config", {}).get("atol", args.atol),
        doc.get("config", {}).get("rtol", args.rtol),
    )
    command = doc.get("command")
    if command == "audit":
        checked, failed = _replay_audit(doc, tol)
    elif command == "attack":
        checked, failed = _replay_attack(doc, tol)
    elif command == "witness":
        outcomes = [replay_witness(c["case"]) for c in doc["results"]["cases"]]
        checked, failed = len(outcomes), sum(not o.passed for o in outcomes)
        for o in outcomes:
            print(f"  {o.case_id:<20} {'ok' if o.passed else 'FAILED'}")
    else:
        print(f"nothing to replay in a {command!r} report")
        return 0
    print(f"replayed {checked} witnesses, {failed} failures")
    return 0 if failed == 0 else 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "compute": _cmd_compute,
        "audit": _cmd_audit,
        "attack": _cmd_attack,
        "witness": _cmd_witness,
        "replay": _cmd_replay,
    }
    try:
        return handlers[args.cmd](args)
    except (SybilineqError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
