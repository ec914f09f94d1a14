"""``dupring`` command line: report, spectrum, verify."""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .duplication import LiftCase, duplicate, lift_prime
from .errors import CapExceeded, DupRingError, ParseError
from .ideals import DEFAULT_LATTICE_CAP, ideal_from_generators, parse_generators, spectrum
from .properties import CHECKERS, check_property
from .suite import run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dupring", description="Amalgamated duplication R ⋈ I: property and theorem checks.")
    p.add_argument("--version", action="version", version=f"dupring {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("table", "json"), default="table")
        sp.add_argument("--cap", type=int, default=DEFAULT_LATTICE_CAP, help="max ideal-lattice size")

    r = sub.add_parser("report", help="run property checkers on R and R ⋈ I")
    r.add_argument("ring")
    r.add_argument("--ideal", default=None, help="comma-separated generators of I")
    r.add_argument("--props", default="reduced,vnr,local,perfect,steinitz", help=f"any of: {','.join(CHECKERS)}")
    common(r)

    s = sub.add_parser("spectrum", help="prime lifting table for R ⋈ I")
    s.add_argument("ring")
    s.add_argument("--ideal", default="", help="comma-separated generators of I (empty: zero ideal)")
    common(s)

    v = sub.add_parser("verify", help="run a verification suite over the built-in corpus")
    v.add_argument("--suite", choices=("paper",), default="paper")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--samples", type=int, default=None, help="override every sample count; 0 skips sampled checks")
    v.add_argument("--timings", action="store_true", help="include elapsed times (breaks byte-identical output)")
    common(v)
    return p


def _load(ring: str, ideal: str | None):
    from .rings import make_ring

    R = make_ring(ring)
    if ideal is None:
        return R, None, None
    I = ideal_from_generators(R, parse_generators(R, ideal))
    return R, I, duplicate(R, I)


# -- report ----------------------------------------------------------------

def cmd_report(args) -> tuple[dict, int]:
    props = [x.strip() for x in args.props.split(",") if x.strip()]
    unknown = [x for x in props if x not in CHECKERS]
    if unknown:
        raise ParseError(f"unknown properties: {', '.join(unknown)}")
    R, I, D = _load(args.ring, args.ideal)
    rings = [R] if D is None else [R, D]
    rows = [check_property(name, S, args.cap).to_dict() for S in rings for name in props]
    doc = {
        "schema": "dupring.report/1",
        "tool_version": __version__,
        "ring": R.descriptor,
        "ideal": None if I is None else str(I),
        "dup": None if D is None else D.descriptor,
        "results": rows,
    }
    return doc, EXIT_OK


def _report_table(doc: dict) -> str:
    lines = [f"{'ring':<40} {'property':<12} {'verdict':<8} {'method':<14} witness"]
    for r in doc["results"]:
        lines.append(
            f"{r['ring']:<40} {r['prop']:<12} {str(r['verdict']).lower():<8} {r['method']:<14} {r['witness'] or ''}"
        )
    return "\n".join(lines)


# -- spectrum ----------------------------------------------------------------

def cmd_spectrum(args) -> tuple[dict, int]:
    R, I, D = _load(args.ring, args.ideal if args.ideal.strip() else "0")
    spec_d = spectrum(D, args.cap)
    rows, lifted, expected = [], set(), 0
    for pt in spectrum(R, args.cap):
        lift = lift_prime(D, pt.ideal)
        lifted |= {L.index_set for L in lift.lifts}
        expected += 1 if lift.case is LiftCase.CONTAINS_I else 2
        rows.append({
            "prime": str(pt.ideal),
            "case": lift.case.value,
            "lifts": len(lift.lifts),
            "lifted_ideals": [str(L) for L in lift.lifts],
        })
    actual = {pt.ideal.index_set for pt in spec_d}
    exact = actual == lifted
    doc = {
        "schema": "dupring.spectrum/1",
        "tool_version": __version__,
        "ring": R.descriptor,
        "ideal": str(I),
        "dup": D.descriptor,
        "rows": rows,
        "total_lifts": len(lifted),
        "spec_dup_size": len(actual),
        "count_formula": expected,
        "exact_equality": exact,
    }
    return doc, EXIT_OK if exact and expected == len(actual) else EXIT_FAIL


def _spectrum_table(doc: dict) -> str:
    lines = [f"{doc['dup']}", f"{'prime of R':<20} {'case':<14} lifts"]
    for r in doc["rows"]:
        lines.append(f"{r['prime']:<20} {r['case']:<14} {r['lifts']}")
    verdict = "equal" if doc["exact_equality"] else "NOT equal"
    lines.append(f"total lifts {doc['total_lifts']}, |Spec(D)| = {doc['spec_dup_size']}: {verdict}")
    return "\n".join(lines)


# -- verify ------------------------------------------------------------------

def cmd_verify(args) -> tuple[dict, int]:
    if args.samples is not None and args.samples < 0:
        raise ParseError("--samples must be >= 0")
    doc = run_suite(args.suite, seed=args.seed, samples=args.samples, cap=args.cap, timings=args.timings)
    return doc, EXIT_FAIL if doc["summary"]["failed"] else EXIT_OK


def _verify_table(doc: dict) -> str:
    lines = [f"suite {doc['suite']}  seed {doc['seed']}  dupring {doc['tool_version']}", ""]
    for t in doc["theorems"]:
        c = t["counts"]
        extra = f"  {t['elapsed_s']:.2f}s" if "elapsed_s" in t else ""
        lines.append(f"{t['status'].upper():<5} {t['id']:<26} pass {c['pass']:>3}  fail {c['fail']:>3}  skip {c['skip']:>3}{extra}")
        for chk in t["checks"]:
            if chk["status"] == "fail":
                lines.append(f"      fail: {chk['subject']}  {json.dumps(chk['detail'], sort_keys=True)}")
    s = doc["summary"]
    lines += ["", f"passed {s['passed']}  failed {s['failed']}  skipped {s['skipped']}"]
    return "\n".join(lines)


COMMANDS = {
    "report": (cmd_report, _report_table),
    "spectrum": (cmd_spectrum, _spectrum_table),
    "verify": (cmd_verify, _verify_table),
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    run, table = COMMANDS[args.command]
    try:
        doc, code = run(args)
    except CapExceeded as exc:
        err = {"error": "CapExceeded", "what": exc.what, "size": exc.size, "cap": exc.cap}
        if args.format == "json":
            print(json.dumps(err, sort_keys=True))
        else:
            print(f"cap exceeded: {exc.what} has size {exc.size} > cap {exc.cap} (raise --cap)", file=sys.stderr)
        return EXIT_FAIL
    except (ParseError, ValueError) as exc:
        print(f"dupring: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DupRingError as exc:
        print(f"dupring: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(table(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
