"""``edtop`` command-line interface.

Exit codes: 0 all checks passed or the claim holds, 1 a counterexample or
disagreement was found, 2 usage error, 3 invalid topology file or claim text.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .conditions import ALL_IDS, CHECKS, CONDITION_IDS
from .dsl import ClaimError, model_check, parse_claim
from .enumeration import CapExceeded, check_cap, enumerate_homeo_classes, enumerate_topologies
from .harness import SCOPE_NOTE, ed_census, verify_theorem
from .io import IoError, SchemaError, dumps, load_topology, report_document, topology_to_data
from .pointset import roster
from .topology import TopologyError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3
FILTER_NAMES = {"all": "all", "ed": "ed_only", "non-ed": "non_ed_only"}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="edtop", description="Extremally disconnected finite spaces.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, timing=True):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if timing:
            sp.add_argument("--timing", action="store_true", help="record wall-clock duration")

    c = sub.add_parser("check", help="evaluate conditions a..g on one topology file")
    c.add_argument("file")
    c.add_argument("--condition", choices=CONDITION_IDS + ("all",), default="all")
    c.add_argument("--lemmas", action="store_true", help="also check lemma1, corollary2, hint")
    common(c, timing=False)

    v = sub.add_parser("verify", help="exhaustive equivalence sweep")
    v.add_argument("--max-n", type=int, default=5)
    v.add_argument("--up-to-homeo", action="store_true")
    v.add_argument("--extended", action="store_true", help="allow n = 6, 7")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--cap", type=int, default=100, help="findings kept per kind")
    common(v)

    e = sub.add_parser("enumerate", help="list topologies on n points")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--up-to-homeo", action="store_true")
    e.add_argument("--extended", action="store_true")
    common(e, timing=False)

    cl = sub.add_parser("claim", help="model-check a quantified identity")
    cl.add_argument("text")
    cl.add_argument("--max-n", type=int, default=4)
    cl.add_argument("--filter", choices=tuple(FILTER_NAMES), default="all")
    cl.add_argument("--extended", action="store_true")
    cl.add_argument("--cap", type=int, default=100)
    common(cl)

    cs = sub.add_parser("census", help="count extremally disconnected topologies")
    cs.add_argument("--max-n", type=int, default=5)
    cs.add_argument("--via", choices=("a", "g"), default="a")
    cs.add_argument("--extended", action="store_true")
    common(cs)
    return p


def _cmd_check(args) -> int:
    T = load_topology(args.file)
    ids = list(CONDITION_IDS if args.condition == "all" else (args.condition,))
    if args.lemmas:
        ids += [i for i in ALL_IDS if i not in CONDITION_IDS]
    verdicts = [CHECKS[cid](T) for cid in ids]
    ok = all(v.holds for v in verdicts)
    if args.format == "json":
        doc = report_document(
            "check",
            {"file": args.file, "condition": args.condition, "lemmas": args.lemmas},
            [{"n": T.n, "opens": len(T.opens)}],
            [{"condition": v.condition_id, "witness": v.witness.as_dict()} for v in verdicts if not v.holds],
            verdicts={v.condition_id: v.holds for v in verdicts},
        )
        sys.stdout.write(dumps(doc))
    else:
        print(f"topology on {T.n} points, opens: {' '.join(map(roster, T.open_masks))}")
        for v in verdicts:
            line = f"{v.condition_id:<11} {'holds' if v.holds else 'FAILS'}"
            if v.witness is not None:
                line += f"  {v.witness}"
            print(line)
    return EXIT_OK if ok else EXIT_FAIL


def _progress(n: int, count: int) -> None:
    if count % 10000 == 0:
        print(f"  n={n}: {count} topologies", file=sys.stderr, flush=True)


def _cmd_verify(args) -> int:
    report = verify_theorem(
        args.max_n,
        args.up_to_homeo,
        extended=args.extended,
        jobs=args.jobs,
        cap=args.cap,
        progress=_progress if args.extended else None,
    )
    if args.format == "json":
        doc = report_document(
            "verify",
            {"max_n": args.max_n, "up_to_homeo": args.up_to_homeo, "cap": args.cap},
            [s.as_dict() for s in report.per_n],
            [f.as_dict() for f in report.findings],
            report.duration_ms if args.timing else None,
            scope=SCOPE_NOTE,
            passed=report.passed,
        )
        sys.stdout.write(dumps(doc))
    else:
        print(SCOPE_NOTE)
        print(f"{'n':>2} {'models':>8} {'ED':>7} {'disagree':>8} {'lemma1':>6} "
              f"{'cor2':>5} {'hint':>6} {'hint_open':>9}")
        for s in report.per_n:
            lf = s.lemma_failures
            print(f"{s.n:>2} {s.topologies:>8} {s.ed_count:>7} {s.disagreements:>8} "
                  f"{lf['lemma1']:>6} {lf['corollary2']:>5} {lf['hint']:>6} {lf['hint_open']:>9}")
        for kind in ("disagreement", "lemma1", "corollary2", "hint"):
            found = report.findings_of(kind)
            if found:
                f = found[0]
                detail = (
                    "".join("T" if v else "F" for v in f.verdicts) + " over a..g"
                    if f.verdicts is not None
                    else str(f.witness)
                )
                print(f"first {kind}: n={f.n} #{f.index} opens "
                      f"{' '.join(map(roster, f.topology.open_masks))}: {detail}")
        if args.timing:
            print(f"duration: {report.duration_ms:.0f} ms")
        print("PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_enumerate(args) -> int:
    check_cap(args.n, args.extended)
    gen = enumerate_homeo_classes if args.up_to_homeo else enumerate_topologies
    tops = gen(args.n, args.extended)
    if args.format == "json":
        items = [topology_to_data(T) for T in tops]
        doc = report_document(
            "enumerate",
            {"n": args.n, "up_to_homeo": args.up_to_homeo},
            [{"n": args.n, "topologies": len(items)}],
            [],
            topologies=items,
        )
        sys.stdout.write(dumps(doc))
    else:
        count = 0
        for count, T in enumerate(tops, 1):
            print(" ".join(map(roster, T.open_masks)))
        print(f"# {count} topologies on {args.n} points", file=sys.stderr)
    return EXIT_OK


def _cmd_claim(args) -> int:
    claim = parse_claim(args.text)
    report = model_check(
        claim, args.max_n, FILTER_NAMES[args.filter], extended=args.extended, max_failures=args.cap
    )
    if args.format == "json":
        doc = report_document(
            "claim",
            {"claim": str(claim), "max_n": args.max_n, "filter": args.filter, "cap": args.cap},
            [
                {"n": n, "models_checked": report.models_checked[n], "failures": report.failure_counts[n]}
                for n in sorted(report.models_checked)
            ],
            [
                {"n": f.n, "index": f.index, **topology_to_data(f.topology), "witness": f.witness.as_dict()}
                for f in report.failures
            ],
            report.duration_ms if args.timing else None,
            scope=SCOPE_NOTE,
            holds=report.holds,
        )
        sys.stdout.write(dumps(doc))
    else:
        print(f"claim: {claim}")
        for n in sorted(report.models_checked):
            print(f"n={n}: {report.models_checked[n]} models, {report.failure_counts[n]} counterexamples")
        if report.failures:
            f = report.failures[0]
            print(f"first counterexample: n={f.n} #{f.index} opens "
                  f"{' '.join(map(roster, f.topology.open_masks))}")
            print(f"  {f.witness}")
        if args.timing:
            print(f"duration: {report.duration_ms:.0f} ms")
        print("HOLDS" if report.holds else "COUNTEREXAMPLE")
    return EXIT_OK if report.holds else EXIT_FAIL


def _cmd_census(args) -> int:
    import time

    start = time.perf_counter()
    counts = ed_census(args.max_n, args.via, extended=args.extended)
    elapsed = (time.perf_counter() - start) * 1000
    if args.format == "json":
        doc = report_document(
            "census",
            {"max_n": args.max_n, "via": args.via},
            [{"n": n, "ed_count": c} for n, c in counts.items()],
            [],
            elapsed if args.timing else None,
            scope=SCOPE_NOTE,
        )
        sys.stdout.write(dumps(doc))
    else:
        for n, c in counts.items():
            print(f"n={n}: {c}")
    return EXIT_OK


COMMANDS = {
    "check": _cmd_check,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
    "claim": _cmd_claim,
    "census": _cmd_census,
}


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (IoError, SchemaError, TopologyError, ClaimError) as exc:
        print(f"edtop: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"edtop: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"edtop: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
