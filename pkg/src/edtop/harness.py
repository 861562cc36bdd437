"""Exhaustive sweeps over finite topologies: equivalence of conditions a..g,
the regular-open lemmas, the proof-hint inclusion, and ED census counts."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .conditions import (
    CHECKS,
    CONDITION_IDS,
    Witness,
    check_a,
    check_e_unrestricted,
    check_g,
)
from .dsl import Claim, Failure, model_check
from .enumeration import (
    check_cap,
    enumerate_topologies,
    enumerate_topologies_slice,
    is_canonical,
    parent_count,
)
from .topology import Topology

SCOPE_NOTE = (
    "Checked exhaustively over finite topological spaces only; "
    "no conclusion about infinite spaces is drawn."
)
LEMMA_KEYS = ("lemma1", "corollary2", "hint", "hint_open")


@dataclass(frozen=True)
class TopologyResult:
    """Everything the equivalence sweep records about one topology."""

    index: int
    topology: Topology
    verdicts: tuple[bool, ...]  # conditions a..g in order
    lemma_witnesses: dict[str, Witness | None]  # None means the statement holds
    e_unrestricted: bool

    @property
    def consistent(self) -> bool:
        return len(set(self.verdicts)) == 1


def analyze(T: Topology, index: int = 0) -> TopologyResult:
    verdicts = tuple(CHECKS[cid](T).holds for cid in CONDITION_IDS)
    lemmas = {key: CHECKS[key](T).witness for key in LEMMA_KEYS}
    return TopologyResult(index, T, verdicts, lemmas, check_e_unrestricted(T).holds)


def _analyze_slice(n: int, start: int, stop: int, up_to_homeo: bool) -> tuple[int, list[TopologyResult]]:
    out = []
    count = 0
    for count, T in enumerate(enumerate_topologies_slice(n, start, stop), 1):
        if up_to_homeo and not is_canonical(T):
            continue
        out.append(analyze(T, count - 1))
    return count, out


def _stream(n: int, up_to_homeo: bool, extended: bool, jobs: int) -> Iterator[TopologyResult]:
    """Per-topology results in enumeration order, whatever the worker count."""
    if jobs <= 1:
        for i, T in enumerate(enumerate_topologies(n, extended)):
            if not up_to_homeo or is_canonical(T):
                yield analyze(T, i)
        return
    parents = parent_count(n)
    chunks = max(1, min(parents, jobs * 4))
    bounds = [parents * k // chunks for k in range(chunks + 1)]
    offset = 0
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(_analyze_slice, n, lo, hi, up_to_homeo)
            for lo, hi in zip(bounds, bounds[1:])
        ]
        for fut in futures:
            count, results = fut.result()
            for r in results:
                yield TopologyResult(
                    r.index + offset, r.topology, r.verdicts, r.lemma_witnesses, r.e_unrestricted
                )
            offset += count


@dataclass
class NStats:
    n: int
    topologies: int = 0
    ed_count: int = 0
    condition_counts: dict[str, int] = field(default_factory=lambda: dict.fromkeys(CONDITION_IDS, 0))
    disagreements: int = 0
    lemma_failures: dict[str, int] = field(default_factory=lambda: dict.fromkeys(LEMMA_KEYS, 0))
    e_unrestricted_mismatches: int = 0
    homeo_classes: int | None = None

    def as_dict(self) -> dict:
        d = {
            "n": self.n,
            "topologies": self.topologies,
            "ed_count": self.ed_count,
            "condition_counts": self.condition_counts,
            "disagreements": self.disagreements,
            "lemma_failures": self.lemma_failures,
            "e_unrestricted_mismatches": self.e_unrestricted_mismatches,
        }
        if self.homeo_classes is not None:
            d["homeo_classes"] = self.homeo_classes
        return d


@dataclass
class Finding:
    kind: str  # "disagreement" or one of LEMMA_KEYS
    n: int
    index: int
    topology: Topology
    verdicts: tuple[bool, ...] | None = None
    witness: Witness | None = None

    def as_dict(self) -> dict:
        d = {
            "kind": self.kind,
            "n": self.n,
            "index": self.index,
            "opens": [list(s.members) for s in self.topology.opens],
        }
        if self.verdicts is not None:
            d["verdicts"] = dict(zip(CONDITION_IDS, self.verdicts))
        if self.witness is not None:
            d["witness"] = self.witness.as_dict()
        return d


@dataclass
class EquivalenceReport:
    n_max: int
    up_to_homeo: bool
    per_n: list[NStats] = field(default_factory=list)
    findings: list[Finding] = field(default_factory=list)
    duration_ms: float = 0.0

    @property
    def disagreements(self) -> int:
        return sum(s.disagreements for s in self.per_n)

    def lemma_failures(self, key: str) -> int:
        return sum(s.lemma_failures[key] for s in self.per_n)

    def findings_of(self, kind: str) -> list[Finding]:
        return [f for f in self.findings if f.kind == kind]

    @property
    def passed(self) -> bool:
        """No disagreements among a..g and no failure of the two lemmas."""
        return (
            self.disagreements == 0
            and self.lemma_failures("lemma1") == 0
            and self.lemma_failures("corollary2") == 0
        )


def verify_theorem(
    n_max: int,
    up_to_homeo: bool = False,
    *,
    extended: bool = False,
    jobs: int = 1,
    cap: int = 100,
    progress: Callable[[int, int], None] | None = None,
) -> EquivalenceReport:
    """Evaluate every condition and lemma on every topology with 0..n_max points.

    Never stops at the first disagreement; up to ``cap`` findings of each kind
    are kept, while the per-n counters are always complete.
    """
    check_cap(n_max, extended)
    report = EquivalenceReport(n_max, up_to_homeo)
    kept: dict[str, int] = {}

    def keep(finding: Finding) -> None:
        if kept.get(finding.kind, 0) < cap:
            kept[finding.kind] = kept.get(finding.kind, 0) + 1
            report.findings.append(finding)

    start = time.perf_counter()
    for n in range(n_max + 1):
        stats = NStats(n, homeo_classes=0 if up_to_homeo else None)
        for r in _stream(n, up_to_homeo, extended, jobs):
            stats.topologies += 1
            for cid, v in zip(CONDITION_IDS, r.verdicts):
                stats.condition_counts[cid] += v
            if all(r.verdicts):
                stats.ed_count += 1
            if not r.consistent:
                stats.disagreements += 1
                keep(Finding("disagreement", n, r.index, r.topology, verdicts=r.verdicts))
            if r.e_unrestricted != r.verdicts[0]:
                stats.e_unrestricted_mismatches += 1
            for key, w in r.lemma_witnesses.items():
                if w is not None:
                    stats.lemma_failures[key] += 1
                    keep(Finding(key, n, r.index, r.topology, witness=w))
            if progress is not None:
                progress(n, stats.topologies)
        if up_to_homeo:
            stats.homeo_classes = stats.topologies
        report.per_n.append(stats)
    report.duration_ms = (time.perf_counter() - start) * 1000
    return report


def ed_census(n_max: int, via: str = "a", *, extended: bool = False) -> dict[int, int]:
    """Number of extremally disconnected labeled topologies for each n."""
    check = {"a": check_a, "g": check_g}[via]
    check_cap(n_max, extended)
    return {
        n: sum(1 for T in enumerate_topologies(n, extended) if check(T).holds)
        for n in range(n_max + 1)
    }


def find_counterexample(c: Claim, n_max: int, *, extended: bool = False) -> Failure | None:
    """First failing (topology, witness) in enumeration order, if any."""
    report = model_check(c, n_max, "all", extended=extended, max_failures=1, stop_at_first=True)
    return report.failures[0] if report.failures else None
