"""
Gröbner-Shirshov check of one identity at bounded scale.

Instances are enumerated on all basis arguments within the bounds, every
pair of instances is searched for compositions, and each composition is
reduced modulo the full rule set. Work is split by instance pair; with
``parallelism > 1`` the pairs are spread over a process pool whose workers
rebuild the (deterministic) instance list themselves, so only plain data
crosses process boundaries. Results are merged in task order, so the report
does not depend on scheduling.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..algebra.order import MonomialOrder, OrderKind
from ..algebra.words import Alphabet, occurrences
from ..identities.catalog import OLPI, get
from ..identities.ruleset import Instance, RuleSet
from ..rewriting.compositions import compositions
from ..rewriting.errors import RewritingError
from ..rewriting.reduction import reduce_composition
from .config import Bounds, Config, debug
from .errors import ResourceCapExceeded

GS = "GS-at-scale"
NOT_GS = "not-GS"
INCOMPLETE = "incomplete"


@dataclass
class CompositionRecord:
    task: Tuple[int, int]
    kind: str
    f: str
    g: str
    w: str
    witness: str
    trivial: Optional[bool]
    steps: int
    remainder: Optional[str] = None
    trace: Optional[List[Dict]] = None
    error: Optional[str] = None

    def to_dict(self) -> Dict:
        d = {
            "kind": self.kind,
            "f": self.f,
            "g": self.g,
            "w": self.w,
            "witness": self.witness,
            "trivial": self.trivial,
            "trace_len": self.steps,
        }
        for name in ("remainder", "trace", "error"):
            if getattr(self, name) is not None:
                d[name] = getattr(self, name)
        return d


@dataclass
class GSReport:
    family: str
    variant: Optional[str]
    order: str
    alphabet: str
    bounds: Bounds
    parameter: str
    instances: int
    compositions: List[CompositionRecord] = field(default_factory=list)
    skipped_ambient: int = 0
    incomplete_reasons: List[str] = field(default_factory=list)
    elapsed_ms: Optional[int] = None

    @property
    def failures(self) -> List[CompositionRecord]:
        return [c for c in self.compositions if c.trivial is False]

    @property
    def incomplete(self) -> bool:
        return bool(self.incomplete_reasons)

    @property
    def verdict(self) -> str:
        if self.failures:
            return NOT_GS
        if self.incomplete:
            return INCOMPLETE
        return GS

    def to_dict(self, timing: bool = False) -> Dict:
        d = {
            "family": self.family,
            "variant": self.variant,
            "order": self.order,
            "alphabet": self.alphabet,
            "bounds": self.bounds.to_dict(),
            "parameter": self.parameter,
            "instance_count": self.instances,
            "composition_count": len(self.compositions),
            "nontrivial_count": len(self.failures),
            "skipped_ambient": self.skipped_ambient,
            "incomplete": self.incomplete_reasons,
            "verdict": self.verdict,
            "compositions": [c.to_dict() for c in self.compositions],
        }
        if timing and self.elapsed_ms is not None:
            d["elapsed_ms"] = self.elapsed_ms
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2) + "\n"

    @staticmethod
    def from_dict(d: Dict) -> "GSReport":
        report = GSReport(d["family"], d["variant"], d["order"], d["alphabet"], Bounds(**d["bounds"]),
                          d["parameter"], d["instance_count"], skipped_ambient=d["skipped_ambient"],
                          incomplete_reasons=list(d["incomplete"]), elapsed_ms=d.get("elapsed_ms"))
        for c in d["compositions"]:
            report.compositions.append(
                CompositionRecord((-1, -1), c["kind"], c["f"], c["g"], c["w"], c["witness"], c["trivial"],
                                  c["trace_len"], c.get("remainder"), c.get("trace"), c.get("error")))
        return report


@dataclass(frozen=True)
class _Job:
    """Everything a worker needs to rebuild the rule set and instance list."""
    family: str
    variant: Optional[str]
    order: str
    alphabet: str
    bounds: Bounds
    sample: Optional[str]
    max_reduction_steps: int

    def build(self) -> Tuple[RuleSet, List[Instance]]:
        order = MonomialOrder(OrderKind.parse(self.order), Alphabet.parse(self.alphabet))
        sample = None if self.sample is None else Fraction(self.sample)
        rules = RuleSet(get(self.family), order, self.variant, sample)
        b = self.bounds
        return rules, rules.enumerate_instances(b.max_deg, b.max_odeg, b.max_dep)


_worker_state: Dict[str, object] = {}


def _worker_init(job: _Job):
    rules, instances = job.build()
    _worker_state.update(job=job, rules=rules, instances=instances)


def _worker_run(task: Tuple[int, int]) -> Tuple[Tuple[int, int], List[CompositionRecord], int]:
    return _run_task(_worker_state["job"], _worker_state["rules"], _worker_state["instances"], task)


def _run_task(job: _Job, rules: RuleSet, instances: List[Instance],
              task: Tuple[int, int]) -> Tuple[Tuple[int, int], List[CompositionRecord], int]:
    i, j = task
    f, g = instances[i], instances[j]
    records, skipped = [], 0
    for c in compositions(f.poly, g.poly, f.label, g.label):
        if job.bounds.max_ambient_deg is not None and c.w.deg > job.bounds.max_ambient_deg:
            skipped += 1
            continue
        record = CompositionRecord(task, str(c.kind), f.label, g.label, str(c.w), c.witness, None, 0)
        try:
            reduction = reduce_composition(c, rules, job.max_reduction_steps)
            record.trivial = reduction.is_zero
            record.steps = len(reduction.trace)
            if not reduction.is_zero:
                record.remainder = str(reduction.remainder)
                record.trace = [s.to_dict() for s in reduction.trace]
        except ResourceCapExceeded as e:
            record.error = str(e)
        except RewritingError as e:
            record.trivial = False
            record.error = str(e)
        debug(f"{record.kind} w={record.w} trivial={record.trivial} steps={record.steps}")
        records.append(record)
    return task, records, skipped


def composition_tasks(instances: List[Instance]) -> List[Tuple[int, int]]:
    """Ordered instance pairs ``(i, j)`` whose leading words overlap or include one another."""
    by_leading: Dict[object, List[int]] = {}
    by_prefix: Dict[Tuple, List[int]] = {}
    for j, inst in enumerate(instances):
        w = inst.poly.leading_word
        by_leading.setdefault(w, []).append(j)
        for k in range(1, w.breadth):
            by_prefix.setdefault(w.primes[:k], []).append(j)
    tasks = set()
    for i, inst in enumerate(instances):
        w = inst.poly.leading_word
        for occ in occurrences(w):
            for j in by_leading.get(occ.word, ()):
                if j != i or occ.word != w:
                    tasks.add((i, j))
        for k in range(1, w.breadth):
            for j in by_prefix.get(w.primes[k:], ()):
                tasks.add((i, j))
    return sorted(tasks)


def check_gs(phi: OLPI, order: MonomialOrder, bounds: Bounds, config: Optional[Config] = None,
             variant: Optional[str] = None, sample: Optional[Fraction] = None) -> GSReport:
    config = config or Config()
    start = time.monotonic()
    job = _Job(phi.name, variant, order.name, str(order.alphabet), bounds, None if sample is None else str(sample),
               config.max_reduction_steps)
    rules, instances = job.build()
    parameter = "symbolic" if sample is None else f"a={sample}"
    if not phi.template(variant).parametric:
        parameter = "none"
    report = GSReport(phi.name, variant, order.name, str(order.alphabet), bounds, parameter, len(instances))
    tasks = composition_tasks(instances)
    if config.max_compositions is not None and len(tasks) > config.max_compositions:
        report.incomplete_reasons.append(str(ResourceCapExceeded(len(tasks), config.max_compositions,
                                                                 "instance pairs")))
        tasks = tasks[:config.max_compositions]
    debug(f"{rules.name} under {order.name}: {len(instances)} instances, {len(tasks)} pairs")

    results: Dict[Tuple[int, int], Tuple[List[CompositionRecord], int]] = {}
    deadline = None if config.timeout is None else start + config.timeout
    if config.parallelism <= 1 or len(tasks) < 2:
        for task in tasks:
            if deadline is not None and time.monotonic() > deadline:
                break
            _, records, skipped = _run_task(job, rules, instances, task)
            results[task] = (records, skipped)
    else:
        with ProcessPoolExecutor(max_workers=config.parallelism, initializer=_worker_init,
                                 initargs=(job, )) as executor:
            pending = {executor.submit(_worker_run, t) for t in tasks}
            while pending:
                remaining = None if deadline is None else max(0.0, deadline - time.monotonic())
                done, pending = wait(pending, timeout=remaining, return_when=FIRST_COMPLETED)
                for fut in done:
                    task, records, skipped = fut.result()
                    results[task] = (records, skipped)
                if deadline is not None and time.monotonic() > deadline:
                    for fut in pending:
                        fut.cancel()
                    break
    if len(results) < len(tasks):
        report.incomplete_reasons.append(f"timeout after {config.timeout}s: {len(results)} of {len(tasks)} pairs done")

    for task in sorted(results):
        records, skipped = results[task]
        report.compositions.extend(records)
        report.skipped_ambient += skipped
    undecided = sum(1 for c in report.compositions if c.trivial is None)
    if undecided:
        report.incomplete_reasons.append(f"{undecided} compositions exceeded the reduction step cap")
    report.elapsed_ms = int((time.monotonic() - start) * 1000)
    return report
