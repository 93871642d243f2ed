"""Predicate-vs-oracle campaigns over every positive graphic sequence in a range."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .characterize import predicate_for
from .graph import TargetPattern, target_pattern
from .oracle import DEFAULT_CAP, OracleError, oracle_search
from .sequence import DegreeSequence, iter_graphic_terms

__all__ = ["VerificationReport", "verify_range", "check_one"]


@dataclass
class VerificationReport:
    target: TargetPattern
    n_min: int
    n_max: int
    sequences_tested: int = 0
    agreements: int = 0
    mismatches: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    mode: str = "exhaustive"

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self, include_timing: bool = False) -> dict:
        # timing is left out by default so reports are byte-identical across runs
        out = {
            "target": self.target.tag,
            "n_range": [self.n_min, self.n_max],
            "mode": self.mode,
            "sequences_tested": self.sequences_tested,
            "agreements": self.agreements,
            "mismatches": self.mismatches,
        }
        if include_timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def check_one(terms: tuple[int, ...], tag: str, mode: str, cap: int) -> dict | None:
    """Compare predicate and oracle on one sequence; a mismatch record or None."""
    seq = DegreeSequence(terms)
    verdict = predicate_for(tag)(seq)
    found = oracle_search(seq, tag, mode, cap)
    if verdict.potential == found.potential:
        return None
    return {
        "sequence": str(seq),
        "predicate_verdict": verdict.to_json(),
        "oracle_result": found.to_json(),
    }


def _run_chunk(args) -> tuple[int, list[tuple[int, dict]]]:
    chunk, tag, mode, cap = args
    bad = []
    for index, terms in chunk:
        record = check_one(terms, tag, mode, cap)
        if record is not None:
            bad.append((index, record))
    return len(chunk), bad


def verify_range(
    target: TargetPattern | str,
    n_min: int,
    n_max: int,
    workers: int = 1,
    mode: str = "exhaustive",
    cap: int = DEFAULT_CAP,
) -> VerificationReport:
    """Check predicate == oracle on every positive graphic sequence with n_min <= n <= n_max.

    Sequences are dealt round-robin to ``workers`` processes; mismatches are
    re-ordered by enumeration position so the report does not depend on the
    worker count.
    """
    target = target_pattern(target)
    if not target.order <= n_min <= n_max:
        raise ValueError(f"need {target.order} <= n_min <= n_max, got {n_min}..{n_max}")
    if n_max > cap:
        raise OracleError(f"n_max={n_max} exceeds the oracle vertex cap {cap}")
    start = time.perf_counter()
    items = [
        (index, terms)
        for index, terms in enumerate(
            t for n in range(n_min, n_max + 1) for t in iter_graphic_terms(n, positive_only=True)
        )
    ]
    workers = max(1, workers)
    # round-robin keeps the expensive sparse sequences spread over workers
    chunks = [(items[w::workers], target.tag, mode, cap) for w in range(workers)]
    if workers == 1:
        results = [_run_chunk(chunks[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_chunk, chunks))
    tested = sum(count for count, _ in results)
    bad = sorted((pair for _, pairs in results for pair in pairs), key=lambda p: p[0])
    return VerificationReport(
        target=target,
        n_min=n_min,
        n_max=n_max,
        sequences_tested=tested,
        agreements=tested - len(bad),
        mismatches=[record for _, record in bad],
        elapsed=time.perf_counter() - start,
        mode=mode,
    )
