"""Exhaustive search over beta-sets with a fixed largest element.

For each ``n`` every subset of ``{1, ..., n}`` containing ``n`` is grouped by
hook multiset. Within each class every pair of distinct members is checked
two ways: by the symmetric-difference criterion and by direct conjugation.

The work is split into independent chunks that may run in worker processes.
Chunk results are merged in submission order and then sorted, so a parallel
run produces the same report as a sequential one.
"""
from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from .criterion import (
    is_conjugate_direct,
    proof_identity_residuals,
    step1_derived_sets,
    theorem_criterion,
)
from .multiset import conjugate_beta, hooks_via_beta
from .partition import BetaSet

__all__ = [
    "THREADS_ENV",
    "DEFAULT_N_MAX",
    "EquivClass",
    "SearchReport",
    "PairRecord",
    "resolve_jobs",
    "enumerate_beta_sets",
    "group_by_hook_multiset",
    "find_hook_equivalent_pairs",
    "validate_theorem",
]

log = logging.getLogger(__name__)

THREADS_ENV = "HOOKSET_THREADS"
DEFAULT_N_MAX = 14
_CHUNK_MASKS = 1 << 10
_CHUNK_CLASSES = 64


def resolve_jobs(jobs: int | None = None) -> int:
    """Number of worker processes: ``jobs`` (default: CPU count), capped by ``HOOKSET_THREADS``."""
    want = jobs if jobs is not None else (os.cpu_count() or 1)
    cap = os.environ.get(THREADS_ENV)
    if cap:
        try:
            want = min(want, int(cap))
        except ValueError:
            log.warning("ignoring non-integer %s=%r", THREADS_ENV, cap)
    return max(1, want)


def _pmap(func, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [func(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
        return list(pool.map(func, *zip(*tasks)))


def _mask_to_elements(n: int, mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(n - 1) if mask >> i & 1) + (n,)


def enumerate_beta_sets(n: int) -> Iterator[BetaSet]:
    """Every subset of ``{1, ..., n}`` containing ``n``, in bitmask order.

    Bit ``i`` of the mask selects ``i + 1``; there are ``2 ** (n - 1)`` sets.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    for mask in range(1 << (n - 1)):
        yield BetaSet(_mask_to_elements(n, mask))


@dataclass(frozen=True)
class EquivClass:
    n: int
    key: str
    members: tuple[BetaSet, ...]

    def __len__(self) -> int:
        return len(self.members)


def _group_chunk(n: int, lo: int, hi: int) -> dict[str, list[tuple[int, ...]]]:
    groups: dict[str, list[tuple[int, ...]]] = {}
    for mask in range(lo, hi):
        elems = _mask_to_elements(n, mask)
        key = hooks_via_beta(BetaSet(elems)).key()
        groups.setdefault(key, []).append(elems)
    return groups


def _key_values(key: str) -> tuple[int, ...]:
    return tuple(json.loads(key))


def _merge_groups(parts: list[dict[str, list]]) -> dict[str, list]:
    merged: dict[str, list] = {}
    for part in parts:
        for key, members in part.items():
            merged.setdefault(key, []).extend(members)
    return merged


def _classes_from_groups(n: int, groups: dict[str, list]) -> list[EquivClass]:
    return [
        EquivClass(n, key, tuple(BetaSet(m) for m in sorted(groups[key])))
        for key in sorted(groups, key=_key_values)
    ]


def _group_tasks(n: int) -> list[tuple[int, int, int]]:
    total = 1 << (n - 1)
    return [(n, lo, min(lo + _CHUNK_MASKS, total)) for lo in range(0, total, _CHUNK_MASKS)]


def group_by_hook_multiset(n: int, jobs: int = 1) -> list[EquivClass]:
    """Hook-multiset classes of the beta-sets with largest element ``n``.

    Classes are ordered by their ascending hook lists; members by their
    ascending element lists.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    parts = _pmap(_group_chunk, _group_tasks(n), resolve_jobs(jobs))
    return _classes_from_groups(n, _merge_groups(parts))


def find_hook_equivalent_pairs(n: int) -> Iterator[tuple[BetaSet, BetaSet, bool]]:
    for cls in group_by_hook_multiset(n):
        for a, b in combinations(cls.members, 2):
            yield a, b, is_conjugate_direct(a, b)


@dataclass
class PairRecord:
    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    conjugate: bool
    criterion: bool

    def to_dict(self) -> dict:
        return {"n": self.n, "a": list(self.a), "b": list(self.b),
                "conjugate": self.conjugate, "criterion": self.criterion}


@dataclass
class _Tally:
    conjugate: int = 0
    non_conjugate: int = 0
    identical_excluded: int = 0
    one_sided_symmetric: int = 0
    proof_checked: int = 0
    mismatches: list[dict] = field(default_factory=list)
    pairs: list[PairRecord] = field(default_factory=list)

    def add(self, other: _Tally) -> None:
        self.conjugate += other.conjugate
        self.non_conjugate += other.non_conjugate
        self.identical_excluded += other.identical_excluded
        self.one_sided_symmetric += other.one_sided_symmetric
        self.proof_checked += other.proof_checked
        self.mismatches.extend(other.mismatches)
        self.pairs.extend(other.pairs)


def _mismatch(n: int, a: BetaSet, b: BetaSet, check: str, detail) -> dict:
    return {"n": n, "a": list(a), "b": list(b), "check": check, "detail": detail}


def _check_pair(n: int, a: BetaSet, b: BetaSet, tally: _Tally) -> None:
    holds, witness = theorem_criterion(a, b)
    direct = is_conjugate_direct(a, b)
    tally.pairs.append(PairRecord(n, tuple(a), tuple(b), direct, holds))
    if direct:
        tally.conjugate += 1
    else:
        tally.non_conjugate += 1
    if witness.a_sym != witness.b_sym:
        tally.one_sided_symmetric += 1
    if holds != direct:
        tally.mismatches.append(_mismatch(n, a, b, "criterion", {"criterion": holds, "direct": direct}))
    if holds:
        tally.proof_checked += 1
        step1 = step1_derived_sets(a, b)
        if not (step1.first_sym and step1.second_sym):
            tally.mismatches.append(_mismatch(n, a, b, "step1", [step1.first_sym, step1.second_sym]))
        residuals = proof_identity_residuals(a, b)
        if any(residuals):
            tally.mismatches.append(_mismatch(n, a, b, "identity", residuals))


def _check_classes(n: int, classes: list[tuple[tuple[int, ...], ...]]) -> _Tally:
    tally = _Tally()
    for members in classes:
        betas = [BetaSet(m) for m in members]
        for a in betas:
            if conjugate_beta(a) == a:
                tally.identical_excluded += 1
        for a, b in combinations(betas, 2):
            _check_pair(n, a, b, tally)
    return tally


@dataclass
class SearchReport:
    """Outcome of :func:`validate_theorem` over all ``n <= n_max``.

    ``identical_excluded`` counts self-conjugate beta-sets, whose conjugate
    is not a distinct partner. ``one_sided_symmetric`` counts pairs where
    exactly one of the two set differences is symmetric. ``proof_checked``
    counts pairs on which the intermediate proof checks were run.
    """

    n_max: int
    class_count: int
    conjugate: int
    non_conjugate: int
    identical_excluded: int = 0
    one_sided_symmetric: int = 0
    proof_checked: int = 0
    mismatches: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "class_count": self.class_count,
            "pairs": {
                "conjugate": self.conjugate,
                "non_conjugate": self.non_conjugate,
                "identical_excluded": self.identical_excluded,
                "one_sided_symmetric": self.one_sided_symmetric,
                "proof_checked": self.proof_checked,
            },
            "mismatches": self.mismatches,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> SearchReport:
        pairs = d["pairs"]
        return cls(
            n_max=d["n_max"],
            class_count=d["class_count"],
            conjugate=pairs["conjugate"],
            non_conjugate=pairs["non_conjugate"],
            identical_excluded=pairs.get("identical_excluded", 0),
            one_sided_symmetric=pairs.get("one_sided_symmetric", 0),
            proof_checked=pairs.get("proof_checked", 0),
            mismatches=list(d["mismatches"]),
            elapsed_ms=d["elapsed_ms"],
        )


def validate_theorem(
    n_max: int = DEFAULT_N_MAX,
    jobs: int = 1,
    on_pair: Callable[[PairRecord], None] | None = None,
) -> SearchReport:
    """Check the criterion against direct conjugation for every ``n <= n_max``.

    Mismatches are collected in the report rather than raised. ``jobs > 1``
    spreads both the grouping and the pair checks over worker processes.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    start = time.perf_counter()
    workers = resolve_jobs(jobs)

    tasks = [t for n in range(1, n_max + 1) for t in _group_tasks(n)]
    parts = _pmap(_group_chunk, tasks, workers)
    by_n: dict[int, list[dict]] = {}
    for (n, _, _), part in zip(tasks, parts):
        by_n.setdefault(n, []).append(part)

    class_count = 0
    check_tasks = []
    for n in range(1, n_max + 1):
        classes = _classes_from_groups(n, _merge_groups(by_n[n]))
        class_count += len(classes)
        members = [tuple(tuple(m) for m in c.members) for c in classes]
        for lo in range(0, len(members), _CHUNK_CLASSES):
            check_tasks.append((n, members[lo:lo + _CHUNK_CLASSES]))

    tally = _Tally()
    for part in _pmap(_check_classes, check_tasks, workers):
        tally.add(part)
    if on_pair is not None:
        for rec in tally.pairs:
            on_pair(rec)

    elapsed = (time.perf_counter() - start) * 1000.0
    log.debug("validated n<=%d in %.1f ms with %d worker(s)", n_max, elapsed, workers)
    return SearchReport(
        n_max=n_max,
        class_count=class_count,
        conjugate=tally.conjugate,
        non_conjugate=tally.non_conjugate,
        identical_excluded=tally.identical_excluded,
        one_sided_symmetric=tally.one_sided_symmetric,
        proof_checked=tally.proof_checked,
        mismatches=tally.mismatches,
        elapsed_ms=round(elapsed, 3),
    )
