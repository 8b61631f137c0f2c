"""Randomized witness search and an exhaustive minimal-base oracle for tiny n.

Both fix the first partition to the canonical one ``{0..a-1}, {a..2a-1}, ...``:
Sym(n) is transitive on regular partitions, and so is Alt(n) because the
partition stabilizer contains a transposition once ``a >= 2``.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .constructions import SEARCH
from .core import (ALT, GROUPS, UNAVAILABLE, VERIFIED, DomainError, Params, Provenance,
                   RegularPartition, WitnessCertificate, count_regular_partitions)
from .formulas import lower_bound_alt, lower_bound_sym
from .verifier import is_base

log = logging.getLogger(__name__)

RANDOMIZED = "randomized"
EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class SearchConfig:
    seed: int = 0
    budget: int = 5000
    mode: str = RANDOMIZED
    workers: int = 1

    def __post_init__(self):
        if self.budget < 1:
            raise ValueError("budget must be at least 1")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


def random_regular_partition(a: int, b: int, rng: np.random.Generator) -> RegularPartition:
    """Uniform over all (a,b)-regular partitions: shuffle, then cut into blocks."""
    if a < 1 or b < 1:
        raise DomainError("a and b must be positive")
    labels = np.empty(a * b, dtype=np.int64)
    labels[rng.permutation(a * b)] = np.arange(a * b) // a
    return RegularPartition.from_labels(labels)


def canonical_partition(a: int, b: int) -> RegularPartition:
    return RegularPartition.from_labels(np.arange(a * b) // a)


def _repair_chain(a: int, b: int, size: int, group: str, seed, budget: int):
    """Random tuples pushed towards injective codes by label swaps, each tested exactly.

    Returns ``(partitions, tested)``; partitions is None when the budget ran
    out.  A swap exchanges the parts of two points within one partition, so
    regularity is kept; it is accepted when it does not increase the number
    of surplus points in shared fibers.
    """
    rng = np.random.default_rng(seed)
    n = a * b
    allowed = 1 if group == ALT else 0
    labels = np.empty((size, n), dtype=np.int64)
    labels[0] = np.arange(n) // a
    for i in range(1, size):
        labels[i] = random_regular_partition(a, b, rng).labels
    weights = b ** np.arange(size, dtype=object)

    def key(p: int) -> int:
        return int(sum(int(labels[i, p]) * weights[i] for i in range(size)))

    keys = [key(p) for p in range(n)]
    counts = Counter(keys)

    def excess() -> int:
        return max(0, n - len(counts) - allowed)

    def swap(i: int, p: int, q: int) -> None:
        for x in (p, q):
            counts[keys[x]] -= 1
            if counts[keys[x]] == 0:
                del counts[keys[x]]
        labels[i, p], labels[i, q] = labels[i, q], labels[i, p]
        for x in (p, q):
            keys[x] = key(x)
            counts[keys[x]] += 1

    tested = 0
    moves = 0
    max_moves = budget * 40 * n
    while tested < budget and moves < max_moves:
        cost = excess()
        while cost > 0 and moves < max_moves:
            moves += 1
            crowded = [p for p in range(n) if counts[keys[p]] > 1]
            p = crowded[rng.integers(len(crowded))]
            i = int(rng.integers(1, size))
            q = int(rng.integers(n))
            if labels[i, p] == labels[i, q]:
                continue
            swap(i, p, q)
            new = excess()
            if new <= cost or rng.random() < 0.02:
                cost = new
            else:
                swap(i, p, q)
        if cost > 0:
            break
        ps = [RegularPartition.from_labels(labels[i]) for i in range(size)]
        tested += 1
        if is_base(ps, group):
            return ps, tested
        for _ in range(2):
            i = int(rng.integers(1, size))
            p, q = rng.choice(n, size=2, replace=False)
            if labels[i, p] != labels[i, q]:
                swap(i, int(p), int(q))
    return None, tested


def _chain_job(args):
    return _repair_chain(*args)


def search_witness(a: int, b: int, size: int, group: str,
                   cfg: SearchConfig = SearchConfig()) -> WitnessCertificate:
    """Look for ``size`` partitions forming a base; never returns an unverified one.

    The outcome is either a verified certificate or one with status
    ``witness-unavailable`` once the budget (candidate tuples tested) is spent.
    """
    params = Params(a, b)
    if not params.faithful:
        raise DomainError("(2,2): the action is not faithful")
    if group not in GROUPS:
        raise ValueError(f"unknown group {group!r}")
    floor = lower_bound_alt(a, b) if group == ALT else lower_bound_sym(a, b)
    if size < floor:
        raise DomainError(f"size {size} is below the lower bound {floor}")

    if cfg.workers == 1:
        results = [_repair_chain(a, b, size, group, cfg.seed, cfg.budget)]
    else:
        seeds = np.random.SeedSequence(cfg.seed).spawn(cfg.workers)
        share = max(1, cfg.budget // cfg.workers)
        jobs = [(a, b, size, group, s, share) for s in seeds]
        with ProcessPoolExecutor(cfg.workers) as pool:
            results = list(pool.map(_chain_job, jobs))
    tested = sum(t for _, t in results)
    for ps, _ in results:
        if ps is not None and is_base(ps, group):
            prov = Provenance(SEARCH, (("seed", cfg.seed), ("tested", tested)))
            return WitnessCertificate(params, group, tuple(ps), prov, VERIFIED, expected_size=size)
    log.info("search for (%d,%d) %s size %d exhausted after %d candidates", a, b, group, size, tested)
    return WitnessCertificate(params, group, (), Provenance(SEARCH, (("seed", cfg.seed), ("tested", tested))),
                              UNAVAILABLE, expected_size=size,
                              detail=f"no base found among {tested} candidates")


def all_regular_partitions(a: int, b: int) -> Iterator[RegularPartition]:
    """Every (a,b)-regular partition, canonical one first."""
    n = a * b

    def rec(remaining: tuple[int, ...]):
        if not remaining:
            yield []
            return
        first, rest = remaining[0], remaining[1:]
        for mates in itertools.combinations(rest, a - 1):
            chosen = set(mates)
            left = tuple(p for p in rest if p not in chosen)
            for tail in rec(left):
                yield [(first,) + mates] + tail

    for parts in rec(tuple(range(n))):
        yield RegularPartition(parts)


def minimal_base_size_bruteforce(a: int, b: int, group: str, max_size: int,
                                 guard: int = 20000, max_points: int = 12) -> int | None:
    """Smallest base size by exhausting all tuples, or None if none up to ``max_size``.

    For each size below the answer this is a complete non-existence check.
    Refuses (``DomainError``) when the instance exceeds the guards.
    """
    if group not in GROUPS:
        raise ValueError(f"unknown group {group!r}")
    total = count_regular_partitions(a, b)
    if total > guard or a * b > max_points:
        raise DomainError(f"({a},{b}) too large for exhaustion: {total} partitions, n={a * b}")
    parts = list(all_regular_partitions(a, b))
    assert len(parts) == total
    n = a * b
    labels = np.stack([p.labels for p in parts]).astype(np.int64)
    for s in range(1, max_size + 1):
        weights = b ** np.arange(s, dtype=np.int64)
        for combo in itertools.combinations(range(1, total), s - 1):
            idx = (0,) + combo
            keys = weights @ labels[list(idx)]
            distinct = len(np.unique(keys))
            if distinct < n - (1 if group == ALT else 0):
                continue
            if is_base([parts[i] for i in idx], group):
                return s
    return None
