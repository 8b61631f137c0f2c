"""Acceptance checks shared by ``partbase selftest`` and the test suite.

Each check returns a :class:`CriterionResult`; ``run_suite`` prints one
PASS/FAIL line per check.  ``quick`` runs the cheap checks (formulas, the
oracle grid, the shipped fixture, determinism); ``full`` runs everything.
"""

from __future__ import annotations

import contextlib
import io
import subprocess
import sys
import time
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, TextIO

import numpy as np

from . import constructions as C
from .core import ALT, SYM, CodeSet, RegularPartition
from .dispatch import dispatch_sym_witness
from .formulas import a_le_b_table, base_size_alt, base_size_sym, ceil_log, floor_log
from .oracles import point_oracle_is_base
from .search import minimal_base_size_bruteforce, random_regular_partition
from .verifier import check_main_lemma, is_alt_base, is_base

QUICK, FULL = "quick", "full"


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] criterion {self.number} ({self.name}): {self.detail} [{self.seconds:.1f} s]"


def _timed(number: int, name: str, fn: Callable[[], tuple[bool, str]], limit: float | None = None
           ) -> CriterionResult:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure of this criterion, not of the suite
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    dt = time.perf_counter() - t0
    if limit is not None and dt > limit:
        ok, detail = False, f"{detail}; exceeded {limit:.0f} s"
    return CriterionResult(number, name, ok, detail, dt)


# 1 ---------------------------------------------------------------------------

def _formula_values() -> tuple[bool, str]:
    sym = {(2, 3): 4, (4, 2): 5, (3, 2): 4, (3, 6): 3, (3, 7): 3, (4, 7): 3, (7, 3): 4,
           (4, 3): 3, (5, 3): 3, (5, 4): 3, (7, 4): 3, (9, 4): 3}
    sym.update({(a, a + 2): 3 for a in range(3, 13)})
    bad = [(ab, base_size_sym(*ab).value, v) for ab, v in sym.items() if base_size_sym(*ab).value != v]
    # pairs where the alternating answer is one less, and a few where it is not
    drops = [(2, 3), (3, 6), (3, 7), (4, 7), (7, 3), (5, 7), (9, 11), (8, 3), (26, 3), (80, 3),
             (63, 4), (124, 5), (3, 2), (6, 2), (7, 2), (14, 2), (15, 2), (1022, 2)]
    same = [(15, 4), (8, 2), (4, 3), (3, 5), (24, 5), (9, 3), (99, 10), (11, 4)]
    for ab in drops:
        if base_size_alt(*ab).value != base_size_sym(*ab).value - 1:
            bad.append((ab, "alt", "expected drop"))
    for ab in same:
        if base_size_alt(*ab).value != base_size_sym(*ab).value:
            bad.append((ab, "alt", "expected equal"))
    if not base_size_sym(2, 2).undefined or not base_size_alt(2, 2).undefined:
        bad.append(((2, 2), "undefined", "expected"))
    n = len(sym) + len(drops) + len(same) + 1
    return not bad, f"{n} stated values checked" + (f"; mismatches {bad}" if bad else "")


def criterion_1(level: str = FULL) -> CriterionResult:
    return _timed(1, "formula fidelity", _formula_values, limit=1.0)


# 2 ---------------------------------------------------------------------------

def _table_crosscheck() -> tuple[bool, str]:
    pairs = [(a, b) for b in range(2, 41) for a in range(2, b + 1)]
    bad = [(a, b) for a, b in pairs if a_le_b_table(a, b).value != base_size_sym(a, b).value]
    strict = sum(a < b for a, b in pairs)
    return not bad, f"{len(pairs)} pairs ({strict} with a<b), {len(bad)} mismatches" + (f" {bad[:5]}" if bad else "")


def criterion_2(level: str = FULL) -> CriterionResult:
    return _timed(2, "a<=b table cross-check", _table_crosscheck, limit=1.0)


# 3 ---------------------------------------------------------------------------

ORACLE_GRID = [(2, 3), (3, 2), (2, 4), (4, 2), (2, 5), (3, 3)]


def _oracle_grid() -> tuple[bool, str]:
    bad, checked = [], 0
    for a, b in ORACLE_GRID:
        for group, f in ((SYM, base_size_sym), (ALT, base_size_alt)):
            want = f(a, b).value
            got = minimal_base_size_bruteforce(a, b, group, max_size=want + 1)
            checked += 1
            if got != want:
                bad.append((a, b, group, got, want))
    for group in (SYM, ALT):
        if minimal_base_size_bruteforce(2, 2, group, max_size=3) is not None:
            bad.append((2, 2, group))
    return not bad, f"{checked} (a,b,group) minima match, (2,2) has no base" + (f"; {bad}" if bad else "")


def criterion_3(level: str = FULL) -> CriterionResult:
    return _timed(3, "oracle agreement", _oracle_grid, limit=600.0)


# 4 / 5 -----------------------------------------------------------------------

def _sweep(pairs: list[tuple[int, int]], per_instance: float, search_share: float | None
           ) -> tuple[bool, str]:
    bad, slow, names = [], [], Counter()
    worst = 0.0
    for a, b in pairs:
        t0 = time.perf_counter()
        cert = dispatch_sym_witness(a, b)
        dt = time.perf_counter() - t0
        worst = max(worst, dt)
        names[cert.provenance.name] += 1
        if not cert.verified or cert.size != base_size_sym(a, b).value:
            bad.append((a, b, cert.status, str(cert.provenance)))
        if dt > per_instance:
            slow.append((a, b, round(dt, 1)))
    searched = names[C.SEARCH]
    share = searched / len(pairs)
    ok = not bad and not slow and (search_share is None or share <= search_share)
    detail = (f"{len(pairs)} instances verified at the theorem size, {searched} searched "
              f"({100 * share:.1f}%), slowest {worst:.2f} s")
    if bad:
        detail += f"; failures {bad[:5]}"
    if slow:
        detail += f"; too slow {slow[:5]}"
    return ok, detail


def sweep4_pairs() -> list[tuple[int, int]]:
    return [(a, b) for b in range(3, 9) for a in range(b + 1, 301)]


def criterion_4(level: str = FULL) -> CriterionResult:
    return _timed(4, "construction sweep b>=3",
                  lambda: _sweep(sweep4_pairs(), per_instance=30.0, search_share=0.05), limit=3600.0)


def criterion_5(level: str = FULL) -> CriterionResult:
    return _timed(5, "construction sweep b=2",
                  lambda: _sweep([(a, 2) for a in range(3, 1025)], per_instance=30.0, search_share=None),
                  limit=600.0)


# 6 ---------------------------------------------------------------------------

def fixture_path() -> Path:
    return Path(str(resources.files("partbase") / "data" / "alt_8_3.witness"))


def alt_bk_parameters() -> list[tuple[int, int]]:
    return [(b, k) for k in (3, 4, 5) for b in range(3, k + (k + 1) // 2 + 2) if b ** (k + 1) <= 2 ** 20]


def _fixture_verifies(fixture: str | Path | None) -> tuple[bool, str]:
    from .cli import main

    path = str(fixture or fixture_path())
    captured = io.StringIO()
    with contextlib.redirect_stdout(captured), contextlib.redirect_stderr(captured):
        code = main(["verify", path, "--alt"])
    said = captured.getvalue().strip().splitlines()
    return code == 0, f"verify --alt {Path(path).name}: {said[0] if said else ''} (exit {code})"


def _alt_constructions(level: str, fixture) -> tuple[bool, str]:
    ok_fix, fix_detail = _fixture_verifies(fixture)
    if level == QUICK:
        return ok_fix, fix_detail
    bad = []
    bk = alt_bk_parameters()
    for b, k in bk:
        N = C.construct_alt_bk_minus1(b, k)
        if not (N.regular_size() == b ** k - 1 and N.width == k + 1 and is_alt_base(N)):
            bad.append(("bk", b, k))
    for k in range(3, 11):
        for variant in ("minus1", "minus2"):
            N = C.construct_alt_b2(k, variant)
            if not (N.width == k + 1 and is_alt_base(N)):
                bad.append(("b2", k, variant))
    detail = f"{len(bk)} (b,k) and 16 b=2 codes are Alt bases; {fix_detail}"
    return ok_fix and not bad, detail + (f"; failures {bad}" if bad else "")


def criterion_6(level: str = FULL, fixture=None) -> CriterionResult:
    return _timed(6, "alternating constructions", lambda: _alt_constructions(level, fixture), limit=600.0)


# 7 ---------------------------------------------------------------------------

def corollary_instances() -> dict[str, list[tuple[CodeSet, int, int, int, int]]]:
    """Every valid Cor-4.1/4.2/4.3 parameter choice in the b>=3 sweep range.

    Entries are ``(N, a, b, l, c)`` ready for :func:`check_main_lemma`.
    """
    out: dict[str, list] = {C.MAINCASE: [], C.R1: [], C.SMALL: []}
    for b in range(3, 9):
        for a in range(b + 1, 301):
            l = floor_log(b, a)
            q = b ** l
            k, r = divmod(a, q)
            if (k <= b - 2 and (r == 0 or 2 <= r <= q - 2)) or (k == b - 1 and r == 0):
                out[C.MAINCASE].append((C.construct_maincase(b, l, k, r), a, b, l, q - 1))
            if r == 1 and q > 4 and k <= b - 2:
                out[C.R1].append((C.construct_r1(b, l, k), a, b, l, q - 2))
        for l in range(1, 20):
            if b ** (l - 1) > 300:
                break
            for a in range(3, min(b ** l, 300) + 1):
                if ceil_log(b, a) in (l, l - 1) or l == 1:
                    out[C.SMALL].append((C.construct_small(b, l, a), a, b, l, a - 1))
    return out


def _perturb(N: CodeSet, rng: np.random.Generator) -> CodeSet:
    words = N.words.astype(np.int64).copy()
    i = int(rng.integers(len(words)))
    old = words[i].copy()
    while np.array_equal(words[i], old):
        words[i] = rng.integers(N.b, size=N.width)
    return CodeSet(words, N.b)


def _main_lemma(level: str) -> tuple[bool, str]:
    families = corollary_instances()
    rng = np.random.default_rng(20240607)
    bad, counts = [], []
    for name, items in families.items():
        for N, a, b, l, c in items:
            if not check_main_lemma(N, a, b, l, c).all():
                bad.append((name, a, b, l))
        caught = 0
        for _ in range(100):
            N, a, b, l, c = items[int(rng.integers(len(items)))]
            if not check_main_lemma(_perturb(N, rng), a, b, l, c).all():
                caught += 1
        counts.append(f"{name}: {len(items)} pass, {caught}/100 perturbations rejected")
        if caught != 100:
            bad.append((name, "perturbation accepted"))
    return not bad, "; ".join(counts) + (f"; failures {bad[:5]}" if bad else "")


def criterion_7(level: str = FULL) -> CriterionResult:
    return _timed(7, "main-lemma checker", lambda: _main_lemma(level))


# 8 ---------------------------------------------------------------------------

def random_small_inputs(count: int, seed: int = 8) -> list[list[RegularPartition]]:
    """Random lists of 1..5 regular partitions on at most 12 points, some repeated."""
    rng = np.random.default_rng(seed)
    shapes = [(a, b) for a in range(2, 7) for b in range(2, 7) if a * b <= 12]
    out = []
    for _ in range(count):
        a, b = shapes[int(rng.integers(len(shapes)))]
        size = int(rng.integers(1, 6))
        ps = [random_regular_partition(a, b, rng) for _ in range(size)]
        if size > 1 and rng.random() < 0.1:
            ps[-1] = ps[0]
        out.append(ps)
    return out


def _verifier_equivalence(count: int) -> tuple[bool, str]:
    bad, bases = [], Counter()
    inputs = random_small_inputs(count)
    for idx, ps in enumerate(inputs):
        for group in (SYM, ALT):
            got = bool(is_base(ps, group))
            bases[group] += got
            if got != point_oracle_is_base(ps, group):
                bad.append((idx, group))
    return not bad, (f"{len(inputs)} inputs x 2 groups agree with point enumeration "
                     f"({bases[SYM]} Sym bases, {bases[ALT]} Alt bases)" + (f"; {bad[:5]}" if bad else ""))


def criterion_8(level: str = FULL) -> CriterionResult:
    count = 500 if level == FULL else 100
    return _timed(8, "verifier equivalence", lambda: _verifier_equivalence(count), limit=300.0)


# 9 ---------------------------------------------------------------------------

DETERMINISM_CASES = [("7", "3"), ("11", "4"), ("5", "7", "--alt"), ("8", "3", "--alt"), ("20", "2")]


def _run_cli(*args: str) -> bytes:
    proc = subprocess.run([sys.executable, "-m", "partbase", *args], capture_output=True, check=True)
    return proc.stdout


def _determinism() -> tuple[bool, str]:
    bad = []
    for case in DETERMINISM_CASES:
        cmd = ["witness", *case, "--seed", "7", "--workers", "1"]
        if _run_cli(*cmd) != _run_cli(*cmd):
            bad.append(case)
    for flag in ((), ("--alt",)):
        cmd = ["table", "--amax", "40", "--bmax", "12", *flag]
        if _run_cli(*cmd) != _run_cli(*cmd):
            bad.append(("table", *flag))
    return not bad, f"{len(DETERMINISM_CASES)} witness files and 2 tables byte-identical across runs" + (
        f"; differing {bad}" if bad else "")


def criterion_9(level: str = FULL) -> CriterionResult:
    return _timed(9, "determinism", _determinism)


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
            6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9}
QUICK_SET = (1, 2, 3, 6, 9)


def run_suite(level: str = QUICK, fixture=None, out: TextIO | None = None) -> list[CriterionResult]:
    chosen = QUICK_SET if level == QUICK else tuple(CRITERIA)
    results = []
    for number in chosen:
        fn = CRITERIA[number]
        res = fn(level, fixture) if number == 6 else fn(level)
        results.append(res)
        if out is not None:
            print(res.line(), file=out, flush=True)
    if out is not None:
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} criteria passed", file=out)
    return results
