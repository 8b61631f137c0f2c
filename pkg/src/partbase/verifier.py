"""Exact base tests for Sym(n) and Alt(n) on lists of regular partitions.

Let ``G`` be the subgroup of Sym(Omega) preserving every partition.  Every
``g`` in ``G`` permutes the parts of each partition, hence induces a column
permutation fixing the code multiset; the map is onto the setwise
stabilizer ``S`` and its kernel ``K`` is the direct product of the symmetric
groups on the fibers (points sharing a word).  So the list is a Sym base iff
all fibers are singletons and ``S = 1``.

For Alt, ``G`` meets Alt(Omega) trivially iff one of:

* all fibers singletons and either ``S = 1`` or ``|S| = 2`` with the lift of
  its involution odd (a group of order >= 3 always contains a nontrivial even
  element, since the product of two distinct odd elements is even);
* exactly one fiber of size 2, the rest singletons, and ``S = 1`` (any
  nontrivial ``s`` has two lifts differing by the fiber transposition, so
  one of them is even).

Larger fibers contain a 3-cycle, two double fibers a double transposition.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .core import (ALT, SYM, CodeSet, ColumnPerm, DomainError, RegularPartition,
                   ShapeError, label_matrix, lex_order, point_order)
from .constructions import make_T
from .stabilizer import stabilizer

Witnessable = Union[CodeSet, Sequence[RegularPartition]]


@dataclass(frozen=True)
class Verdict:
    is_base: bool
    group: str
    reason: str
    point_perm: tuple[int, ...] | None = None
    column_perm: ColumnPerm | None = None

    def __bool__(self):
        return self.is_base


def fiber_profile(N: CodeSet) -> dict[int, int]:
    """``{m: number of distinct words occurring exactly m times}``."""
    _, mult = N.multiplicities()
    return dict(sorted(Counter(int(m) for m in mult).items()))


def _point_words(obj: Witnessable) -> tuple[CodeSet, np.ndarray]:
    if isinstance(obj, CodeSet):
        return obj, None
    ps = list(obj)
    L = label_matrix(ps)
    return CodeSet(L, ps[0].b), L


class _Points:
    """Lazily built point labelling of a code set, used to lift permutations."""

    def __init__(self, N: CodeSet, L: np.ndarray | None):
        self.N = N
        self._L = L

    @property
    def L(self) -> np.ndarray:
        if self._L is None:
            self._L = self.N.words[point_order(self.N)]
        return self._L

    def fiber(self, word) -> np.ndarray:
        return np.flatnonzero(np.all(self.L == np.asarray(word), axis=1))

    def lift(self, sigma: ColumnPerm) -> np.ndarray:
        """Point permutation induced by ``sigma``; fibers map in increasing order."""
        L = self.L
        distinct, inv = np.unique(L, axis=0, return_inverse=True)
        inv = inv.reshape(-1)
        img = sigma.apply(distinct)
        order_img = lex_order(img)
        where = np.empty(len(distinct), dtype=np.int64)
        where[order_img] = np.arange(len(distinct))
        if not np.array_equal(img[order_img], distinct):
            raise DomainError("column permutation does not fix the code set")
        by_fiber = np.lexsort((np.arange(len(L)), inv))
        starts = np.searchsorted(inv[by_fiber], np.arange(len(distinct)))
        rank = np.empty(len(L), dtype=np.int64)
        rank[by_fiber] = np.arange(len(L)) - starts[inv[by_fiber]]
        target = by_fiber[starts[where[inv]] + rank]
        return target


def permutation_sign(perm) -> int:
    """+1 for even, -1 for odd."""
    perm = np.asarray(perm)
    seen = np.zeros(len(perm), dtype=bool)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return 1 if (len(perm) - cycles) % 2 == 0 else -1


def lift_sign(sigma: ColumnPerm, N: CodeSet) -> int:
    """Sign of the permutation ``sigma`` induces on the words of ``N``."""
    if N.has_duplicates():
        raise DomainError("lift sign needs distinct words")
    img = sigma.apply(N.words)
    order = lex_order(img)
    if not np.array_equal(img[order], N.words):
        raise DomainError("column permutation does not fix the code set")
    # word i goes to position where[i]
    where = np.empty(len(N), dtype=np.int64)
    where[order] = np.arange(len(N))
    return permutation_sign(where)


def _transposition(n: int, p: int, q: int) -> tuple[int, ...]:
    perm = list(range(n))
    perm[p], perm[q] = q, p
    return tuple(perm)


def _cycle3(n: int, p: int, q: int, r: int) -> tuple[int, ...]:
    perm = list(range(n))
    perm[p], perm[q], perm[r] = q, r, p
    return tuple(perm)


def _compose(first, second) -> np.ndarray:
    """Apply ``first`` then ``second``."""
    return np.asarray(second)[np.asarray(first)]


def is_sym_base(obj: Witnessable) -> Verdict:
    N, L = _point_words(obj)
    pts = _Points(N, L)
    distinct, mult = N.multiplicities()
    dup = np.flatnonzero(mult > 1)
    if len(dup):
        p, q = pts.fiber(distinct[dup[0]])[:2]
        return Verdict(False, SYM, "repeated code word",
                       point_perm=_transposition(len(N), int(p), int(q)))
    report = stabilizer(N, cap=2)
    nontrivial = report.nontrivial
    if not nontrivial:
        return Verdict(True, SYM, "trivial stabilizer")
    g = nontrivial[0]
    return Verdict(False, SYM, "nontrivial column permutation fixes the code set",
                   point_perm=tuple(int(x) for x in pts.lift(g)), column_perm=g)


def is_alt_base(obj: Witnessable) -> Verdict:
    N, L = _point_words(obj)
    pts = _Points(N, L)
    n = len(N)
    distinct, mult = N.multiplicities()
    big = np.flatnonzero(mult >= 3)
    if len(big):
        p, q, r = pts.fiber(distinct[big[0]])[:3]
        return Verdict(False, ALT, "code word repeated three times",
                       point_perm=_cycle3(n, int(p), int(q), int(r)))
    doubles = np.flatnonzero(mult == 2)
    if len(doubles) >= 2:
        p, q = pts.fiber(distinct[doubles[0]])
        r, s = pts.fiber(distinct[doubles[1]])
        perm = list(range(n))
        perm[p], perm[q], perm[r], perm[s] = q, p, s, r
        return Verdict(False, ALT, "two repeated code words", point_perm=tuple(int(x) for x in perm))

    report = stabilizer(N, cap=2)
    nontrivial = report.nontrivial
    if not nontrivial:
        return Verdict(True, ALT, "trivial stabilizer")
    g = nontrivial[0]
    lifted = pts.lift(g)
    if len(doubles) == 1:
        if permutation_sign(lifted) < 0:
            p, q = pts.fiber(distinct[doubles[0]])
            lifted = _compose(lifted, _transposition(n, int(p), int(q)))
        return Verdict(False, ALT, "nontrivial column permutation with a repeated word",
                       point_perm=tuple(int(x) for x in lifted), column_perm=g)
    if permutation_sign(lifted) > 0:
        return Verdict(False, ALT, "even lift of a column permutation",
                       point_perm=tuple(int(x) for x in lifted), column_perm=g)
    if report.complete:
        return Verdict(True, ALT, "stabilizer of order 2 with odd lift")
    h = pts.lift(nontrivial[1])
    if permutation_sign(h) > 0:
        return Verdict(False, ALT, "even lift of a column permutation",
                       point_perm=tuple(int(x) for x in h), column_perm=nontrivial[1])
    inv_h = np.empty_like(h)
    inv_h[h] = np.arange(n)
    prod = _compose(lifted, inv_h)
    return Verdict(False, ALT, "stabilizer of order >= 3 contains an even element",
                   point_perm=tuple(int(x) for x in prod))


def is_base(obj: Witnessable, group: str) -> Verdict:
    if group == SYM:
        return is_sym_base(obj)
    if group == ALT:
        return is_alt_base(obj)
    raise ValueError(f"unknown group {group!r}")


def preserves_partitions(perm: Sequence[int], ps: Sequence[RegularPartition]) -> bool:
    """Plain check that the point permutation maps each partition to itself."""
    return all(p.relabel_points(perm) == p for p in ps)


@dataclass(frozen=True)
class MainLemmaReport:
    regular: bool
    contains_T: bool
    T_unique: bool
    constant_diagonal: bool
    no_ones: bool

    def __iter__(self):
        return iter((self.regular, self.contains_T, self.T_unique,
                     self.constant_diagonal, self.no_ones))

    def all(self) -> bool:
        return all(self)


def check_main_lemma(N: CodeSet, a: int, b: int, l: int, c: int) -> MainLemmaReport:
    """The five sufficient conditions for ``N`` in Delta^(l+2) to be a Sym base.

    1. every symbol occurs ``a`` times in every column;
    2. ``T`` (see :func:`make_T`) is contained in ``N``;
    3. outside ``T`` no word has last letter = first letter + 1;
    4. for each ``x`` exactly ``c`` words start and end with ``x``;
    5. for each ``x`` and each ``i`` not in {0, 1}, the number of words
       starting with ``x`` and ending with ``x + i`` is neither 1 nor ``c``.
    """
    if N.b != b:
        raise ShapeError("alphabet mismatch")
    if N.width != l + 2:
        raise ShapeError(f"expected width {l + 2}, got {N.width}")
    if c == 1:
        raise DomainError("the constant c must differ from 1")
    counts = N.column_counts
    cond1 = bool(np.all(counts == a))

    multiset = Counter(N.tuples())
    T = Counter(make_T(b, l).tuples())
    cond2 = all(multiset[w] >= k for w, k in T.items())
    rest = multiset - T
    cond3 = all(w[-1] != (w[0] + 1) % b for w in rest.elements())

    first = N.words[:, 0].astype(np.int64)
    diff = (N.words[:, -1].astype(np.int64) - first) % b
    table = np.zeros((b, b), dtype=np.int64)  # table[x, i]: start x, end x+i
    np.add.at(table, (first, diff), 1)
    cond4 = bool(np.all(table[:, 0] == c))
    others = table[:, 2:]
    cond5 = bool(np.all((others != 1) & (others != c)))
    return MainLemmaReport(cond1, cond2, cond3, cond4, cond5)
