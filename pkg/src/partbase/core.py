"""Domain types and the dictionary between partitions and code words.

A list of ``l`` regular partitions of ``{0..n-1}`` is the same thing as a
multiset of ``n`` words in ``{0..b-1}^l``: point ``p`` becomes the word whose
``j``-th letter is the index of the part of partition ``j`` containing ``p``.
Parts are indexed by increasing minimum element.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

SYM = "sym"
ALT = "alt"
GROUPS = (SYM, ALT)


class DomainError(ValueError):
    """Raised when parameters fall outside an operation's domain."""


class ShapeError(ValueError):
    """Raised when partitions or words disagree in size or shape."""


class RegularityError(ValueError):
    """Raised when a code set is not column-regular."""


@dataclass(frozen=True)
class Params:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 2 or self.b < 2:
            raise DomainError(f"need a >= 2 and b >= 2, got ({self.a}, {self.b})")

    @property
    def n(self) -> int:
        return self.a * self.b

    @property
    def faithful(self) -> bool:
        # Sym(4) acts on the three (2,2)-partitions with kernel V4.
        return (self.a, self.b) != (2, 2)


def lex_order(words: np.ndarray) -> np.ndarray:
    """Indices sorting the rows of ``words`` lexicographically."""
    if words.shape[0] == 0:
        return np.zeros(0, dtype=np.intp)
    return np.lexsort(words.T[::-1])


def _symbol_dtype(b: int):
    return np.int16 if b <= np.iinfo(np.int16).max else np.int64


class CodeSet:
    """Multiset of words of common length over ``{0..b-1}``.

    Words are kept sorted lexicographically, duplicates adjacent, so two code
    sets are equal exactly when they are equal as multisets.
    """

    __slots__ = ("_words", "_b", "_counts")

    def __init__(self, words, b: int):
        if b < 1:
            raise DomainError("alphabet size must be positive")
        arr = np.asarray(words if not isinstance(words, CodeSet) else words.words)
        if arr.ndim == 1 and arr.size == 0:
            raise ShapeError("code set must contain at least one word")
        if arr.ndim != 2 or arr.shape[1] < 1:
            raise ShapeError("words must have a common length of at least 1")
        arr = arr.astype(_symbol_dtype(b))
        if arr.size and (arr.min() < 0 or arr.max() >= b):
            raise ShapeError(f"symbols must lie in [0, {b})")
        arr = np.ascontiguousarray(arr[lex_order(arr)])
        arr.flags.writeable = False
        self._words = arr
        self._b = b
        self._counts = None

    @classmethod
    def from_words(cls, words: Iterable[Sequence[int]], b: int) -> "CodeSet":
        return cls(np.array([tuple(w) for w in words]), b)

    @property
    def words(self) -> np.ndarray:
        return self._words

    @property
    def b(self) -> int:
        return self._b

    @property
    def width(self) -> int:
        return self._words.shape[1]

    def __len__(self) -> int:
        return self._words.shape[0]

    @property
    def column_counts(self) -> np.ndarray:
        """``counts[j, s]`` = multiplicity of symbol ``s`` in column ``j``."""
        if self._counts is None:
            counts = np.stack([np.bincount(self._words[:, j], minlength=self._b)
                               for j in range(self.width)])
            counts.flags.writeable = False
            self._counts = counts
        return self._counts

    def regular_size(self) -> int | None:
        """The common column multiplicity ``a``, or None when not regular."""
        counts = self.column_counts
        a = int(counts[0, 0])
        return a if a > 0 and bool(np.all(counts == a)) else None

    def is_regular(self, a: int | None = None) -> bool:
        r = self.regular_size()
        return r is not None and (a is None or r == a)

    def tuples(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in w) for w in self._words]

    def distinct(self) -> "CodeSet":
        keep = np.ones(len(self), dtype=bool)
        keep[1:] = np.any(self._words[1:] != self._words[:-1], axis=1)
        return CodeSet(self._words[keep], self._b)

    def multiplicities(self) -> tuple[np.ndarray, np.ndarray]:
        """Distinct words (sorted) and their multiplicities."""
        w = self._words
        start = np.ones(len(w), dtype=bool)
        start[1:] = np.any(w[1:] != w[:-1], axis=1)
        idx = np.flatnonzero(start)
        mult = np.diff(np.append(idx, len(w)))
        return w[idx], mult

    def has_duplicates(self) -> bool:
        w = self._words
        return bool(len(w) > 1 and np.any(np.all(w[1:] == w[:-1], axis=1)))

    def __eq__(self, other):
        if not isinstance(other, CodeSet):
            return NotImplemented
        return self._b == other._b and np.array_equal(self._words, other._words)

    def __hash__(self):
        return hash((self._b, self._words.shape, self._words.tobytes()))

    def __repr__(self):
        return f"CodeSet(size={len(self)}, width={self.width}, b={self._b})"


def canonical_labels(labels) -> np.ndarray:
    """Relabel parts so that their indices increase with their minimum point."""
    labels = np.asarray(labels)
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    rank = np.empty(len(first), dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(len(first))
    return rank[inverse.reshape(-1)]


class RegularPartition:
    """Partition of ``{0..n-1}`` into ``b`` parts of size ``a``.

    Stored as a label array (point -> part index) with parts ordered by their
    minimum element.
    """

    __slots__ = ("_labels", "_a", "_b")

    def __init__(self, parts: Iterable[Iterable[int]]):
        parts = [sorted(int(p) for p in part) for part in parts]
        if not parts:
            raise ShapeError("a partition needs at least one part")
        n = sum(len(p) for p in parts)
        labels = np.full(n, -1, dtype=np.int64)
        for i, part in enumerate(parts):
            for p in part:
                if not 0 <= p < n:
                    raise ShapeError(f"point {p} outside 0..{n - 1}")
                if labels[p] != -1:
                    raise ShapeError(f"point {p} occurs in two parts")
                labels[p] = i
        self._init(labels)

    def _init(self, labels: np.ndarray) -> None:
        if labels.size == 0 or labels.min() < 0:
            raise ShapeError("parts must cover every point")
        sizes = np.bincount(labels)
        if sizes.min() == 0 or sizes.min() != sizes.max():
            raise ShapeError(f"parts are not of equal size: {sorted(set(sizes.tolist()))}")
        labels = canonical_labels(labels).astype(np.int32)
        labels.flags.writeable = False
        self._labels = labels
        self._a = int(sizes[0])
        self._b = len(sizes)

    @classmethod
    def from_labels(cls, labels) -> "RegularPartition":
        obj = cls.__new__(cls)
        obj._init(np.asarray(labels, dtype=np.int64))
        return obj

    @property
    def labels(self) -> np.ndarray:
        return self._labels

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def parts(self) -> tuple[tuple[int, ...], ...]:
        order = np.argsort(self._labels, kind="stable")
        return tuple(tuple(int(p) for p in order[i * self._a:(i + 1) * self._a])
                     for i in range(self._b))

    def relabel_points(self, perm: Sequence[int]) -> "RegularPartition":
        """Image of the partition under the point map ``p -> perm[p]``."""
        perm = np.asarray(perm)
        new = np.empty_like(self._labels)
        new[perm] = self._labels
        return RegularPartition.from_labels(new)

    def __eq__(self, other):
        if not isinstance(other, RegularPartition):
            return NotImplemented
        return np.array_equal(self._labels, other._labels)

    def __hash__(self):
        return hash(self._labels.tobytes())

    def __repr__(self):
        if self.n <= 24:
            return "RegularPartition(%s)" % "|".join(
                " ".join(map(str, part)) for part in self.parts)
        return f"RegularPartition(a={self._a}, b={self._b})"


@dataclass(frozen=True)
class ColumnPerm:
    """Element of Sym(b)^l acting letter-wise: column ``j`` uses ``perms[j]``."""

    perms: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "perms", tuple(tuple(int(x) for x in p) for p in self.perms))
        for p in self.perms:
            if sorted(p) != list(range(len(p))):
                raise DomainError(f"not a permutation: {p}")

    @classmethod
    def identity(cls, width: int, b: int) -> "ColumnPerm":
        return cls(tuple(tuple(range(b)) for _ in range(width)))

    @property
    def width(self) -> int:
        return len(self.perms)

    def is_identity(self) -> bool:
        return all(p == tuple(range(len(p))) for p in self.perms)

    def apply(self, words) -> np.ndarray:
        words = np.asarray(words)
        out = np.empty_like(words)
        for j, p in enumerate(self.perms):
            out[:, j] = np.asarray(p, dtype=words.dtype)[words[:, j]]
        return out

    def apply_word(self, word: Sequence[int]) -> tuple[int, ...]:
        return tuple(p[x] for p, x in zip(self.perms, word))

    def then(self, other: "ColumnPerm") -> "ColumnPerm":
        """Apply ``self`` first, then ``other``."""
        return ColumnPerm(tuple(tuple(q[p[x]] for x in range(len(p)))
                                for p, q in zip(self.perms, other.perms)))

    def inverse(self) -> "ColumnPerm":
        inv = []
        for p in self.perms:
            q = [0] * len(p)
            for i, x in enumerate(p):
                q[x] = i
            inv.append(tuple(q))
        return ColumnPerm(tuple(inv))

    def __lt__(self, other: "ColumnPerm"):
        return self.perms < other.perms


@dataclass(frozen=True)
class Provenance:
    """Which construction or search produced a witness, with its parameters."""

    name: str
    params: tuple[tuple[str, object], ...] = ()

    def __str__(self):
        if not self.params:
            return self.name
        return "%s(%s)" % (self.name, ",".join(f"{k}={v}" for k, v in self.params))


UNVERIFIED = "unverified"
VERIFIED = "verified-base"
REFUTED = "refuted"
UNAVAILABLE = "witness-unavailable"


@dataclass(frozen=True)
class WitnessCertificate:
    params: Params
    group: str
    partitions: tuple[RegularPartition, ...]
    provenance: Provenance
    status: str = UNVERIFIED
    refutation: tuple[int, ...] | None = None
    expected_size: int | None = None
    detail: str = ""

    @property
    def size(self) -> int:
        if self.partitions:
            return len(self.partitions)
        return self.expected_size or 0

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED

    def codeset(self) -> CodeSet:
        return partitions_to_codeset(list(self.partitions))


def _check_shapes(ps: Sequence[RegularPartition]) -> tuple[int, int]:
    if not ps:
        raise ShapeError("need at least one partition")
    a, b, n = ps[0].a, ps[0].b, ps[0].n
    for p in ps[1:]:
        if (p.a, p.b, p.n) != (a, b, n):
            raise ShapeError(f"mixed shapes: ({a},{b}) and ({p.a},{p.b})")
    return a, b


def label_matrix(ps: Sequence[RegularPartition]) -> np.ndarray:
    """``(n, l)`` array: row ``p`` is the code word of point ``p``."""
    _check_shapes(ps)
    return np.stack([p.labels for p in ps], axis=1)


def partitions_to_codeset(ps: Sequence[RegularPartition]) -> CodeSet:
    a, b = _check_shapes(ps)
    return CodeSet(label_matrix(ps), b)


def _first_occurrence_ok(words: np.ndarray) -> bool:
    for j in range(words.shape[1]):
        _, first = np.unique(words[:, j], return_index=True)
        if np.any(np.diff(first) < 0):
            return False
    return True


def point_order(N: CodeSet) -> np.ndarray:
    """Enumeration of the points of ``N`` used by :func:`codeset_to_partitions`.

    Lexicographic, except that a word is postponed while it would introduce a
    symbol in some column before a smaller one.  When such an order exists the
    partitions come back with the same part indices, so the round trip
    reproduces ``N`` exactly; the postponement rule is monotone, so the greedy
    choice finds it whenever it exists.
    """
    words = N.words
    m, width = words.shape
    if _first_occurrence_ok(words):
        return np.arange(m)
    nxt = [0] * width
    blocked: dict[tuple[int, int], list[int]] = {}
    heap: list[int] = []

    def place(i: int) -> None:
        w = words[i]
        for j in range(width):
            if w[j] > nxt[j]:
                blocked.setdefault((j, int(w[j])), []).append(i)
                return
        heapq.heappush(heap, i)

    for i in range(m):
        place(i)
    order = []
    while heap:
        i = heapq.heappop(heap)
        w = words[i]
        if any(w[j] > nxt[j] for j in range(width)):
            place(i)
            continue
        order.append(i)
        for j in range(width):
            if w[j] == nxt[j]:
                nxt[j] += 1
                for k in blocked.pop((j, nxt[j]), []):
                    place(k)
    if len(order) < m:
        placed = set(order)
        order.extend(i for i in range(m) if i not in placed)
    return np.asarray(order)


def codeset_to_partitions(N: CodeSet) -> list[RegularPartition]:
    if not N.is_regular():
        raise RegularityError("code set is not column-regular")
    words = N.words[point_order(N)]
    return [RegularPartition.from_labels(words[:, j]) for j in range(N.width)]


def count_regular_partitions(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise DomainError("a and b must be positive")
    return math.factorial(a * b) // (math.factorial(a) ** b * math.factorial(b))
