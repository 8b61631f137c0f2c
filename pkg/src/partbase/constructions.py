"""Explicit code sets whose columns give small bases.

Every builder returns a :class:`CodeSet` over ``Delta = Z/b``; arithmetic on
letters is mod ``b``.  Where a recipe leaves a subset free, the
lexicographically smallest admissible choice is taken so output is stable.
"""

from __future__ import annotations

import itertools

import numpy as np

from .core import CodeSet, DomainError, RegularityError, RegularPartition, partitions_to_codeset
from .formulas import ceil_log

MAKE_T = "make_T"
MAINCASE = "cor_maincase"
R1 = "cor_r1"
SMALL = "cor_small"
COMPLEMENT = "complement"
B2_POWER = "b2_power"
B2_POWER_MINUS1 = "b2_power_minus1"
B2_RMINUS2 = "b2_rminus2"
ALT_BK_WIDE = "alt_bk_minus1_wide"
ALT_BK_NARROW = "alt_bk_minus1_narrow"
ALT_B2_MINUS1 = "alt_b2_minus1"
ALT_B2_MINUS2 = "alt_b2_minus2"
PAPER_8_3 = "paper_8_3_triple"
SEARCH = "search_fallback"

# The three (8,3)-partitions of {1..24} whose common stabilizer in Alt(24) is trivial.
PAPER_8_3_PARTS = (
    ((1, 2, 3, 4, 5, 6, 7, 8), (9, 10, 11, 12, 13, 14, 15, 16), (17, 18, 19, 20, 21, 22, 23, 24)),
    ((1, 2, 8, 9, 12, 17, 18, 22), (4, 5, 6, 10, 15, 16, 21, 23), (3, 7, 11, 13, 14, 19, 20, 24)),
    ((1, 5, 8, 13, 16, 17, 20, 21), (2, 3, 4, 11, 12, 15, 18, 24), (6, 7, 9, 10, 14, 19, 22, 23)),
)


def cube(b: int, width: int) -> np.ndarray:
    """All of Delta^width in lexicographic order."""
    return np.indices((b,) * width, dtype=np.int64).reshape(width, -1).T.copy()


def _append(words: np.ndarray, last: np.ndarray) -> np.ndarray:
    return np.hstack([words, np.asarray(last).reshape(-1, 1)])


def _rows_not_in(words: np.ndarray, banned) -> np.ndarray:
    banned = {tuple(w) for w in banned}
    keep = np.array([tuple(w) not in banned for w in words.tolist()], dtype=bool)
    return words[keep]


def _shift_orbit(word, b: int) -> np.ndarray:
    """``word + j`` (every letter) for ``j = 0..b-1``; first letter of ``word`` is 0."""
    word = np.asarray(word, dtype=np.int64)
    return (word[None, :] + np.arange(b)[:, None]) % b


def admissible_prefix_words(b: int, l: int, count: int) -> list[tuple[int, ...]]:
    """The ``count`` smallest words of {0} x Delta^l other than 0...0 and 0(b-1)...(b-1)."""
    forbidden = {(0,) * (l + 1), (0,) + (b - 1,) * l}
    out = []
    for tail in itertools.product(range(b), repeat=l):
        w = (0,) + tail
        if w in forbidden:
            continue
        if len(out) == count:
            break
        out.append(w)
    if len(out) < count:
        raise DomainError(f"only {len(out)} admissible words, need {count}")
    return out


def _t_prime(b: int, l: int) -> list[tuple[int, ...]]:
    return [(0,) * (l + 1)] + [(x,) + ((x - 1) % b,) * l for x in range(1, b)]


def make_T(b: int, l: int) -> CodeSet:
    """The ``b`` words 0...01 and x(x-1)...(x-1)(x+1) of length ``l+2``."""
    if b < 3 or l < 1:
        raise DomainError("make_T needs b >= 3 and l >= 1")
    words = [(0,) * (l + 1) + (1,)]
    words += [(x,) + ((x - 1) % b,) * l + ((x + 1) % b,) for x in range(1, b)]
    return CodeSet.from_words(words, b)


def construct_maincase(b: int, l: int, k: int, r: int) -> CodeSet:
    """Base code for ``a = k b^l + r`` of width ``l+2``.

    Valid for ``1 <= k <= b-2`` with ``r = 0`` or ``2 <= r <= b^l - 2``, and
    for ``k = b-1, r = 0``.  Blocks are sorted by last-minus-first letter:
    0 (all of Delta^(l+1) off T'), 1 (T), 2..k (full), k+1 (shifts of X).
    """
    if b < 3 or l < 1:
        raise DomainError("need b >= 3 and l >= 1")
    ok = (1 <= k <= b - 2 and (r == 0 or 2 <= r <= b ** l - 2)) or (k == b - 1 and r == 0)
    if not ok:
        raise DomainError(f"maincase undefined for (b,l,k,r)=({b},{l},{k},{r})")
    full = cube(b, l + 1)
    blocks = []
    rest = _rows_not_in(full, _t_prime(b, l))
    blocks.append(_append(rest, rest[:, 0]))
    blocks.append(make_T(b, l).words.astype(np.int64))
    for t in range(2, k + 1):
        blocks.append(_append(full, (full[:, 0] + t) % b))
    for x in admissible_prefix_words(b, l, r):
        orbit = _shift_orbit(x, b)
        blocks.append(_append(orbit, (orbit[:, 0] + k + 1) % b))
    return CodeSet(np.vstack(blocks), b)


def construct_r1(b: int, l: int, k: int) -> CodeSet:
    """Base code for ``a = k b^l + 1`` of width ``l+2`` (needs ``b^l > 4``)."""
    if b < 3 or l < 1 or b ** l <= 4 or not 1 <= k <= b - 2:
        raise DomainError(f"r=1 construction undefined for (b,l,k)=({b},{l},{k})")
    x1, x2 = admissible_prefix_words(b, l, 2)
    orbit1 = _shift_orbit(x1, b)
    orbit2 = _shift_orbit(x2, b)
    full = cube(b, l + 1)
    rest = _rows_not_in(full, _t_prime(b, l) + [tuple(w) for w in orbit1.tolist()])
    blocks = [_append(rest, rest[:, 0]), make_T(b, l).words.astype(np.int64)]
    for t in range(2, k + 1):
        blocks.append(_append(full, (full[:, 0] + t) % b))
    for orbit in (orbit1, orbit2):
        blocks.append(_append(orbit, (orbit[:, 0] + k + 1) % b))
    return CodeSet(np.vstack(blocks), b)


def construct_small(b: int, l: int, a: int) -> CodeSet:
    """Base code for ``3 <= a <= b^l`` of width ``l+2``."""
    if b < 3 or l < 1 or not 3 <= a <= b ** l:
        raise DomainError(f"small construction undefined for (b,l,a)=({b},{l},{a})")
    V = np.array([(0,) + (b - 1,) * l] + [(x,) * (l + 1) for x in range(1, b)], dtype=np.int64)
    blocks = [_append(V, V[:, 0]), make_T(b, l).words.astype(np.int64)]
    for x in admissible_prefix_words(b, l, a - 2):
        orbit = _shift_orbit(x, b)
        blocks.append(_append(orbit, orbit[:, 0]))
    return CodeSet(np.vstack(blocks), b)


def construct_complement(N1: CodeSet, kappa: int) -> CodeSet:
    """Complement in Delta^kappa of ``N1`` padded with copies of its first letter.

    ``N1`` must be a regular set (no repeats) of width at most ``kappa``, and
    ``kappa <= ceil(log_b(b^kappa - a' b))`` where ``a'`` is its regularity.
    The result is regular with ``b^(kappa-1) - a'`` and is a base code
    whenever ``N1`` is.
    """
    b, m = N1.b, N1.width
    a1 = N1.regular_size()
    if a1 is None:
        raise RegularityError("N1 is not column-regular")
    if N1.has_duplicates():
        raise DomainError("N1 must not repeat words")
    if m > kappa:
        raise DomainError(f"width {m} exceeds kappa={kappa}")
    if kappa > ceil_log(b, b ** kappa - a1 * b):
        raise DomainError(f"kappa={kappa} too large for a'={a1}, b={b}")
    words = N1.words.astype(np.int64)
    padded = np.hstack([words] + [words[:, :1]] * (kappa - m))
    powers = b ** np.arange(kappa - 1, -1, -1, dtype=np.int64)
    keys = np.setdiff1d(np.arange(b ** kappa, dtype=np.int64), padded @ powers)
    out = (keys[:, None] // powers) % b
    return CodeSet(out, b)


def _t3_block(i: int) -> np.ndarray:
    T3 = np.array([(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 1)], dtype=np.int64)
    return np.hstack([np.zeros((4, i - 2), dtype=np.int64), T3])


def construct_b2_power(i: int) -> CodeSet:
    """Base code for ``(2^i, 2)`` of width ``i+2``.

    Last letter repeats the one before it, except on the four words built
    from 0^(i-2) x T3, where it is flipped.
    """
    if i < 3:
        raise DomainError("need i >= 3")
    special = _t3_block(i)
    full = cube(2, i + 1)
    rest = _rows_not_in(full, special.tolist())
    return CodeSet(np.vstack([_append(special, 1 - special[:, -1]), _append(rest, rest[:, -1])]), 2)


def _complementary_pair(N: CodeSet, avoid: CodeSet) -> tuple[tuple[int, ...], tuple[int, ...]]:
    words = set(N.tuples()) - set(avoid.tuples())
    for w in sorted(words):
        comp = tuple(1 - x for x in w)
        if comp in words:
            return w, comp
    raise DomainError("no complementary pair available")


def construct_b2_power_minus1(i: int) -> CodeSet:
    """Base code for ``(2^i - 1, 2)``: the ``2^i`` code minus a complementary pair.

    The all-zero word is not in the ``2^i`` code (its prefix is one of the
    flipped words), so the pair removed is the lexicographically smallest
    complementary pair avoiding the four flipped words.
    """
    N1 = construct_b2_power(i)
    special = _t3_block(i)
    flipped = CodeSet(_append(special, 1 - special[:, -1]), 2)
    w, comp = _complementary_pair(N1, flipped)
    keep = [t for t in N1.tuples() if t not in (w, comp)]
    return CodeSet.from_words(keep, 2)


def construct_b2_rminus2(i: int) -> CodeSet:
    """Base code for ``(2^(i+1) - 2, 2)`` of width ``i+3``."""
    if i < 2:
        raise DomainError("need i >= 2")
    w = i + 2
    t_prime = [(0,) * (i + 1) + (1,), (1,) + (0,) * (i + 1), (0,) + (1,) * i + (0,), (1,) * w]
    t_one = np.array([(0,) * w, (1, 0, 1) + (0,) * (i - 1)], dtype=np.int64)
    rest = _rows_not_in(cube(2, w), t_prime + [tuple(x) for x in t_one.tolist()])
    return CodeSet(np.vstack([_append(rest, rest[:, 0]), _append(t_one, 1 - t_one[:, 0])]), 2)


def paper_8_3_partitions() -> list[RegularPartition]:
    """The explicit (8,3) triple, shifted to points 0..23."""
    return [RegularPartition([[p - 1 for p in part] for part in sigma]) for sigma in PAPER_8_3_PARTS]


def alt_bk_minus1_variant(b: int, k: int) -> str:
    if (b, k) == (3, 2):
        return PAPER_8_3
    return ALT_BK_WIDE if k + 1 <= b - 2 else ALT_BK_NARROW


def alt_bk_removed_words(b: int, k: int, literal: bool = False) -> list[tuple[int, ...]]:
    """The ``b+1`` words dropped from Delta^(k+1) for ``a = b^k - 1``.

    In the narrow case with ``b = 4`` the published choice leaves
    ``(3,3,0,...,0)`` and ``(1,2,0,...,0)`` with the same zero pattern, and
    swapping 1<->3 in column 1 and 2<->3 in column 2 exchanges them while
    fixing the rest.  Unless ``literal`` is set we drop ``(3,3,3,0,...,0)``
    and ``(0,0,0,3,...,3)`` instead, which keeps the columns regular and
    gives all missing words distinct zero patterns.
    """
    if b < 3 or k < 3 or not b < k + (k + 1) // 2 + 2:
        raise DomainError(f"construction undefined for (b,k)=({b},{k})")
    w = k + 1
    t = min(k + 1, b - 2)
    removed = []
    for i in range(1, t + 1):
        word = [i] * w
        word[i - 1] = 0
        removed.append(tuple(word))
    if t == k + 1:
        extra = b - k - 2
        assert 2 * extra <= k - 1
        for i in range(1, extra + 1):
            word = [k + 1 + i] * w
            word[2 * i - 2] = word[2 * i - 1] = 0
            removed.append(tuple(word))
        word = [0] * w
        for i in range(1, extra + 1):
            word[2 * i - 2] = word[2 * i - 1] = k + 1 + i
        removed.append(tuple(word))
        removed.append(tuple(range(1, w + 1)))
    elif b == 4 and not literal:
        removed.append((3, 3, 3) + (0,) * (w - 3))
        removed.append((0, 0, 0) + (3,) * (w - 3))
        removed.append((1, 2) + (0,) * (w - 2))
    else:
        removed.append((b - 1, b - 1) + (0,) * (w - 2))
        removed.append((0, 0) + (b - 1,) * (w - 2))
        removed.append(tuple(range(1, b - 1)) + (0,) * (w - (b - 2)))
    if len(set(removed)) != b + 1:
        raise DomainError("removed words are not distinct")
    return removed


def construct_alt_bk_minus1(b: int, k: int, literal: bool = False) -> CodeSet:
    """Alt base code for ``a = b^k - 1`` of width ``k+1``, with 0...0 doubled.

    Starts from Delta^(k+1) plus a second copy of 0...0 and removes ``b+1``
    words that leave every column regular (see :func:`alt_bk_removed_words`).
    ``(b,k) = (3,2)`` returns the code of the explicit (8,3) triple.
    """
    if (b, k) == (3, 2):
        return partitions_to_codeset(paper_8_3_partitions())
    w = k + 1
    words = _rows_not_in(cube(b, w), alt_bk_removed_words(b, k, literal))
    return CodeSet(np.vstack([words, np.zeros((1, w), dtype=np.int64)]), b)


def construct_alt_b2(k: int, variant: str) -> CodeSet:
    """Alt base code for ``(2^k - 1, 2)`` (``minus1``) or ``(2^k - 2, 2)`` (``minus2``)."""
    if k < 3:
        raise DomainError("need k >= 3")
    w = k + 1
    if variant == "minus1":
        removed = [(1,) + (0,) * k, (0, 1) + (0,) * (k - 1), (0, 0) + (1,) * (k - 1)]
    elif variant == "minus2":
        removed = [(1,) + (0,) * k, (0, 1) + (0,) * (k - 1), (0, 0, 1) + (0,) * (k - 2),
                   (0, 0, 0) + (1,) * (k - 2), (1,) * w]
    else:
        raise DomainError(f"unknown variant {variant!r}")
    words = _rows_not_in(cube(2, w), removed)
    return CodeSet(np.vstack([words, np.zeros((1, w), dtype=np.int64)]), 2)
