"""Setwise stabilizer of a multiset of words under Sym(b)^l.

The multiset is viewed as a bipartite structure: one vertex per (column,
symbol) pair, one per distinct word (coloured by its multiplicity), a word
adjacent to the ``l`` symbols it spells.  Symbol colours are refined until
stable (colour refinement on that structure), then the search individualizes
one symbol at a time.  The leftmost branch is fixed; every other branch is
compared against it level by level and dropped when the refined colourings
disagree.  A discrete leaf determines a unique candidate ``sigma``, which is
accepted only after the exact multiset test, so pruning never costs
exactness.

Colours are 64-bit hashes of the full refinement history; a collision can
only make refinement weaker, never wrong.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import CodeSet, ColumnPerm, lex_order

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_K = np.uint64(0xD6E8FEB86659FD93)
_INDIV = np.uint64(0x2545F4914F6CDD1D)
_S30, _S27, _S31 = np.uint64(30), np.uint64(27), np.uint64(31)


def _mix(x: np.ndarray) -> np.ndarray:
    z = x + _GOLDEN
    z = (z ^ (z >> _S30)) * _M1
    z = (z ^ (z >> _S27)) * _M2
    return z ^ (z >> _S31)


@dataclass(frozen=True)
class StabilizerReport:
    elements: tuple[ColumnPerm, ...]
    complete: bool

    @property
    def order(self) -> int | None:
        return len(self.elements) if self.complete else None

    @property
    def nontrivial(self) -> tuple[ColumnPerm, ...]:
        return tuple(g for g in self.elements if not g.is_identity())


class _Structure:
    def __init__(self, N: CodeSet):
        words, mult = N.multiplicities()
        self.b = N.b
        self.width = N.width
        self.words = words.astype(np.int64)
        self.mult = mult
        self.nsym = self.width * self.b
        self.sym_index = self.words + (np.arange(self.width, dtype=np.int64) * self.b)
        self.flat_index = self.sym_index.ravel()
        self.mult_hash = _mix(mult.astype(np.uint64) * _K)
        self.column = np.repeat(np.arange(self.width), self.b)

    def initial(self) -> np.ndarray:
        return _mix(self.column.astype(np.uint64) + np.uint64(1))

    def refine(self, colors: np.ndarray) -> np.ndarray:
        cells = len(np.unique(colors))
        while True:
            wh = _mix(colors[self.sym_index].sum(axis=1, dtype=np.uint64) + self.mult_hash)
            sig = np.zeros(self.nsym, dtype=np.uint64)
            np.add.at(sig, self.flat_index, np.repeat(wh, self.width))
            colors = _mix(colors * _K + _mix(sig))
            new_cells = len(np.unique(colors))
            if new_cells == cells:
                return colors
            cells = new_cells

    def fixes(self, perms: np.ndarray) -> bool:
        """Exact test ``N^sigma == N`` for ``perms`` of shape ``(l, b)``."""
        img = perms[np.arange(self.width), self.words]
        order = lex_order(img)
        return (np.array_equal(img[order], self.words)
                and np.array_equal(self.mult[order], self.mult))


def _target_cell(colors: np.ndarray) -> np.uint64 | None:
    values, counts = np.unique(colors, return_counts=True)
    multi = counts > 1
    if not multi.any():
        return None
    sizes = counts[multi]
    candidates = values[multi][sizes == sizes.min()]
    return candidates.min()


def stabilizer(N: CodeSet, cap: int = 4) -> StabilizerReport:
    """All ``sigma`` in Sym(b)^l with ``N^sigma = N`` as multisets.

    Stops once more than ``cap`` elements are found, reporting
    ``complete=False``.  Elements are returned in lexicographic order.
    """
    if cap < 2:
        raise ValueError("cap must be at least 2")
    st = _Structure(N)

    # leftmost path: colourings and the symbol individualized at each level
    left_colors = [st.refine(st.initial())]
    left_cells, left_choice = [], []
    while True:
        cell = _target_cell(left_colors[-1])
        if cell is None:
            break
        s = int(np.flatnonzero(left_colors[-1] == cell)[0])
        left_cells.append(cell)
        left_choice.append(s)
        nxt = left_colors[-1].copy()
        nxt[s] = _mix(nxt[s:s + 1] ^ _INDIV)[0]
        left_colors.append(st.refine(nxt))
    left_sorted = [np.sort(c) for c in left_colors]
    leaf = left_colors[-1]
    leaf_order = np.argsort(leaf)

    found: list[ColumnPerm] = []

    def at_leaf(colors: np.ndarray) -> None:
        # match symbols of equal colour; columns must correspond
        right_order = np.argsort(colors)
        image = np.empty(st.nsym, dtype=np.int64)
        image[leaf_order] = right_order
        if not np.array_equal(st.column[image], st.column):
            return
        perms = (image - st.column * st.b).reshape(st.width, st.b)
        if st.fixes(perms):
            found.append(ColumnPerm(tuple(tuple(int(x) for x in p) for p in perms)))

    def dfs(depth: int, colors: np.ndarray) -> None:
        if not np.array_equal(np.sort(colors), left_sorted[depth]):
            return
        if depth == len(left_choice):
            at_leaf(colors)
            return
        col = st.column[left_choice[depth]]
        for t in np.flatnonzero(colors == left_cells[depth]):
            if st.column[t] != col:
                continue
            nxt = colors.copy()
            nxt[t] = _mix(nxt[t:t + 1] ^ _INDIV)[0]
            dfs(depth + 1, st.refine(nxt))
            if len(found) > cap:
                return

    dfs(0, left_colors[0])
    return StabilizerReport(tuple(sorted(found)), complete=len(found) <= cap)


def brute_force_stabilizer(N: CodeSet) -> list[ColumnPerm]:
    """Every element of Sym(b)^l fixing ``N``, by plain enumeration."""
    from itertools import permutations, product

    st = _Structure(N)
    sym = list(permutations(range(N.b)))
    out = []
    for combo in product(sym, repeat=N.width):
        if st.fixes(np.array(combo, dtype=np.int64)):
            out.append(ColumnPerm(combo))
    return sorted(out)
