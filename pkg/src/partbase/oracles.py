"""Independent base tests that work on points only, for cross-checking the verifier.

Neither function looks at code words or column permutations.
"""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from .core import ALT, GROUPS, RegularPartition
from .verifier import permutation_sign


def _label_rows(ps: Sequence[RegularPartition]) -> list[list[int]]:
    return [[int(x) for x in p.labels] for p in ps]


def point_oracle_is_base(ps: Sequence[RegularPartition], group: str) -> bool:
    """Enumerate the common stabilizer in Sym(n) by backtracking over point images.

    A partial map is kept only while, for every partition, the induced map
    on parts is injective and consistent.  Every complete assignment is an
    element of the stabilizer and every element is reached, so this is the
    n!-enumeration with branches cut as soon as they cannot extend.
    """
    if group not in GROUPS:
        raise ValueError(f"unknown group {group!r}")
    rows = _label_rows(ps)
    n = len(rows[0])
    b = ps[0].b
    fwd = [[-1] * b for _ in rows]
    back = [[-1] * b for _ in rows]
    image = [-1] * n
    used = [False] * n

    def assign(p: int, q: int) -> list[int] | None:
        touched = []
        for i, lab in enumerate(rows):
            s, t = lab[p], lab[q]
            if fwd[i][s] == -1 and back[i][t] == -1:
                fwd[i][s], back[i][t] = t, s
                touched.append(i)
            elif fwd[i][s] != t or back[i][t] != s:
                undo(p, q, touched)
                return None
        return touched

    def undo(p: int, q: int, touched: list[int]) -> None:
        for i in touched:
            fwd[i][rows[i][p]] = -1
            back[i][rows[i][q]] = -1

    def dfs(p: int) -> bool:
        """True once a refuting element is found."""
        if p == n:
            if image == list(range(n)):
                return False
            return group != ALT or permutation_sign(image) > 0
        for q in range(n):
            if used[q]:
                continue
            touched = assign(p, q)
            if touched is None:
                continue
            image[p], used[q] = q, True
            if dfs(p + 1):
                return True
            image[p], used[q] = -1, False
            undo(p, q, touched)
        return False

    return not dfs(0)


def literal_oracle_is_base(ps: Sequence[RegularPartition], group: str) -> bool:
    """Try every permutation of the points; only for n <= 8."""
    n = ps[0].n
    if n > 8:
        raise ValueError("literal enumeration is limited to n <= 8")
    ident = tuple(range(n))
    for perm in itertools.permutations(range(n)):
        if perm == ident:
            continue
        if group == ALT and permutation_sign(perm) < 0:
            continue
        if all(p.relabel_points(np.array(perm)) == p for p in ps):
            return False
    return True
