import itertools

import numpy as np
from hypothesis import given, settings, strategies as st

from partbase.core import CodeSet
from partbase.stabilizer import brute_force_stabilizer, stabilizer


def test_full_cube_has_full_group():
    N = CodeSet(list(itertools.product(range(3), repeat=2)), 3)
    rep = stabilizer(N, cap=40)
    assert rep.complete and rep.order == 36
    assert rep.elements == tuple(brute_force_stabilizer(N))


def test_cap_reports_incomplete():
    N = CodeSet(list(itertools.product(range(3), repeat=2)), 3)
    rep = stabilizer(N, cap=10)
    assert not rep.complete and len(rep.elements) == 11


def test_rigid_code():
    N = CodeSet.from_words([(0, 0), (0, 1), (1, 0), (2, 2), (1, 2)], 3)
    assert stabilizer(N).order == len(brute_force_stabilizer(N))


@settings(max_examples=250, deadline=None)
@given(b=st.integers(2, 3), width=st.integers(1, 3), seed=st.integers(0, 2 ** 32 - 1),
       size=st.integers(1, 12))
def test_matches_brute_force(b, width, seed, size):
    rng = np.random.default_rng(seed)
    N = CodeSet(rng.integers(b, size=(size, width)), b)
    brute = brute_force_stabilizer(N)
    rep = stabilizer(N, cap=len(brute) + 1)
    assert rep.complete
    assert list(rep.elements) == brute


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2 ** 32 - 1), size=st.integers(4, 30))
def test_matches_brute_force_b4(seed, size):
    rng = np.random.default_rng(seed)
    N = CodeSet(rng.integers(4, size=(size, 2)), 4)
    brute = brute_force_stabilizer(N)
    assert list(stabilizer(N, cap=len(brute) + 1).elements) == brute
