from partbase.acceptance import random_small_inputs
from partbase.constructions import paper_8_3_partitions
from partbase.core import ALT, SYM
from partbase.oracles import literal_oracle_is_base, point_oracle_is_base


def test_pruned_matches_literal_enumeration():
    checked = 0
    for ps in random_small_inputs(150, seed=3):
        if ps[0].n > 8:
            continue
        for group in (SYM, ALT):
            assert point_oracle_is_base(ps, group) == literal_oracle_is_base(ps, group)
            checked += 1
    assert checked > 50


def test_paper_triple_points_only():
    ps = paper_8_3_partitions()
    assert point_oracle_is_base(ps, ALT)
    assert not point_oracle_is_base(ps, SYM)
