
import pytest

from partbase.core import DomainError
from partbase.formulas import (a_le_b_table, alt_rules, base_size_alt, base_size_sym, ceil_log,
                               floor_log, lower_bound_alt, lower_bound_sym, sym_rules)


@pytest.mark.parametrize("a,b,value,rule", [
    (2, 3, 4, "Thm1(1) a=2,b=3"),
    (7, 3, 4, "Thm1(4) exception (7,3)"),
    (4, 2, 5, "Thm1(2) exception (4,2)"),
    (5, 7, 3, "Thm1(4) b=a+2"),
    (10, 3, 4, "Thm1(3) generic"),
    (2, 9, 3, "Thm1(1) a=2,b>=4"),
    (9, 2, 5, "Thm1(2) b=2"),
])
def test_sym_examples(a, b, value, rule):
    ans = base_size_sym(a, b)
    assert (ans.value, ans.rule) == (value, rule)


def test_undefined():
    assert base_size_sym(2, 2).undefined and base_size_alt(2, 2).undefined
    assert str(base_size_sym(2, 2)) == "undefined (action unfaithful)"


def test_answer_text():
    assert str(base_size_sym(7, 3)) == "4 (Thm1(4) exception (7,3))"
    assert str(base_size_alt(8, 3)) == "3 (Thm2(3) a=b^k-1)"


@pytest.mark.parametrize("a,b,value", [(8, 3, 3), (5, 7, 2), (15, 2, 5), (63, 4, 4), (3, 4, 3),
                                       (15, 4, 4), (7, 2, 4), (8, 2, 5), (6, 2, 4)])
def test_alt_examples(a, b, value):
    assert base_size_alt(a, b).value == value


def test_alt_4_2_is_a_computed_exception():
    ans = base_size_alt(4, 2)
    assert ans.value == 4 and "computed" in ans.rule


@pytest.mark.parametrize("a,b", [(1, 3), (3, 1), (0, 0)])
def test_domain_errors(a, b):
    with pytest.raises(DomainError):
        base_size_sym(a, b)
    with pytest.raises(DomainError):
        base_size_alt(a, b)
    with pytest.raises(DomainError):
        lower_bound_sym(a, b)


@pytest.mark.parametrize("f,a,b,value", [
    (lower_bound_sym, 7, 3, 3), (lower_bound_sym, 2, 4, 2), (lower_bound_sym, 8, 3, 4),
    (lower_bound_alt, 8, 3, 3), (lower_bound_alt, 15, 2, 5), (lower_bound_alt, 3, 3, 3),
])
def test_lower_bounds(f, a, b, value):
    assert f(a, b) == value


@pytest.mark.parametrize("a,b,value", [(2, 3, 4), (3, 5, 3), (4, 7, 3)])
def test_table_examples(a, b, value):
    assert a_le_b_table(a, b).value == value


def test_table_domain():
    with pytest.raises(DomainError):
        a_le_b_table(5, 3)


def test_sandwich():
    for a in range(2, 65):
        for b in range(2, 65):
            if (a, b) == (2, 2):
                continue
            s, t = base_size_sym(a, b).value, base_size_alt(a, b).value
            assert lower_bound_sym(a, b) <= s
            assert lower_bound_alt(a, b) <= t <= s <= t + 1


def test_ceiling_exactness():
    for b in (2, 3, 10):
        for a in list(range(2, 5000)) + [b ** m - 2 + d for m in range(2, 7) for d in (-1, 0, 1)]:
            if a < 2:
                continue
            m = lower_bound_sym(a, b) - 1
            assert b ** (m - 1) < a + 2 <= b ** m


def test_ceiling_exactness_sampled_to_a_million():
    import numpy as np
    rng = np.random.default_rng(0)
    for b in (2, 3, 10):
        sample = set(rng.integers(2, 10 ** 6 + 1, size=3000).tolist())
        sample |= {b ** m + d for m in range(1, 13) for d in (-3, -2, -1, 0, 1) if 2 <= b ** m + d <= 10 ** 6}
        for a in sample:
            m = lower_bound_sym(a, b) - 1
            assert b ** (m - 1) < a + 2 <= b ** m


def test_integer_logs_near_powers():
    assert ceil_log(10, 1000) == 3 and ceil_log(10, 1001) == 4
    assert floor_log(3, 26) == 2 and floor_log(3, 27) == 3
    assert ceil_log(3, 3 ** 40) == 40 and ceil_log(3, 3 ** 40 + 1) == 41


def test_exactly_one_rule_fires():
    for a in range(2, 201):
        for b in range(2, 13):
            assert len(sym_rules(a, b)) == 1
            assert len(alt_rules(a, b)) == 1


def test_alt_drop_clause3_boundary():
    # b < k + floor((k+1)/2) + 2 ; k=2: b<5 but (4,2) excluded
    assert base_size_alt(8, 3).value == base_size_sym(8, 3).value - 1
    assert base_size_alt(15, 4).value == base_size_sym(15, 4).value
    assert base_size_alt(24, 5).value == base_size_sym(24, 5).value
    # k=3: b < 7
    assert base_size_alt(215, 6).value == base_size_sym(215, 6).value - 1
    assert base_size_alt(342, 7).value == base_size_sym(342, 7).value
