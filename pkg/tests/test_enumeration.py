from fractions import Fraction
from itertools import product

import pytest

from dycknum.core import validate
from dycknum.enumeration import (
    MATERIALIZE_LIMIT,
    catalan,
    gf_coefficients,
    iter_level_dfs,
    iter_level_scan,
    iter_suffixes,
    level_count,
    level_max,
    level_min,
    level_stats,
    level_terms,
    mersenne_tail,
    suffix_count,
    suffix_count_by_recurrence,
    suffixes,
)


def brute_suffixes(length):
    out = set()
    for bits in product("01", repeat=length):
        balance = 0
        for b in reversed(bits):
            balance += 1 if b == "1" else -1
            if balance < 0:
                break
        else:
            out.add("".join(bits))
    return out


def series_inv_sqrt_1_minus_4x(n_terms):
    """Coefficients of (1 - 4x)^(-1/2) from the generalized binomial series."""
    coeffs = []
    c = Fraction(1)
    for k in range(n_terms):
        coeffs.append(c)
        # binom(-1/2, k+1) (-4)^(k+1) / (binom(-1/2, k) (-4)^k)
        c = c * (Fraction(-1, 2) - k) / (k + 1) * -4
    assert all(x.denominator == 1 for x in coeffs)
    return [int(x) for x in coeffs]


def test_level_examples():
    assert list(level_terms(1)) == [1]
    assert list(level_terms(3)) == [5, 7]
    assert list(level_terms(4)) == [11, 13, 15]


@pytest.mark.parametrize("n", range(1, 19))
def test_strategies_agree_with_count(n):
    scan = list(iter_level_scan(n))
    assert scan == list(iter_level_dfs(n))
    assert len(scan) == level_count(n)
    assert scan == sorted(set(scan))
    assert all(d.bit_length() == n for d in scan)
    assert scan[0] == level_min(n)
    assert scan[-1] == level_max(n)


def test_dfs_is_prefixed_suffix_set():
    for n in range(1, 14):
        expected = sorted((1 << (n - 1)) | (int(w, 2) if w else 0) for w in iter_suffixes(n - 1))
        assert list(iter_level_dfs(n)) == expected


def test_dfs_deep_level_smoke():
    # level 40 is far beyond scanning; spot-check the stream head and tail
    it = iter_level_dfs(40)
    head = [next(it) for _ in range(5)]
    assert head[0] == level_min(40)
    assert all(validate(d).is_dyck and d.bit_length() == 40 for d in head)
    assert head == sorted(head)


def test_level_counts():
    assert [level_count(n) for n in range(1, 10)] == [1, 1, 2, 3, 6, 10, 20, 35, 70]
    assert level_count(18) == 24310
    with pytest.raises(ValueError):
        level_count(0)


def test_level_min_max():
    assert [level_min(n) for n in range(1, 8)] == [1, 3, 5, 11, 19, 39, 71]
    assert level_min(4) == 7 + 3 + 1
    assert [level_max(n) for n in range(1, 7)] == [1, 3, 7, 15, 31, 63]
    assert level_max(15) == 32767
    assert level_max(0) == 0


def test_suffix_examples():
    assert suffixes(0).words == ("",)
    assert suffixes(2).words == ("01", "11")
    assert suffixes(4).words == ("0011", "0101", "0111", "1011", "1101", "1111")


@pytest.mark.parametrize("length", range(0, 21))
def test_suffix_counts(length):
    words = set(iter_suffixes(length))
    if length <= 14:
        assert words == brute_suffixes(length)
    assert len(words) == suffix_count(length) == suffix_count_by_recurrence(length)
    if length % 2 == 0:
        zero_balance = [w for w in words if w.count("0") == w.count("1")]
        assert len(zero_balance) == catalan(length // 2)
    nxt = suffix_count(length + 1)
    if length % 2:
        assert nxt == 2 * suffix_count(length)
    else:
        assert nxt == 2 * suffix_count(length) - catalan(length // 2)


def test_suffix_recurrence_examples():
    assert suffix_count(5) == 10 == 2 * 6 - catalan(2)
    assert suffix_count(7) == 35 == 2 * 20 - catalan(3)
    assert suffix_count(4) == 6 == 2 * 3


def test_suffix_set_helpers():
    s = suffixes(4)
    assert len(s) == 6 and "0101" in s
    assert s.dyck_words() == ("0011", "0101")
    with pytest.raises(ValueError):
        suffixes(MATERIALIZE_LIMIT + 1)


def test_level_count_equals_suffix_count():
    for n in range(1, 19):
        assert level_count(n) == suffix_count(n - 1)


def test_catalan():
    assert [catalan(k) for k in range(5)] == [1, 1, 2, 5, 14]
    assert catalan(5) == 42
    assert catalan(6) == 132


def test_gf_coefficients_against_series():
    series = series_inv_sqrt_1_minus_4x(40)
    for k in range(31):
        g = gf_coefficients(k)
        assert g.central == series[k]
        # H(x) = (G(x) - 1) / 2x
        assert g.odd_central == series[k + 1] // 2
        assert g.interleaved == suffix_count(k)


def test_gf_examples():
    assert [gf_coefficients(k).central for k in range(6)] == [1, 2, 6, 20, 70, 252]
    assert [gf_coefficients(k).odd_central for k in range(5)] == [1, 3, 10, 35, 126]
    assert [gf_coefficients(k).interleaved for k in range(9)] == [1, 1, 2, 3, 6, 10, 20, 35, 70]


def test_mersenne_tail_examples():
    assert mersenne_tail(4).triplet == (11, 13, 15)
    tail = mersenne_tail(6)
    assert tail.nine == (43, 45, 47, 51, 53, 55, 59, 61, 63)
    assert tail.excluded == (41, 49, 57, 65)
    with pytest.raises(ValueError):
        mersenne_tail(3)


@pytest.mark.parametrize("n", range(6, 19))
def test_mersenne_nine_closes_level(n):
    tail = mersenne_tail(n)
    terms = list(iter_level_scan(n))
    assert tuple(terms[-9:]) == tail.nine
    assert tuple(terms[-3:]) == tail.triplet
    assert not any(validate(x).is_dyck for x in tail.excluded)


def test_level_stats_examples():
    s7 = level_stats(7)
    assert s7.asymmetric_count == 14
    assert s7.count == s7.symmetric_count + s7.asymmetric_count
    assert level_stats(9).interior_count == 9
