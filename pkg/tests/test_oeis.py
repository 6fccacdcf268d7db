import json

import pytest
from hypothesis import given, strategies as st

from dycknum import oeis, sequences
from dycknum.enumeration import level_count
from dycknum.oeis import (
    BFile,
    BFileParseError,
    DisjointRangesError,
    OEISUnavailable,
    compare,
    fetch_bfile,
    parse_bfile,
    serialize_bfile,
    to_bfile,
)


@pytest.fixture
def fake_http(monkeypatch):
    """Serve b-file bodies from a dict and count requests."""
    served = {}
    calls = []

    def get(url, timeout):
        calls.append(url)
        if url not in served:
            raise ConnectionError(f"no route to {url}")
        return served[url]

    monkeypatch.setattr(oeis, "_http_get", get)
    return served, calls


def url(seq_id):
    return oeis.BFILE_URL.format(seq_id=seq_id, digits=seq_id[1:])


def test_parse_examples():
    assert parse_bfile("# comment\n0 1\n1 1\n").entries == ((0, 1), (1, 1))
    assert parse_bfile("5 31").entries == ((5, 31),)
    with pytest.raises(BFileParseError) as err:
        parse_bfile("1 1\n1 2\n")
    assert err.value.lineno == 2


def test_parse_errors_carry_line_numbers():
    with pytest.raises(BFileParseError) as err:
        parse_bfile("# x\n\n1 1\n2 abc\n")
    assert err.value.lineno == 4
    with pytest.raises(BFileParseError):
        parse_bfile("1 2 3\n")


def test_parse_big_values():
    big = 3 ** 200
    assert parse_bfile(f"7 {big}\n").entries == ((7, big),)


bfiles = st.lists(st.integers(min_value=0, max_value=1 << 100), max_size=30).flatmap(
    lambda vals: st.integers(min_value=-5, max_value=5).map(lambda start: to_bfile("A000001", vals, start))
)


@given(bfiles)
def test_serialize_round_trip(bf):
    assert parse_bfile(serialize_bfile(bf, ["header"]), bf.seq_id) == bf


def test_compare_examples():
    a001405 = to_bfile("A001405", [1, 1, 2, 3, 6, 10, 20, 35, 70], 0)
    local = [level_count(n) for n in range(1, 7)]
    report = compare(local, 0, a001405)
    assert report.ok and report.compared_count == 6

    corrupted = list(local)
    corrupted[3] += 1
    report = compare(corrupted, 0, a001405)
    assert report.first_mismatch == (3, 4, 3)

    with pytest.raises(DisjointRangesError):
        compare([1, 2], 100, a001405)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=20),
       st.lists(st.integers(0, 3), min_size=1, max_size=20),
       st.integers(-3, 3), st.integers(-3, 3))
def test_compare_symmetric(a, b, sa, sb):
    bfa, bfb = to_bfile("A", a, sa), to_bfile("B", b, sb)
    try:
        ab = compare(a, sa, bfb)
    except DisjointRangesError:
        with pytest.raises(DisjointRangesError):
            compare(b, sb, bfa)
        return
    ba = compare(b, sb, bfa)
    assert (ab.first_mismatch is None) == (ba.first_mismatch is None)
    if ab.first_mismatch:
        assert ab.first_mismatch[0] == ba.first_mismatch[0]
    else:
        assert ab.compared_count == ba.compared_count


def test_fetch_caches_and_reuses(tmp_path, fake_http):
    served, calls = fake_http
    served[url("A000225")] = b"# Mersenne\n0 0\n1 1\n2 3\n3 7\n"
    bf = fetch_bfile("A000225", cache_dir=tmp_path, offline=False)
    assert bf.entries[1:4] == ((1, 1), (2, 3), (3, 7))
    assert (tmp_path / "b000225.txt").read_bytes() == served[url("A000225")]
    meta = json.loads((tmp_path / "A000225.json").read_text())
    assert meta["url"] == url("A000225") and "retrieved" in meta

    again = fetch_bfile("A000225", cache_dir=tmp_path, offline=False)
    assert again == bf
    assert len(calls) == 1

    fetch_bfile("A000225", cache_dir=tmp_path, offline=False, refresh=True)
    assert len(calls) == 2


def test_fetch_offline(tmp_path, fake_http):
    with pytest.raises(OEISUnavailable):
        fetch_bfile("A001405", cache_dir=tmp_path, offline=True)
    _, calls = fake_http
    assert calls == []


def test_fetch_network_failure_empty_cache(tmp_path, fake_http):
    with pytest.raises(OEISUnavailable):
        fetch_bfile("A001405", cache_dir=tmp_path, offline=False)


def test_fetch_malformed_body_not_cached(tmp_path, fake_http):
    served, _ = fake_http
    served[url("A001405")] = b"0 1\n1 x\n"
    with pytest.raises(BFileParseError) as err:
        fetch_bfile("A001405", cache_dir=tmp_path, offline=False)
    assert err.value.lineno == 2
    assert not (tmp_path / "b001405.txt").exists()


def test_fetch_env_cache_root(tmp_path, monkeypatch, fake_http):
    served, _ = fake_http
    served[url("A001405")] = b"0 1\n1 1\n2 2\n3 3\n4 6\n"
    monkeypatch.setenv(oeis.CACHE_ENV, str(tmp_path / "envcache"))
    bf = fetch_bfile("A001405", offline=False)
    assert bf.as_dict()[4] == 6
    assert (tmp_path / "envcache" / "b001405.txt").exists()
    monkeypatch.setenv(oeis.OFFLINE_ENV, "1")
    assert fetch_bfile("A001405") == bf


def test_bad_seq_id():
    with pytest.raises(ValueError):
        fetch_bfile("A12")


def test_local_sequences_align_with_leading_zero():
    with_zero = to_bfile("A036991", [0, 1, 3, 5, 7, 11, 13, 15, 19], 0)
    assert sequences.compare_with(with_zero).ok
    without = to_bfile("A036991", [1, 3, 5, 7, 11, 13, 15, 19], 1)
    assert sequences.compare_with(without).ok
    binary = to_bfile("A350346", [1, 11, 101, 111, 1011], 1)
    assert sequences.compare_with(binary).ok


def test_local_formula_sequences():
    assert sequences.local_values("A000984", 0, 6) == [1, 2, 6, 20, 70, 252]
    assert sequences.local_values("A001700", 0, 5) == [1, 3, 10, 35, 126]
    assert sequences.local_values("A000108", 0, 5) == [1, 1, 2, 5, 14]
    assert sequences.local_values("A052940", 1, 5) == [5, 11, 23, 47, 95]
    with pytest.raises(KeyError):
        sequences.local_values("A999999", 0, 1)
