"""Local generators for the OEIS sequences this package can be checked against."""

from __future__ import annotations

from itertools import count, islice
from math import comb
from typing import Callable, Dict, Iterator, List

from .enumeration import catalan, iter_level, level_count, level_max
from .oeis import BFile, DiffReport, compare, fetch_bfile


def dyck_numbers(include_zero: bool = True) -> Iterator[int]:
    """Ascending Dyck numbers, level by level (0 first, as the empty word)."""
    if include_zero:
        yield 0
    for n in count(1):
        yield from iter_level(n)


def dyck_binaries(include_zero: bool = True) -> Iterator[int]:
    # A350346 lists the binary expansions read as decimal digit strings
    for d in dyck_numbers(include_zero):
        yield int(format(d, "b"))


# index -> value for sequences with a closed form; index is the OEIS index
FORMULAS: Dict[str, Callable[[int], int]] = {
    "A000108": catalan,
    "A000225": level_max,
    "A000984": lambda k: comb(2 * k, k),
    "A001405": lambda k: level_count(k + 1),
    "A001700": lambda k: comb(2 * k + 1, k),
    "A052940": lambda k: 3 * 2 ** k - 1 if k else 1,
}

STREAMS: Dict[str, Callable[[bool], Iterator[int]]] = {
    "A036991": dyck_numbers,
    "A350346": dyck_binaries,
}

KNOWN = sorted(set(FORMULAS) | set(STREAMS))


def local_values(seq_id: str, start: int, n: int, include_zero: bool = True) -> List[int]:
    """``n`` local terms of ``seq_id`` beginning at OEIS index ``start``."""
    if seq_id in FORMULAS:
        f = FORMULAS[seq_id]
        return [f(i) for i in range(start, start + n)]
    if seq_id in STREAMS:
        return list(islice(STREAMS[seq_id](include_zero), n))
    raise KeyError(f"no local generator for {seq_id}; known: {', '.join(KNOWN)}")


def compare_with(remote: BFile, limit: int = 0) -> DiffReport:
    """Diff a fetched b-file against the local generator, optionally truncated."""
    entries = remote.entries[:limit] if limit else remote.entries
    if not entries:
        return DiffReport(remote.seq_id, 0)
    start = entries[0][0]
    # enumeration streams start at the first term; align with the remote
    # listing, which may or may not begin with the empty word 0
    include_zero = entries[0][1] == 0
    local = local_values(remote.seq_id, start, len(entries), include_zero)
    return compare(local, start, BFile(remote.seq_id, tuple(entries)))


def conformance(seq_id: str, limit: int = 0, **fetch_kwargs) -> DiffReport:
    return compare_with(fetch_bfile(seq_id, **fetch_kwargs), limit)
