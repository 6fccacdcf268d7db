"""Levels, binary suffixes and the counting identities around them.

Level ``n`` is the set of Dyck numbers of binary length ``n``.  Each level is
obtained by putting a 1 in front of every admissible suffix of length
``n - 1``, which is why level sizes and suffix counts are both central
binomial coefficients C(l, floor(l/2)).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, NamedTuple

from .core import is_mersenne, is_self_bijective, is_symmetric, validate

# levels above this are enumerated with the suffix DFS by default
SCAN_LIMIT = 24
# suffix sets larger than this are only streamed
MATERIALIZE_LIMIT = 28


def _positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{name} must be >= 1, got {n}")


def _natural(n: int, name: str = "l") -> None:
    if n < 0:
        raise ValueError(f"{name} must be >= 0, got {n}")


def mersenne(n: int) -> int:
    return (1 << n) - 1


def catalan(k: int) -> int:
    _natural(k, "k")
    return comb(2 * k, k) // (k + 1)


def level_count(n: int) -> int:
    """Size of level ``n``: C(n - 1, floor((n - 1) / 2))."""
    _positive(n)
    return comb(n - 1, (n - 1) // 2)


def level_min(n: int) -> int:
    """Smallest Dyck number of length ``n``: the successor of M_{n-1}."""
    _positive(n)
    if n == 1:
        return 1
    return mersenne(n - 1) + mersenne(-(-(n - 1) // 2)) + 1


def level_max(n: int) -> int:
    _natural(n, "n")
    return mersenne(n)


def iter_level_scan(n: int) -> Iterator[int]:
    """Filter every odd integer of length ``n`` through :func:`validate`."""
    _positive(n)
    if n == 1:
        yield 1
        return
    for d in range((1 << (n - 1)) + 1, 1 << n, 2):
        if validate(d).is_dyck:
            yield d


def _ascending_suffixes(length: int, low: int, prefix: int) -> Iterator[int]:
    # Bits are chosen from the most significant end, 0 before 1, so values
    # come out ascending.  ``low`` is the minimum balance over all suffixes
    # of the bits chosen so far that start inside the chosen part; the
    # remaining ``length`` bits must make up for a negative ``low``.
    if length == 0:
        if low >= 0:
            yield prefix
        return
    for bit, step in ((0, -1), (1, 1)):
        new_low = min(low, 0) + step
        if length - 1 >= -new_low:
            yield from _ascending_suffixes(length - 1, new_low, (prefix << 1) | bit)


def iter_level_dfs(n: int) -> Iterator[int]:
    """Prepend 1 to each admissible ``(n - 1)``-suffix, in ascending order."""
    _positive(n)
    # the leading 1 only ever helps, so it starts the DFS as the prefix
    yield from _ascending_suffixes(n - 1, 1, 1)


def iter_level(n: int, strategy: str = "auto") -> Iterator[int]:
    if strategy == "auto":
        strategy = "scan" if n <= SCAN_LIMIT else "dfs"
    if strategy == "scan":
        return iter_level_scan(n)
    if strategy == "dfs":
        return iter_level_dfs(n)
    raise ValueError(f"unknown strategy {strategy!r}")


def iter_dyck(max_level: int) -> Iterator[int]:
    """All positive Dyck numbers of length <= ``max_level``, ascending."""
    for n in range(1, max_level + 1):
        yield from iter_level(n)


@dataclass(frozen=True)
class LevelView:
    n: int
    strategy: str = "auto"

    @property
    def min_term(self) -> int:
        return level_min(self.n)

    @property
    def max_term(self) -> int:
        return level_max(self.n)

    @property
    def count(self) -> int:
        return level_count(self.n)

    def __iter__(self) -> Iterator[int]:
        return iter_level(self.n, self.strategy)

    def __len__(self) -> int:
        return self.count


def level_terms(n: int, strategy: str = "auto") -> LevelView:
    _positive(n)
    return LevelView(n, strategy)


def iter_suffixes(length: int) -> Iterator[str]:
    """Admissible suffixes built by extending on the left, depth first.

    A 0 may be put in front only while the running balance is positive.
    """
    _natural(length)

    def extend(word: str, balance: int) -> Iterator[str]:
        if len(word) == length:
            yield word
            return
        if balance > 0:
            yield from extend("0" + word, balance - 1)
        yield from extend("1" + word, balance + 1)

    return extend("", 0)


@dataclass(frozen=True)
class SuffixSet:
    length: int
    words: tuple

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, word) -> bool:
        return word in self.words

    def dyck_words(self) -> tuple:
        """Members with zero balance, i.e. complete Dyck words."""
        return tuple(w for w in self.words if w.count("0") == w.count("1"))


def suffixes(length: int) -> SuffixSet:
    """All admissible suffixes of ``length`` bits, sorted by value."""
    _natural(length)
    if length > MATERIALIZE_LIMIT:
        raise ValueError(
            f"suffix set of length {length} is too large to materialize; "
            "use iter_suffixes()"
        )
    words = sorted(iter_suffixes(length), key=lambda w: int(w, 2) if w else 0)
    return SuffixSet(length, tuple(words))


def suffix_count(length: int) -> int:
    _natural(length)
    return comb(length, length // 2)


def suffix_count_by_recurrence(length: int) -> int:
    """Grow #S_l from #S_0 = 1: double after odd l, subtract Cat(l/2) after even l."""
    _natural(length)
    count = 1
    for l in range(length):
        count = 2 * count if l % 2 else 2 * count - catalan(l // 2)
    return count


class MersenneTail(NamedTuple):
    triplet: tuple
    nine: tuple
    excluded: tuple


_NINE_OFFSETS = (20, 18, 16, 12, 10, 8, 4, 2, 0)
_EXCLUDED_OFFSETS = (22, 14, 6, -2)


def mersenne_tail(n: int) -> MersenneTail:
    """Closing terms of level ``n`` at fixed offsets below M_n.

    The nine needs n >= 6; for n in (4, 5) only the triplet is defined and
    ``nine`` / ``excluded`` are empty.
    """
    if n < 4:
        raise ValueError(f"Mersenne triplet needs n >= 4, got {n}")
    top = mersenne(n)
    triplet = (top - 4, top - 2, top)
    if n < 6:
        return MersenneTail(triplet, (), ())
    nine = tuple(top - k for k in _NINE_OFFSETS)
    excluded = tuple(top - k for k in _EXCLUDED_OFFSETS)
    return MersenneTail(triplet, nine, excluded)


class GFCoefficients(NamedTuple):
    central: int
    odd_central: int
    interleaved: int


def gf_coefficients(k: int) -> GFCoefficients:
    """k-th coefficients of G = (1-4x)^(-1/2), H = (G-1)/2x and G(x^2) + xH(x^2)."""
    _natural(k, "k")
    if k % 2:
        interleaved = _odd_central((k - 1) // 2)
    else:
        interleaved = _central(k // 2)
    return GFCoefficients(_central(k), _odd_central(k), interleaved)


def _central(k: int) -> int:
    # coefficient of x^k in G(x)
    return comb(2 * k, k)


def _odd_central(k: int) -> int:
    # coefficient of x^k in H(x) = (G(x) - 1) / 2x, i.e. central(k + 1) / 2
    return _central(k + 1) // 2


@dataclass(frozen=True)
class LevelStats:
    n: int
    count: int
    symmetric_count: int
    asymmetric_count: int
    root_count: int
    # symmetric terms that are neither Mersenne nor self-bijective
    interior_count: int


def level_stats(n: int) -> LevelStats:
    from .ternary import is_ternary_root

    _positive(n)
    count = symmetric = interior = roots = 0
    for d in iter_level(n):
        count += 1
        if is_symmetric(d):
            symmetric += 1
            if not (is_mersenne(d) or is_self_bijective(d)):
                interior += 1
        if is_ternary_root(d):
            roots += 1
    return LevelStats(n, count, symmetric, count - symmetric, roots, interior)


__all__ = [
    "LevelStats",
    "LevelView",
    "GFCoefficients",
    "MersenneTail",
    "SuffixSet",
    "catalan",
    "gf_coefficients",
    "iter_dyck",
    "iter_level",
    "iter_level_dfs",
    "iter_level_scan",
    "iter_suffixes",
    "level_count",
    "level_max",
    "level_min",
    "level_stats",
    "level_terms",
    "mersenne",
    "mersenne_tail",
    "suffix_count",
    "suffix_count_by_recurrence",
]
