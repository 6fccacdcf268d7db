"""Validation, padding, bracket codecs and symmetry tests for Dyck numbers.

A Dyck number is a natural number whose binary expansion, read from the
least significant bit, never has more 0s than 1s in any suffix.  With the
coding 0 = '(' and 1 = ')' it is a balanced bracket word with the leading
'(' characters stripped.  The stripped zeros are restored by :func:`pad`.

Padded words are plain ``str`` objects over ``'01'``; bracket words are
``str`` objects over ``'()'``.
"""

from __future__ import annotations

from typing import NamedTuple, Optional


class NotDyckError(ValueError):
    """Raised when an operation needs a Dyck number (or balanced word)."""


class NotSymmetricError(ValueError):
    """Raised when an operation needs a symmetric Dyck number."""


class Check(NamedTuple):
    is_dyck: bool
    # number of leading zeros to restore; None when not a Dyck number
    deficit: Optional[int]


def validate(n: int) -> Check:
    """Scan ``n`` from the least significant bit and report Dyck membership.

    >>> validate(59)
    Check(is_dyck=True, deficit=4)
    >>> validate(9).is_dyck
    False
    """
    if n < 0:
        return Check(False, None)
    if n == 0:
        return Check(True, 0)
    if not n & 1:
        return Check(False, None)
    balance = 0
    while n:
        if n & 1:
            balance += 1
        else:
            balance -= 1
            if balance < 0:
                return Check(False, None)
        n >>= 1
    return Check(True, balance)


def is_dyck(n: int) -> bool:
    return validate(n).is_dyck


def deficit(d: int) -> int:
    """Count of leading zeros dropped from the padded word of ``d``."""
    check = validate(d)
    if not check.is_dyck:
        raise NotDyckError(f"{d} is not a Dyck number")
    return check.deficit


def binary_weight(n: int) -> int:
    """Number of 1-bits of ``n`` (the semilength for a Dyck number)."""
    if n < 0:
        raise ValueError("binary weight is defined for naturals only")
    return bin(n).count("1")


def is_mersenne(n: int) -> bool:
    """True for 2**k - 1, k >= 0 (0 counts as M_0)."""
    return n >= 0 and (n + 1) & n == 0


def is_self_bijective(n: int) -> bool:
    """True for 3 * 2**k - 1 with k >= 1, i.e. 5, 11, 23, 47, ..."""
    if n < 5 or (n + 1) % 3:
        return False
    q = (n + 1) // 3
    return q & (q - 1) == 0


def pad(d: int) -> str:
    """Restore the leading zeros of ``d``; the result has length 2 * bw(d)."""
    zeros = deficit(d)
    if d == 0:
        return ""
    return "0" * zeros + format(d, "b")


def _check_word(word: str) -> None:
    balance = 0
    for pos in range(len(word) - 1, -1, -1):
        bit = word[pos]
        if bit == "1":
            balance += 1
        elif bit == "0":
            balance -= 1
            if balance < 0:
                raise NotDyckError(f"suffix starting at {pos} of {word!r} is unbalanced")
        else:
            raise ValueError(f"bad character {bit!r} in padded word")
    if balance:
        raise NotDyckError(f"{word!r} has {balance} more 1s than 0s")


def unpad(word: str) -> int:
    """Inverse of :func:`pad`: drop leading zeros and read as binary."""
    _check_word(word)
    return int(word, 2) if word else 0


_TO_BRACKET = str.maketrans("01", "()")
_FROM_BRACKET = str.maketrans("()", "01")


def to_brackets(d: int) -> str:
    return pad(d).translate(_TO_BRACKET)


def from_brackets(brackets: str) -> int:
    if set(brackets) - {"(", ")"}:
        raise ValueError(f"not a bracket word: {brackets!r}")
    return unpad(brackets.translate(_FROM_BRACKET))


def is_symmetric_word(word: str) -> bool:
    """Mirror positions of ``word`` carry complementary bits."""
    i, j = 0, len(word) - 1
    while i < j:
        if word[i] == word[j]:
            return False
        i += 1
        j -= 1
    return True


def is_symmetric(d: int) -> bool:
    """True iff ``d`` encodes a mirror-symmetric Dyck path.

    >>> is_symmetric(11), is_symmetric(13)
    (True, False)
    """
    return is_symmetric_word(pad(d))


def require_dyck(d: int) -> None:
    if not validate(d).is_dyck:
        raise NotDyckError(f"{d} is not a Dyck number")
