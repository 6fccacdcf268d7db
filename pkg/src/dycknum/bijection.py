"""The bijection B onto symmetric Dyck numbers and the unary trees it grows.

``bij`` drops the leading 1 of a Dyck number, mirrors the remaining suffix
into a prefix (reverse + complement) and glues the two halves together.
Iterating ``bij`` from an asymmetric term yields an infinite chain of
symmetric terms; ``inv_bij`` walks such a chain back to its root.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .core import (
    NotDyckError,
    NotSymmetricError,
    binary_weight,
    is_mersenne,
    is_self_bijective,
    is_symmetric,
    pad,
    require_dyck,
    unpad,
)
from .enumeration import iter_dyck

DEFAULT_MAX_BOUND = 20


class TermClass(enum.Enum):
    MERSENNE = "mersenne"
    SELF_BIJECTIVE = "self-bijective"
    TREE_ROOT = "root"
    INTERIOR = "interior"

    def __str__(self) -> str:
        return self.value


class RootSearchError(ValueError):
    """root_of() cannot descend from the given term."""


class MersenneLadderError(RootSearchError):
    """Mersenne numbers climb M_n -> M_{n+1} under inv_bij and never reach a root."""


class FixedPointError(RootSearchError):
    """Self-bijective terms are fixed by B and have no root."""


class RootSearchDefect(RuntimeError):
    """The descent exceeded its iteration cap; indicates a bug, not bad input."""


def _reverse_bits(x: int, width: int) -> int:
    return int(format(x, f"0{width}b")[::-1], 2) if width else 0


def bij(d: int) -> int:
    """Map a positive Dyck number to a symmetric one.

    >>> [bij(d) for d in (13, 19, 23, 63)]
    [21, 51, 23, 31]
    """
    if d < 1:
        raise NotDyckError("bij is defined for Dyck numbers >= 1")
    require_dyck(d)
    width = d.bit_length() - 1
    mask = (1 << width) - 1
    suffix = d & mask
    mirrored = ~_reverse_bits(suffix, width) & mask
    return (mirrored << width) | suffix


def bij_reference(d: int) -> int:
    """Same map as :func:`bij`, built on padded words (differential oracle)."""
    if d < 1:
        raise NotDyckError("bij is defined for Dyck numbers >= 1")
    require_dyck(d)
    suffix = format(d, "b")[1:]
    prefix = suffix[::-1].translate(str.maketrans("01", "10"))
    return unpad(prefix + suffix)


def inv_bij(d: int) -> int:
    """Inverse of :func:`bij`: (d mod 2**w) + 2**w with w = bw(d)."""
    if not is_symmetric(d):
        raise NotSymmetricError(f"{d} is not a symmetric Dyck number")
    w = binary_weight(d)
    return (d & ((1 << w) - 1)) + (1 << w)


def inv_bij_reference(d: int) -> int:
    """Keep the second half of the padded word and put a 1 in front."""
    word = pad(d)
    if not is_symmetric(d):
        raise NotSymmetricError(f"{d} is not a symmetric Dyck number")
    return int("1" + word[len(word) // 2:], 2)


def classify(d: int) -> TermClass:
    if d < 1:
        raise NotDyckError("classify is defined for Dyck numbers >= 1")
    require_dyck(d)
    if is_mersenne(d):
        return TermClass.MERSENNE
    if is_self_bijective(d):
        return TermClass.SELF_BIJECTIVE
    if not is_symmetric(d):
        return TermClass.TREE_ROOT
    return TermClass.INTERIOR


@dataclass(frozen=True)
class BChain:
    root: int
    terms: Tuple[int, ...]

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)


def iter_chain(root: int):
    """Endless B-images of ``root``; callers bound the iteration."""
    if classify(root) is not TermClass.TREE_ROOT:
        raise ValueError(f"{root} is not an asymmetric tree root")
    term = root
    while True:
        term = bij(term)
        yield term


def chain(root: int, k: int) -> BChain:
    """First ``k`` terms B(root), B(B(root)), ... of the tree grown from ``root``."""
    if k < 1:
        raise ValueError("chain length must be positive")
    it = iter_chain(root)
    return BChain(root, tuple(next(it) for _ in range(k)))


def root_of(d: int) -> Tuple[int, List[int]]:
    """Descend with inv_bij until an asymmetric term appears.

    Returns ``(root, path)`` where ``path`` runs from ``d`` down to the root
    inclusive, so a root maps to ``(d, [d])``.
    """
    cls = classify(d)
    if cls is TermClass.MERSENNE:
        raise MersenneLadderError(f"{d} is a Mersenne number; inv_bij gives {2 * d + 1}")
    if cls is TermClass.SELF_BIJECTIVE:
        raise FixedPointError(f"{d} is self-bijective")
    path = [d]
    cap = 2 * d.bit_length()
    term = d
    while is_symmetric(term):
        if len(path) > cap:
            raise RootSearchDefect(f"no root within {cap} steps from {d}")
        term = inv_bij(term)
        path.append(term)
    return term, path


@dataclass
class PartitionReport:
    bound: int
    interior: List[int] = field(default_factory=list)
    # interior term -> its tree root (from the forward chains)
    assignment: Dict[int, int] = field(default_factory=dict)
    # interior term -> position in its chain (1 = first B-image)
    position: Dict[int, int] = field(default_factory=dict)
    unassigned: List[int] = field(default_factory=list)
    collisions: List[Tuple[int, int, int]] = field(default_factory=list)
    duplicate_first_images: List[int] = field(default_factory=list)
    # interior terms whose backward descent disagrees with the forward chain
    disagreements: List[Tuple[int, int, int]] = field(default_factory=list)
    # root_of() descents that did not land on a TREE_ROOT
    bad_descents: List[int] = field(default_factory=list)
    # chain terms that are not classified INTERIOR
    non_interior: List[int] = field(default_factory=list)

    @property
    def roots(self) -> List[int]:
        return sorted(set(self.assignment.values()))

    @property
    def first_step_images(self) -> List[int]:
        return sorted(t for t, p in self.position.items() if p == 1)

    def reached_from_roots_below(self, limit: int) -> List[int]:
        return sorted(t for t, r in self.assignment.items() if r < limit)

    @property
    def ok(self) -> bool:
        return not (
            self.unassigned
            or self.collisions
            or self.duplicate_first_images
            or self.disagreements
            or self.bad_descents
            or self.non_interior
        )


def forest_partition(level_bound: int, max_bound: int = DEFAULT_MAX_BOUND) -> PartitionReport:
    """Check that the B-trees split the interior terms of levels <= bound.

    Chains are grown forward from every tree root and cross-checked against
    the backward descent of :func:`root_of` for each interior term.
    """
    if not 1 <= level_bound <= max_bound:
        raise ValueError(f"level bound must be in 1..{max_bound}")
    report = PartitionReport(level_bound)
    roots = []
    for d in iter_dyck(level_bound):
        cls = classify(d)
        if cls is TermClass.INTERIOR:
            report.interior.append(d)
        elif cls is TermClass.TREE_ROOT:
            roots.append(d)

    first_images = set()
    for r in roots:
        term, pos = r, 0
        while True:
            term = bij(term)
            pos += 1
            # lengths only grow after the first step
            if term.bit_length() > level_bound:
                break
            if pos == 1:
                if term in first_images:
                    report.duplicate_first_images.append(term)
                first_images.add(term)
            if term in report.assignment:
                report.collisions.append((term, report.assignment[term], r))
                continue
            report.assignment[term] = r
            report.position[term] = pos

    interior = set(report.interior)
    report.non_interior = sorted(t for t in report.assignment if t not in interior)
    for d in report.interior:
        if d not in report.assignment:
            report.unassigned.append(d)
            continue
        root, _ = root_of(d)
        if classify(root) is not TermClass.TREE_ROOT:
            report.bad_descents.append(d)
        if root != report.assignment[d]:
            report.disagreements.append((d, report.assignment[d], root))
    return report
