"""Ternary triplet forest: node d has children (4d-1, 4d+1, 4d+3).

Going up, every member of a triplet has the same candidate parent
2 * (d // 8) + 1.  A Dyck number whose candidate is not a Dyck number, or
does not actually generate it, is the root of its own tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Tuple

from .core import NotDyckError, is_dyck, require_dyck
from .enumeration import iter_dyck, mersenne_tail

DEFAULT_MAX_BOUND = 20


def children(d: int) -> Tuple[int, int, int]:
    if d < 1:
        raise NotDyckError("children are defined for Dyck numbers >= 1")
    require_dyck(d)
    triplet = (4 * d - 1, 4 * d + 1, 4 * d + 3)
    assert all(is_dyck(c) for c in triplet), triplet
    return triplet


def parent(d: int) -> Optional[int]:
    """Parent in the triplet forest, or None when ``d`` is a root."""
    require_dyck(d)
    if d < 3:
        return None
    p = 2 * (d // 8) + 1
    if is_dyck(p) and d in children(p):
        return p
    return None


def is_ternary_root(d: int) -> bool:
    if d < 1:
        raise NotDyckError("ternary roots are Dyck numbers >= 1")
    return parent(d) is None


def tree_root(d: int) -> int:
    """Follow parents up to the root of the tree containing ``d``."""
    p = parent(d)
    while p is not None:
        d, p = p, parent(p)
    return d


def triplet_coprime(triplet) -> bool:
    a, b, c = triplet
    return gcd(a, b) == gcd(a, c) == gcd(b, c) == 1


@dataclass(frozen=True)
class TripletNode:
    value: int
    parent: Optional[int]
    children: Tuple[int, int, int]


def node(d: int) -> TripletNode:
    return TripletNode(d, parent(d), children(d))


@dataclass
class ForestReport:
    bound: int
    roots_by_level: Dict[int, List[int]] = field(default_factory=dict)
    # terms reached as a child of more than one node
    multi_parent: List[int] = field(default_factory=list)
    # non-roots that no node of lower level generates
    orphans: List[int] = field(default_factory=list)
    # roots that some node generates anyway
    generated_roots: List[int] = field(default_factory=list)
    # parent() answers that disagree with the forward triplet scan
    parent_mismatches: List[Tuple[int, Optional[int], Optional[int]]] = field(default_factory=list)
    non_coprime_triplets: List[int] = field(default_factory=list)

    @property
    def roots(self) -> List[int]:
        return [r for level in sorted(self.roots_by_level) for r in self.roots_by_level[level]]

    @property
    def ok(self) -> bool:
        return not (
            self.multi_parent
            or self.orphans
            or self.generated_roots
            or self.parent_mismatches
            or self.non_coprime_triplets
        )


def forest_check(level_bound: int, max_bound: int = DEFAULT_MAX_BOUND) -> ForestReport:
    """Verify that the triplet trees partition all Dyck numbers of levels <= bound."""
    if not 1 <= level_bound <= max_bound:
        raise ValueError(f"level bound must be in 1..{max_bound}")
    report = ForestReport(level_bound)
    terms = list(iter_dyck(level_bound))
    # forward scan: who generates whom
    generated_by: Dict[int, int] = {}
    for d in terms:
        for c in children(d):
            if c.bit_length() > level_bound:
                continue
            if c in generated_by:
                report.multi_parent.append(c)
            generated_by[c] = d

    for d in terms:
        p = parent(d)
        forward = generated_by.get(d)
        if p != forward:
            report.parent_mismatches.append((d, p, forward))
        if p is None:
            report.roots_by_level.setdefault(d.bit_length(), []).append(d)
            if forward is not None:
                report.generated_roots.append(d)
        elif forward is None:
            report.orphans.append(d)

    for n in range(4, level_bound + 1):
        if not triplet_coprime(mersenne_tail(n).triplet):
            report.non_coprime_triplets.append(n)
    return report
