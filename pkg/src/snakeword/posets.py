"""Piecewise-linear (zigzag) posets read off a binary word, antichain and
order-filter machinery, and the antichain trie.

Elements are the integers 1..d. For i >= 2, letter i of the word gives the
covering relation between elements i-1 and i: a 1 slopes up (i-1 below i),
a 0 slopes down (i-1 above i). Two elements are comparable exactly when the
slope is constant between them.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .errors import (
    CapExceededError,
    EmptyWordError,
    IndexOutOfRangeError,
    MalformedPathError,
    NotAFilterError,
    NotAnAntichainError,
)
from .trie import TrieNode, clone
from .words import DEFAULT_CAP, BinaryWord


@dataclass(frozen=True)
class PiecewisePoset:
    """Zigzag poset on 1..d with slopes read from letters 2..d of a word."""

    word: BinaryWord

    @property
    def d(self) -> int:
        return len(self.word)

    def _check(self, *elements: int) -> None:
        for i in elements:
            if not 1 <= i <= self.d:
                raise IndexOutOfRangeError(f"element {i} outside 1..{self.d}")

    def less_equal(self, i: int, j: int) -> bool:
        """True iff element i is below-or-equal element j."""
        self._check(i, j)
        if i == j:
            return True
        # bits[i:j] holds letters i+1..j; a monotone run means comparability
        if i < j:
            return "0" not in self.word.bits[i:j]
        return "1" not in self.word.bits[j:i]

    def comparable(self, i: int, j: int) -> bool:
        return self.less_equal(i, j) or self.less_equal(j, i)


def poset_from_word(word: BinaryWord) -> PiecewisePoset:
    if not len(word):
        raise EmptyWordError("the empty word has no poset")
    return PiecewisePoset(word)


@dataclass(frozen=True)
class ExtremaList:
    """Minimal/maximal elements, left to right; always starts at 1, ends at d."""

    positions: tuple[int, ...]

    @property
    def interior_count(self) -> int:
        """Number of extrema besides the two ends (-1 for a one-element poset,
        where the sole element is counted once)."""
        return len(self.positions) - 2


def extrema(poset: PiecewisePoset) -> ExtremaList:
    """Endpoints plus every position where the zigzag changes slope."""
    d = poset.d
    if d == 1:
        return ExtremaList((1,))
    interior = [i for i in range(2, d) if poset.word.bit(i) != poset.word.bit(i + 1)]
    return ExtremaList((1, *interior, d))


def is_antichain(poset: PiecewisePoset, elements: Iterable[int]) -> bool:
    """True iff the elements are pairwise incomparable (the empty set is)."""
    items = sorted(set(elements))
    poset._check(*items)
    return not any(
        poset.comparable(a, b)
        for k, a in enumerate(items)
        for b in items[k + 1 :]
    )


def enumerate_antichains(
    poset: PiecewisePoset, cap: int = DEFAULT_CAP
) -> tuple[tuple[int, ...], ...]:
    """All antichains (including the empty one), by brute force over subsets,
    sorted by size then lexicographically."""
    d = poset.d
    if d > cap:
        raise CapExceededError(f"poset size {d} exceeds the oracle cap {cap}")
    comp = [
        [poset.comparable(i, j) for j in range(1, d + 1)] for i in range(1, d + 1)
    ]
    found = []
    for mask in range(1 << d):
        members = [i + 1 for i in range(d) if mask >> i & 1]
        ok = all(
            not comp[a - 1][b - 1]
            for k, a in enumerate(members)
            for b in members[k + 1 :]
        )
        if ok:
            found.append(tuple(members))
    found.sort(key=lambda a: (len(a), a))
    return tuple(found)


def up_closure(poset: PiecewisePoset, antichain: Iterable[int]) -> frozenset[int]:
    """The order filter generated by an antichain."""
    items = tuple(sorted(set(antichain)))
    if not is_antichain(poset, items):
        raise NotAnAntichainError(f"{items} contains comparable elements")
    return frozenset(
        j for j in range(1, poset.d + 1) if any(poset.less_equal(t, j) for t in items)
    )


def is_order_filter(poset: PiecewisePoset, elements: Iterable[int]) -> bool:
    """True iff the set is upward closed."""
    members = set(elements)
    poset._check(*members)
    return all(
        j in members
        for t in members
        for j in range(1, poset.d + 1)
        if poset.less_equal(t, j)
    )


def min_elements(poset: PiecewisePoset, filt: Iterable[int]) -> tuple[int, ...]:
    """The minimal elements of an order filter; inverse of :func:`up_closure`."""
    members = set(filt)
    if not is_order_filter(poset, members):
        raise NotAFilterError(f"{sorted(members)} is not upward closed")
    return tuple(
        sorted(
            t
            for t in members
            if not any(s != t and poset.less_equal(s, t) for s in members)
        )
    )


def enumerate_order_filters(
    poset: PiecewisePoset, cap: int = DEFAULT_CAP
) -> tuple[frozenset[int], ...]:
    """All upward-closed subsets, by brute force over subsets."""
    d = poset.d
    if d > cap:
        raise CapExceededError(f"poset size {d} exceeds the oracle cap {cap}")
    up_mask = [0] * (d + 1)
    for t in range(1, d + 1):
        for j in range(1, d + 1):
            if poset.less_equal(t, j):
                up_mask[t] |= 1 << (j - 1)
    found = []
    for mask in range(1 << d):
        if all(
            mask & up_mask[t] == up_mask[t]
            for t in range(1, d + 1)
            if mask >> (t - 1) & 1
        ):
            found.append(frozenset(i + 1 for i in range(d) if mask >> i & 1))
    found.sort(key=lambda f: (len(f), sorted(f)))
    return tuple(found)


def antichain_of_path(labels: Iterable[int]) -> tuple[int, ...]:
    """Map a root path of node labels to an antichain.

    For each maximal run of consecutive integers in the path, keep the run's
    largest member; the run consisting of the root label 0 alone contributes
    nothing.
    """
    seq = tuple(labels)
    if not seq or seq[0] != 0:
        raise MalformedPathError(f"path must start at 0: {seq}")
    if any(b <= a for a, b in zip(seq, seq[1:])):
        raise MalformedPathError(f"path must be strictly increasing: {seq}")
    maxes = []
    for k, value in enumerate(seq):
        if k + 1 == len(seq) or seq[k + 1] != value + 1:
            maxes.append(value)
    return tuple(m for m in maxes if m > 0)


@dataclass(frozen=True)
class AntichainLabel:
    """Payload of an antichain-trie node: its integer level and the antichain
    read off the root path."""

    level: int
    antichain: tuple[int, ...]

    def __str__(self) -> str:
        inner = ",".join(str(i) for i in self.antichain)
        return f"{self.level} {{{inner}}}" if inner else f"{self.level} ∅"


def antichain_trie(poset: PiecewisePoset) -> TrieNode:
    """The copy-attachment construction of the antichain trie.

    Start from the vertical linear tree labeled 0..d. Working from the
    rightmost interior extremum leftwards, snapshot the subtree rooted at
    the spine node one past the extremum and attach a copy as the right
    child of every spine node whose label lies in the half-open interval
    from the previous extremum (inclusive) up to this one (exclusive).
    With at most two extrema the trie is the bare spine.

    Every node ends up labeled with an :class:`AntichainLabel`.
    """
    d = poset.d
    spine = [TrieNode(label=0)]
    for i in range(1, d + 1):
        node = TrieNode(label=i)
        spine[i - 1].left = node
        spine.append(node)

    ext = extrema(poset)
    if ext.interior_count > 0:
        marks = ext.positions
        for n in range(ext.interior_count, 0, -1):
            source = spine[marks[n] + 1]
            for p in range(marks[n - 1], marks[n]):
                spine[p].right = clone(source)

    _annotate(spine[0], [])
    return spine[0]


def _annotate(node: TrieNode, path: list[int]) -> None:
    path.append(node.label)
    node.label = AntichainLabel(path[-1], antichain_of_path(path))
    if node.left is not None:
        _annotate(node.left, path)
    if node.right is not None:
        _annotate(node.right, path)
    path.pop()
