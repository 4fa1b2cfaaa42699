"""Binary words: parsing, block factorization, scattered subwords, and the
trie of distinct subwords (both the brute-force prefix tree and the
vertical-tree-plus-copies construction).

Conventions used throughout the package:

* a binary word is a 0/1 string whose first letter is 1; the empty word is
  a valid word and a valid subword of every word;
* letters are 1-indexed (``bit(1)`` is the first letter), so positions line
  up with poset elements and snake-graph tiles without off-by-one shifts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CapExceededError,
    EmptyWordError,
    InvalidCharacterError,
    LeadingZeroError,
    NotASubwordError,
)
from .trie import TrieNode, clone

#: Largest word length the brute-force enumerations accept by default.
DEFAULT_CAP = 20


@dataclass(frozen=True)
class BinaryWord:
    """A finite 0/1 word; nonempty words start with 1."""

    bits: str = ""

    def __post_init__(self) -> None:
        if self.bits.strip("01"):
            raise InvalidCharacterError(f"not a 0/1 string: {self.bits!r}")
        if self.bits.startswith("0"):
            raise LeadingZeroError(f"word may not start with 0: {self.bits!r}")

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits

    def bit(self, i: int) -> int:
        """The i-th letter as an int, 1-indexed."""
        return int(self.bits[i - 1])


EMPTY_WORD = BinaryWord("")


def parse_word(text: str) -> BinaryWord:
    """Parse a 0/1 string (possibly empty) into a validated word."""
    return BinaryWord(text)


@dataclass(frozen=True)
class Block:
    """A maximal run of equal letters; ``start``/``end`` are 1-indexed."""

    letter: int
    length: int
    start: int

    @property
    def end(self) -> int:
        return self.start + self.length - 1


def factor_blocks(word: BinaryWord) -> tuple[Block, ...]:
    """Factor a nonempty word into maximal blocks of equal letters.

    Adjacent blocks alternate letters, the first block is a block of 1s,
    and a trailing empty block of 0s is simply absent.
    """
    if not len(word):
        raise EmptyWordError("cannot factor the empty word")
    blocks: list[Block] = []
    start = 1
    for i in range(2, len(word) + 1):
        if word.bit(i) != word.bit(start):
            blocks.append(Block(word.bit(start), i - start, start))
            start = i
    blocks.append(Block(word.bit(start), len(word) + 1 - start, start))
    return tuple(blocks)


def is_subword(s: BinaryWord, w: BinaryWord) -> bool:
    """True iff ``s`` embeds as a (scattered) subsequence of ``w``.

    The empty word is a subword of every word; nonempty candidates start
    with 1 by construction, matching the host's first letter.
    """
    pos = 0
    for c in s.bits:
        pos = w.bits.find(c, pos) + 1
        if pos == 0:
            return False
    return True


@dataclass(frozen=True)
class Embedding:
    """The leftmost-greedy embedding of a nonempty subword into a host.

    ``indices`` are the 1-indexed host positions; each is the smallest
    possible given the previous one.
    """

    subword: BinaryWord
    host: BinaryWord
    indices: tuple[int, ...]

    @property
    def blocks(self) -> tuple[tuple[int, int], ...]:
        """Maximal runs of consecutive host indices, as (start, end) pairs."""
        runs = []
        run_start = prev = self.indices[0]
        for i in self.indices[1:]:
            if i != prev + 1:
                runs.append((run_start, prev))
                run_start = i
            prev = i
        runs.append((run_start, prev))
        return tuple(runs)


def leftmost_embedding(s: BinaryWord, w: BinaryWord) -> Embedding:
    """Greedy left-to-right embedding of ``s`` into ``w``."""
    if not len(s):
        raise EmptyWordError("the empty word has no embedding indices")
    indices = []
    pos = 0
    for c in s.bits:
        pos = w.bits.find(c, pos) + 1
        if pos == 0:
            raise NotASubwordError(f"{s.bits!r} is not a subword of {w.bits!r}")
        indices.append(pos)
    return Embedding(s, w, tuple(indices))


def enumerate_subwords(word: BinaryWord, cap: int = DEFAULT_CAP) -> tuple[BinaryWord, ...]:
    """All distinct subwords, by brute force over index subsets.

    Returns the empty word first, then length-lexicographic order.
    """
    d = len(word)
    if d > cap:
        raise CapExceededError(f"word length {d} exceeds the oracle cap {cap}")
    bits = word.bits
    seen = set()
    for mask in range(1 << d):
        sub = "".join(bits[i] for i in range(d) if mask >> i & 1)
        if not sub or sub[0] == "1":
            seen.add(sub)
    ordered = sorted(seen, key=lambda b: (len(b), b))
    return tuple(BinaryWord(b) for b in ordered)


def _greedy_end(sub: str, bits: str) -> int:
    """1-indexed host position where the leftmost embedding of ``sub`` ends.

    Returns 0 for the empty subword. ``sub`` must be a subword of ``bits``.
    """
    pos = 0
    for c in sub:
        pos = bits.find(c, pos) + 1
    return pos


def naive_subword_trie(word: BinaryWord, cap: int = DEFAULT_CAP) -> TrieNode:
    """Prefix tree over the enumerated subword set.

    Child orientation: the left child appends the letter the leftmost-greedy
    embedding would consume next, the right child (when it exists) appends
    the other letter. This reproduces the child order of
    :func:`lrs_subword_trie`, where the left child continues the current
    maximal block and the right child starts a new one.
    """
    subs = {s.bits for s in enumerate_subwords(word, cap)}
    bits = word.bits

    def build(sub: str) -> TrieNode:
        node = TrieNode(label=sub, edge=sub[-1] if sub else None)
        end = _greedy_end(sub, bits)
        if end < len(bits):
            cont = bits[end]
            other = "0" if cont == "1" else "1"
            node.left = build(sub + cont)
            if sub + other in subs:
                node.right = build(sub + other)
        return node

    return build("")


def lrs_subword_trie(word: BinaryWord) -> TrieNode:
    """The vertical-tree-plus-copies construction of the subword trie.

    Start from the linear tree spelling ``word`` along left children. For
    each block boundary, working bottom-up, snapshot the subtree rooted one
    step past the boundary and attach a copy as the right child of every
    spine node that sits strictly inside the preceding block (including the
    node at which that block starts). Copies keep their edge letters, so the
    new edge carries the letter found above the original subtree root.

    For the first block the spine root is excluded as an attachment target:
    a copy there would spell words starting with 0.
    """
    if not len(word):
        raise EmptyWordError("the trie construction needs a nonempty word")
    spine = [TrieNode()]
    for i in range(1, len(word) + 1):
        node = TrieNode(edge=word.bits[i - 1])
        spine[i - 1].left = node
        spine.append(node)

    ends = [b.end for b in factor_blocks(word)]
    for level in range(len(ends) - 1, 0, -1):
        source = spine[ends[level - 1] + 1]
        lo = ends[level - 2] if level >= 2 else 1
        for p in range(lo, ends[level - 1]):
            spine[p].right = clone(source)

    _spell_labels(spine[0])
    return spine[0]


def _spell_labels(root: TrieNode) -> None:
    """Set each node's label to the edge letters read from the root."""
    stack = [(root, "")]
    while stack:
        node, path = stack.pop()
        node.label = path
        for child in (node.left, node.right):
            if child is not None:
                stack.append((child, path + child.edge))
