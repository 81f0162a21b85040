"""Palindromic tree (eertree) with journaled rollback.

The tree keeps one node per distinct non-empty palindromic factor of the
processed word, plus two roots: node 0 of length -1 and node 1 of length 0.
Each node stores its length, a suffix link to the longest proper
palindromic suffix, and a fixed-size transition row indexed by letter
(transition on letter a goes from palindrome P to the palindrome a+P+a).

push() appends a letter and returns how many new palindromic factors that
letter contributed, which is always 0 or 1 because only the longest
palindromic suffix of the extended word can be new.  Every push writes one
journal record, so pop() can undo the most recent push exactly: nodes are
only ever appended, at most one transition is written per push, and the
previous `last` pointer is saved.  The journal makes the structure usable
as the shared state of a depth-first enumeration.

Occurrence counts are deliberately not maintained; richness only needs
"was a node created", and rollback stays O(1) without them.
"""

from __future__ import annotations

from .errors import InputError, StateError


class Eertree:
    """Online palindromic tree over the alphabet {0, ..., q-1}."""

    __slots__ = ("q", "_len", "_link", "_next", "_last", "_word", "_journal")

    def __init__(self, q: int):
        if not isinstance(q, int) or q < 2:
            raise InputError(f"alphabet size must be an integer >= 2, got {q!r}")
        self.q = q
        # node 0: length -1 root, node 1: length 0 root
        self._len = [-1, 0]
        self._link = [0, 0]
        self._next = [[-1] * q, [-1] * q]
        self._last = 1
        self._word = []
        self._journal = []

    def __len__(self) -> int:
        """Number of processed letters."""
        return len(self._word)

    # -- queries ---------------------------------------------------------

    def distinct_palindrome_count(self) -> int:
        """Distinct palindromic factors of the processed word, with the
        empty factor included."""
        return len(self._len) - 2 + 1

    def longest_pal_suffix_length(self) -> int:
        """Length of the longest palindromic suffix of the processed word
        (0 for the empty word)."""
        return self._len[self._last]

    def is_rich_prefix(self) -> bool:
        """True iff every push so far created a node, i.e. the processed
        word attains |w|+1 distinct palindromic factors."""
        return len(self._len) - 2 == len(self._word)

    def processed(self) -> tuple[int, ...]:
        return tuple(self._word)

    def snapshot(self):
        """Full observable state, for rollback verification in tests."""
        return (
            tuple(self._len),
            tuple(self._link),
            tuple(tuple(row) for row in self._next),
            self._last,
            tuple(self._word),
        )

    # -- updates ---------------------------------------------------------

    def _extension_parent(self, start: int, a: int) -> int:
        # Walk suffix links from `start` until the palindrome can be
        # extended by `a` on both sides.  The length -1 root always
        # matches, because extending it yields the single letter a.
        word = self._word
        pos = len(word) - 1
        node_len = self._len
        link = self._link
        u = start
        while True:
            i = pos - node_len[u] - 1
            if i >= 0 and word[i] == a:
                return u
            u = link[u]

    def push(self, a: int) -> int:
        """Append letter a; return 1 if a new palindromic factor appeared."""
        if not 0 <= a < self.q:
            raise InputError(f"letter {a!r} outside alphabet of size {self.q}")
        prev_last = self._last
        self._word.append(a)
        u = self._extension_parent(prev_last, a)
        existing = self._next[u][a]
        if existing >= 0:
            self._last = existing
            self._journal.append((prev_last, -1))
            return 0
        length = self._len[u] + 2
        if length == 1:
            link = 1
        else:
            # longest proper palindromic suffix of the new palindrome
            v = self._extension_parent(self._link[u], a)
            link = self._next[v][a]
        node = len(self._len)
        self._len.append(length)
        self._link.append(link)
        self._next.append([-1] * self.q)
        self._next[u][a] = node
        self._last = node
        self._journal.append((prev_last, u))
        return 1

    def pop(self) -> None:
        """Undo the most recent push exactly."""
        if not self._word:
            raise StateError("pop on an empty tree")
        a = self._word.pop()
        prev_last, parent = self._journal.pop()
        if parent >= 0:
            self._len.pop()
            self._link.pop()
            self._next.pop()
            self._next[parent][a] = -1
        self._last = prev_last

    @classmethod
    def from_word(cls, letters, q: int) -> "Eertree":
        tree = cls(q)
        for a in letters:
            tree.push(a)
        return tree
