"""Suffix-occurrence arrays: where a fixed pattern ends inside the text.

For a fixed pattern ``s`` the flag array ``so`` marks every index of the
terminal-extended text at which an occurrence of ``s`` ends, except that
the terminal index never counts (a substring running into the terminal is
treated as not ending with ``s``, and the empty pattern matches at every
non-terminal index). ``cso`` holds its prefix sums so any range of flags
can be counted in O(1), and ``next_so`` links each index to the next
flagged one to its right (-1 when there is none) so flagged indices can
be enumerated in time proportional to their number.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from .suffix_tree import Text, as_bytes, as_text


def failure_function(pattern: bytes) -> list[int]:
    """Classic border table: fail[i] = length of the longest proper border
    of pattern[:i+1]."""
    m = len(pattern)
    fail = [0] * m
    k = 0
    for i in range(1, m):
        while k and pattern[i] != pattern[k]:
            k = fail[k - 1]
        if pattern[i] == pattern[k]:
            k += 1
        fail[i] = k
    return fail


def occurrence_end_indices(text: bytes, pattern: bytes) -> list[int]:
    """End index of every occurrence of ``pattern`` in ``text``, overlaps
    included. ``pattern`` must be non-empty."""
    if not pattern:
        raise ValueError("pattern must be non-empty")
    fail = failure_function(pattern)
    m = len(pattern)
    out = []
    k = 0
    for i, b in enumerate(text):
        while k and b != pattern[k]:
            k = fail[k - 1]
        if b == pattern[k]:
            k += 1
        if k == m:
            out.append(i)
            k = fail[k - 1]
    return out


def build_so(text: Text, suffix: bytes) -> list[int]:
    """0/1 flags over the terminal-extended index range; see module doc."""
    n = text.effective_len
    so = [0] * n
    if not suffix:
        for i in range(n - 1):
            so[i] = 1
        return so
    for end in occurrence_end_indices(text.data, suffix):
        so[end] = 1
    return so


def build_cso(so: list[int]) -> list[int]:
    """Inclusive prefix sums of the flag array."""
    return list(accumulate(so))


def build_next_so(so: list[int]) -> list[int]:
    """next_so[i] = smallest flagged index > i, or -1. One descending pass."""
    nxt = [0] * len(so)
    j = -1
    for i in range(len(so) - 1, -1, -1):
        nxt[i] = j
        if so[i]:
            j = i
    return nxt


@dataclass
class OccurrenceIndex:
    """The three arrays for one (text, suffix pattern) pair.

    Treat instances as immutable once built.
    """

    so: list[int]
    cso: list[int]
    next_so: list[int]
    suffix_len: int

    @classmethod
    def build(cls, text, suffix) -> OccurrenceIndex:
        t = as_text(text)
        s = as_bytes(suffix)
        so = build_so(t, s)
        return cls(so, build_cso(so), build_next_so(so), len(s))

    def count_so(self, s: int, e: int) -> int:
        """Number of flagged indices in the inclusive range [s, e].

        Empty ranges (s > e) count zero; e must stay inside the array.
        """
        if e < 0 or s > e:
            return 0
        if s <= 0:
            return self.cso[e]
        return self.cso[e] - self.cso[s - 1]

    def evaluate_segment(self, a: int, s: int, e: int) -> int:
        """Count the strings of the segment (a, s, e) that end with the
        suffix pattern.

        The segment stands for the strings starting at text index ``a``
        and ending at each index in [s, e]. A string shorter than the
        pattern cannot match, which clips the range start to
        ``a + suffix_len - 1``.
        """
        return self.count_so(max(s, self.suffix_len + a - 1), e)
