"""The mirrored problem: one fixed prefix against many suffixes.

A substring starts with P and ends with s exactly when its reversal,
inside the reversed text, starts with reversed s and ends with reversed
P. So both mirrored operations run the forward engines on reversed
inputs and, for listings, map each index pair back through the
reflection i -> n-1-i. A prefix longer than the whole text matches
nothing and is answered without touching the engines, keeping the cost
independent of its length.
"""

from __future__ import annotations

from .counting import count_all
from .listing import ListStats, list_all
from .suffix_tree import as_bytes


def count_with_suffixes(text, prefix, suffixes) -> list[int]:
    """One count per suffix: distinct substrings of ``text`` that start
    with ``prefix`` and end with that suffix."""
    data = as_bytes(text)
    p = as_bytes(prefix)
    if len(p) > len(data):
        return [0] * len(suffixes)
    rev_suffixes = [as_bytes(s)[::-1] for s in suffixes]
    return count_all(data[::-1], rev_suffixes, p[::-1])


def list_with_suffixes(text, prefix, suffixes,
                       stats: ListStats | None = None) -> list[list[tuple[int, int]]]:
    """One list per suffix, as (start, end) index pairs into ``text``."""
    data = as_bytes(text)
    p = as_bytes(prefix)
    if len(p) > len(data):
        return [[] for _ in suffixes]
    rev_suffixes = [as_bytes(s)[::-1] for s in suffixes]
    rev_lists = list_all(data[::-1], rev_suffixes, p[::-1], stats)
    last = len(data) - 1
    return [[(last - b, last - a) for a, b in refs] for refs in rev_lists]
