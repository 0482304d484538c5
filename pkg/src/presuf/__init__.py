"""Count and list the distinct substrings of a text constrained by a
required prefix and a required suffix, in linear time.

The four entry points share one convention: a query answer concerns
distinct substrings only, the empty string never counts, and prefix and
suffix constraints may overlap inside a match.

>>> import presuf
>>> presuf.count_with_prefixes(b"barbarian", [b"ba", b"bar", b"rb"], b"a")
[4, 3, 2]
"""

from .counting import count_all as count_with_prefixes
from .counting import count_one, evaluate_edge, evaluate_nodes
from .listing import (
    ListStats,
    get_set1,
    get_so,
    list_all as list_with_prefixes,
    materialize,
    materialize_all,
    sweep_set2,
)
from .occurrence import (
    OccurrenceIndex,
    build_cso,
    build_next_so,
    build_so,
    occurrence_end_indices,
)
from .oracle import matching_substrings, unique_substrings
from .reversal import count_with_suffixes, list_with_suffixes
from .suffix_tree import TERMINAL, Locus, SuffixTree, Text

__version__ = "0.1.0"

__all__ = [
    "TERMINAL",
    "Locus",
    "SuffixTree",
    "Text",
    "OccurrenceIndex",
    "build_so",
    "build_cso",
    "build_next_so",
    "occurrence_end_indices",
    "evaluate_edge",
    "evaluate_nodes",
    "count_one",
    "count_with_prefixes",
    "count_with_suffixes",
    "ListStats",
    "get_so",
    "get_set1",
    "sweep_set2",
    "list_with_prefixes",
    "list_with_suffixes",
    "materialize",
    "materialize_all",
    "unique_substrings",
    "matching_substrings",
]
