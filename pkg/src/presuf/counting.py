"""Counting constrained substrings: many prefixes against one fixed suffix.

Every distinct substring of the text appears exactly once along some tree
edge, so counting distinct substrings that end with the fixed suffix
reduces to counting flagged end positions edge by edge. One bottom-up
pass stores, at every node, how many such substrings live strictly below
it; a single query then adds the on-edge part for its own prefix to the
stored subtree total.
"""

from __future__ import annotations

from .occurrence import OccurrenceIndex
from .suffix_tree import SuffixTree, as_bytes, as_text


def evaluate_edge(idx: OccurrenceIndex, edge_start: int, edge_end: int,
                  source_depth: int) -> int:
    """Distinct substrings ending on this edge that end with the suffix
    pattern.

    The strings on an edge labeled [edge_start, edge_end] below a source
    node of string depth ``source_depth`` all start at text index
    ``edge_start - source_depth``; too-short ones are clipped away the
    same way evaluate_segment does.
    """
    lo = max(edge_start, idx.suffix_len + edge_start - source_depth - 1)
    return idx.count_so(lo, edge_end)


def evaluate_nodes(tree: SuffixTree, idx: OccurrenceIndex) -> None:
    """Annotate every node with its subtree count (``tree.value``).

    value[u] = sum over all edges strictly below u of their edge counts.
    Three linear sweeps: seed every node with its own incoming edge's
    count (the source depth falls out of the node's depth minus its
    label length), fold the seeds into parents along the stored preorder
    reversed (children land before parents there), then subtract each
    node's own seed so only the strictly-below part remains.
    """
    estart = tree.edge_start
    eend = tree.edge_end
    depth = tree.depth
    cso = idx.cso
    slen = idx.suffix_len
    count = tree.node_count()

    sub = [0] * count
    for v in range(1, count):
        s = estart[v]
        e = eend[v]
        source_depth = depth[v] - e + s - 1
        lo = slen + s - source_depth - 1
        if lo < s:
            lo = s
        if lo <= e:
            sub[v] = cso[e] - (cso[lo - 1] if lo > 0 else 0)
    own = sub[:]

    parent = tree.parent
    order = tree.dfs_order
    for i in range(count - 1, 0, -1):
        w = order[i]
        sub[parent[w]] += sub[w]
    tree.value = [total - edge for total, edge in zip(sub, own)]


def count_one(tree: SuffixTree, idx: OccurrenceIndex, prefix) -> int:
    """Count of distinct substrings with this prefix and the fixed suffix.

    Requires evaluate_nodes to have run on ``tree`` with the same index.
    """
    if tree.value is None:
        raise RuntimeError("run evaluate_nodes before querying counts")
    p = as_bytes(prefix)
    loc = tree.locate(p)
    if loc is None:
        return 0
    if loc.edge is None:
        # empty prefix: everything below the root qualifies
        return tree.value[tree.root]
    s, e = loc.index_pair
    dep = loc.edge_depth
    # on-edge part: strings on the prefix's own edge, at least as long as
    # the prefix and at least as long as the suffix pattern
    lo = max(s, len(p) + s - dep - 1, idx.suffix_len + s - dep - 1)
    return idx.count_so(lo, e) + tree.value[loc.dest]


def count_all(text, prefixes, suffix) -> list[int]:
    """One count per prefix: distinct substrings of ``text`` that start
    with that prefix and end with ``suffix``.

    Runs in O(text + suffix + total prefix length) after which each
    answer is O(prefix) on its own.
    """
    t = as_text(text)
    tree = SuffixTree(t)
    idx = OccurrenceIndex.build(t, suffix)
    evaluate_nodes(tree, idx)
    return [count_one(tree, idx, p) for p in prefixes]
