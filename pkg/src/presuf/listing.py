"""Listing constrained substrings, output-sensitively.

Answers come out as index pairs (start, end) into the original text, one
per distinct substring, never materialized unless asked. The work is
split in two phases. Phase one resolves each prefix to its edge and
emits the answers sitting on that edge directly. Phase two walks the
tree once: every node remembers which queries landed on it, a shared
stack accumulates those query ids on the way down, and each edge below
at least one registered query is scanned once and fanned out to all
queries on the stack. Scanning an edge costs time proportional to the
answers it yields (plus one), which keeps the whole sweep proportional
to the output size plus the tree size.
"""

from __future__ import annotations

from dataclasses import dataclass

from .occurrence import OccurrenceIndex
from .suffix_tree import SuffixTree, as_bytes, as_text


@dataclass
class ListStats:
    """Instrumentation for the output-sensitivity bound."""

    get_so_calls: int = 0
    loop_iterations: int = 0


def get_so(idx: OccurrenceIndex, a: int, s: int, e: int,
           out: list[tuple[int, int]], stats: ListStats | None = None) -> None:
    """Append (a, i) for every flagged i in [s, e] reachable from the
    segment (a, s, e), i.e. every string of the segment ending with the
    suffix pattern.

    Jumps straight between flagged indices via next_so, so the cost is
    one plus the number of pairs appended.
    """
    i = max(s, a + idx.suffix_len - 1)
    if stats is not None:
        stats.get_so_calls += 1
        stats.loop_iterations += 1
    if i >= len(idx.so):
        return
    if not idx.so[i]:
        i = idx.next_so[i]
    nxt = idx.next_so
    while 0 <= i <= e:
        out.append((a, i))
        if stats is not None:
            stats.loop_iterations += 1
        i = nxt[i]


def get_set1(tree: SuffixTree, prefix):
    """Resolve one prefix to (on-edge segment, node below its edge).

    Returns None when the prefix does not occur in the text. The empty
    prefix occurs everywhere but owns no edge: its segment is None and
    its node is the root, meaning all answers come from the subtree walk.
    """
    p = as_bytes(prefix)
    loc = tree.locate(p)
    if loc is None:
        return None
    if loc.edge is None:
        return None, tree.root
    s, e = loc.index_pair
    dep = loc.edge_depth
    segment = (s - dep, max(s, len(p) + s - dep - 1), e)
    return segment, loc.dest


def sweep_set2(tree: SuffixTree, idx: OccurrenceIndex, node: int,
               id_stack: list[int], lists: list[list[tuple[int, int]]],
               stats: ListStats | None = None) -> None:
    """Walk the subtree under ``node`` once, fanning each edge's answers
    out to every query id on ``id_stack``.

    Reads the registrations in ``tree.prefix_ids``. Children are visited
    in ascending symbol order. Edges below an empty id stack are not
    scanned, and leaves are not descended into (their subtrees hold no
    edges). ``id_stack`` is restored to its entry state before returning.
    """
    children = tree.children
    estart = tree.edge_start
    eend = tree.edge_end
    depth = tree.depth
    prefix_ids = tree.prefix_ids

    edge_buf: list[tuple[int, int]] = []
    id_stack.extend(prefix_ids.get(node, ()))
    stack = [(node, iter(sorted(children[node] or ())))]
    while stack:
        u, symbols = stack[-1]
        sym = next(symbols, None)
        if sym is None:
            stack.pop()
            for _ in prefix_ids.get(u, ()):
                id_stack.pop()
            continue
        v = children[u][sym]
        if id_stack:
            edge_buf.clear()
            get_so(idx, estart[v] - depth[u], estart[v], eend[v],
                   edge_buf, stats)
            if edge_buf:
                for i in id_stack:
                    lists[i].extend(edge_buf)
        ch = children[v]
        if ch:
            id_stack.extend(prefix_ids.get(v, ()))
            stack.append((v, iter(sorted(ch))))


def list_all(text, prefixes, suffix,
             stats: ListStats | None = None) -> list[list[tuple[int, int]]]:
    """One list per prefix: every distinct substring of ``text`` that
    starts with that prefix and ends with ``suffix``, as (start, end)
    index pairs into the text.

    Pairs within a list denote pairwise distinct strings. Duplicate
    prefixes get independent, identical lists. Runs in time proportional
    to text size plus total query length plus total output size.
    """
    t = as_text(text)
    tree = SuffixTree(t)
    idx = OccurrenceIndex.build(t, suffix)
    lists: list[list[tuple[int, int]]] = [[] for _ in prefixes]
    tree.prefix_ids = {}
    for i, p in enumerate(prefixes):
        resolved = get_set1(tree, p)
        if resolved is None:
            continue
        segment, dest = resolved
        if segment is not None:
            a, s, e = segment
            get_so(idx, a, s, e, lists[i], stats)
        tree.prefix_ids.setdefault(dest, []).append(i)
    sweep_set2(tree, idx, tree.root, [], lists, stats)
    return lists


def materialize(text, refs) -> list[bytes]:
    """Turn one answer list of (start, end) pairs into bytes."""
    t = as_text(text)
    return [t.substring(a, b) for a, b in refs]


def materialize_all(text, lists) -> list[list[bytes]]:
    t = as_text(text)
    return [[t.substring(a, b) for a, b in refs] for refs in lists]
