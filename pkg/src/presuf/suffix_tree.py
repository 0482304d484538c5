"""Suffix tree over raw bytes with an out-of-band terminal symbol.

The tree indexes ``text + terminal`` where the terminal is not a byte at
all: it is the reserved symbol 256, used only as a child-map key and as
the last entry of :attr:`Text.symbols`. That way the structure works for
every possible byte value without reserving one.

Nodes live in an arena of parallel lists and are addressed by integer id
(the root is id 0). Each non-root node stores its one incoming edge as an
inclusive index pair ``(edge_start[v], edge_end[v])`` into the symbol
sequence, so edge labels cost O(1) space. Every traversal here is
iterative; degenerate inputs such as one million repeated bytes produce a
path-shaped tree that would blow the recursion limit otherwise.

A built tree is read-only except for :attr:`SuffixTree.value` and
:attr:`SuffixTree.prefix_ids`, which query passes fill in. Concurrent
readers are fine as long as only one query pass writes those annotations
at a time.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

TERMINAL = 256

_OPEN = -1


def as_bytes(data) -> bytes:
    """Coerce str (UTF-8) / bytearray / bytes to bytes."""
    if isinstance(data, str):
        return data.encode()
    return bytes(data)


class Text:
    """Input bytes plus the terminal bookkeeping the tree needs.

    ``effective_len`` counts the terminal, so it is ``len(data) + 1`` and
    index ``effective_len - 1`` always denotes the terminal. ``symbols``
    is the data as a list of ints with :data:`TERMINAL` appended.
    """

    __slots__ = ("data", "effective_len", "symbols")

    def __init__(self, data):
        self.data = as_bytes(data)
        self.effective_len = len(self.data) + 1
        self.symbols = list(self.data) + [TERMINAL]

    def substring(self, start: int, end: int) -> bytes:
        """Bytes spanned by the inclusive index pair ``(start, end)``."""
        if not 0 <= start <= end < self.effective_len - 1:
            raise ValueError(f"index pair ({start}, {end}) out of range")
        return self.data[start:end + 1]

    def __len__(self) -> int:
        return len(self.data)

    def __repr__(self) -> str:
        return f"Text({self.data!r})"


def as_text(data) -> Text:
    return data if isinstance(data, Text) else Text(data)


@dataclass(frozen=True)
class Locus:
    """Where a query string sits in the tree.

    ``edge`` is ``(source node id, first symbol)`` of the edge the string
    ends on, or None for the empty string, which sits at the root.
    ``index_pair`` is that edge's inclusive label span and ``edge_depth``
    the string depth of the edge's source node. ``dest`` is the node at
    the lower end of the edge (the root itself for the empty string);
    the query may end partway along the edge, above ``dest``.
    """

    edge: tuple[int, int] | None
    edge_depth: int
    index_pair: tuple[int, int] | None
    matched_len: int
    dest: int


class SuffixTree:
    """Compressed trie of every suffix of ``text + terminal``.

    Built with Ukkonen's online construction in O(n) amortized time.
    Suffix links are construction scaffolding; they are kept on the
    instance afterwards but nothing downstream reads them.
    """

    __slots__ = (
        "text", "children", "edge_start", "edge_end", "link", "depth",
        "parent", "dfs_order", "value", "prefix_ids",
    )

    root = 0

    def __init__(self, text):
        self.text = as_text(text)
        self._build()
        #: per-node counts filled by a counting pass, None until then
        self.value: list[int] | None = None
        #: node id -> query ids registered there by a listing pass
        self.prefix_ids: dict[int, list[int]] = {}

    def _build(self) -> None:
        syms = self.text.symbols
        n = self.text.effective_len
        # arena: children maps first symbol -> child id (None marks a leaf),
        # edge_start/edge_end give each node's incoming label span; the
        # int arenas are typed arrays, which keeps multi-million-node
        # trees compact enough to stay fast
        children: list[dict[int, int] | None] = [{}]
        estart = array("q", (0,))
        eend = array("q", (0,))
        link = array("q", (0,))

        active_node = 0
        active_edge = 0  # index into syms of the pending string's next symbol
        active_len = 0
        remainder = 0

        for pos in range(n):
            c = syms[pos]
            remainder += 1
            need_sl = -1  # node awaiting a suffix link this phase
            while remainder > 0:
                if active_len == 0:
                    active_edge = pos
                a_sym = syms[active_edge]
                ch_map = children[active_node]
                nxt = ch_map.get(a_sym) if ch_map else None
                if nxt is None:
                    # no edge starts with the pending symbol: new leaf
                    if ch_map is None:
                        ch_map = children[active_node] = {}
                    children.append(None)
                    estart.append(pos)
                    eend.append(_OPEN)
                    link.append(0)
                    ch_map[a_sym] = len(estart) - 1
                    if need_sl >= 0:
                        link[need_sl] = active_node
                    need_sl = active_node
                else:
                    e = eend[nxt]
                    elen = pos + 1 - estart[nxt] if e == _OPEN else e - estart[nxt] + 1
                    if active_len >= elen:
                        # active point lies past this edge: walk down
                        active_edge += elen
                        active_len -= elen
                        active_node = nxt
                        continue
                    if syms[estart[nxt] + active_len] == c:
                        # pending string already present, extend and stop
                        active_len += 1
                        if need_sl >= 0:
                            link[need_sl] = active_node
                        need_sl = active_node
                        break
                    # mismatch inside the edge: split it, hang a new leaf
                    children.append({})
                    estart.append(estart[nxt])
                    eend.append(estart[nxt] + active_len - 1)
                    link.append(0)
                    split = len(estart) - 1
                    children[active_node][a_sym] = split
                    children.append(None)
                    estart.append(pos)
                    eend.append(_OPEN)
                    link.append(0)
                    children[split][c] = len(estart) - 1
                    estart[nxt] += active_len
                    children[split][syms[estart[nxt]]] = nxt
                    if need_sl >= 0:
                        link[need_sl] = split
                    need_sl = split
                remainder -= 1
                if active_node == 0 and active_len > 0:
                    active_len -= 1
                    active_edge = pos - remainder + 1
                elif active_node != 0:
                    active_node = link[active_node]

        # freeze the open leaf edges: every leaf label runs to the terminal
        last = n - 1
        for v in range(len(eend)):
            if children[v] is None:
                eend[v] = last

        # one traversal fixes string depths and records parents plus a
        # preorder (parents before children) that later passes reuse
        count = len(estart)
        depth = array("q", bytes(8 * count))
        parent = array("q", bytes(8 * count))
        order = array("q", bytes(8 * count))
        filled = 0
        stack = [0]
        while stack:
            u = stack.pop()
            order[filled] = u
            filled += 1
            ch = children[u]
            if ch:
                du = depth[u]
                for v in ch.values():
                    depth[v] = du + eend[v] - estart[v] + 1
                    parent[v] = u
                    stack.append(v)

        self.children = children
        self.edge_start = estart
        self.edge_end = eend
        self.link = link
        self.depth = depth
        self.parent = parent
        self.dfs_order = order

    # -- queries ---------------------------------------------------------

    def node_count(self) -> int:
        return len(self.edge_start)

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def iter_children(self, u: int):
        """(symbol, child id) pairs of ``u`` in ascending symbol order,
        terminal last."""
        ch = self.children[u]
        if ch:
            for sym in sorted(ch):
                yield sym, ch[sym]

    def locate(self, query) -> Locus | None:
        """Walk ``query`` down from the root.

        Returns None when the query is not a substring of the indexed
        text. The empty query yields the distinguished root locus.
        """
        q = as_bytes(query)
        if not q:
            return Locus(None, 0, None, 0, self.root)
        syms = self.text.symbols
        node = self.root
        i = 0
        while True:
            child = (self.children[node] or {}).get(q[i])
            if child is None:
                return None
            first = q[i]
            s, e = self.edge_start[child], self.edge_end[child]
            j = s
            while j <= e and i < len(q):
                if syms[j] != q[i]:
                    return None
                i += 1
                j += 1
            if i == len(q):
                return Locus(
                    edge=(node, first),
                    edge_depth=self.depth[node],
                    index_pair=(s, e),
                    matched_len=len(q),
                    dest=child,
                )
            node = child

    # -- export ----------------------------------------------------------

    def to_dot(self) -> str:
        """Graphviz DOT rendering of the tree.

        Deterministic: children appear in ascending symbol order with the
        terminal last. Edge labels carry both the index pair and the
        spelled-out label, the terminal shown as ``$``.
        """
        syms = self.text.symbols
        lines = [
            "digraph suffix_tree {",
            "  node [shape=circle width=0.3 fixedsize=true];",
            '  n0 [label="0"];',
        ]
        stack = [self.root]
        while stack:
            u = stack.pop()
            pending = []
            for _, v in self.iter_children(u):
                s, e = self.edge_start[v], self.edge_end[v]
                label = _render_label(syms, s, e)
                shape = ' shape=box' if self.is_leaf(v) else ""
                lines.append(f'  n{v} [label="{v}"{shape}];')
                lines.append(f'  n{u} -> n{v} [label="[{s},{e}] {label}"];')
                if not self.is_leaf(v):
                    pending.append(v)
            stack.extend(reversed(pending))
        lines.append("}")
        return "\n".join(lines) + "\n"


def _render_label(syms: list[int], start: int, end: int) -> str:
    out = []
    for i in range(start, end + 1):
        sym = syms[i]
        if sym == TERMINAL:
            out.append("$")
        elif 32 <= sym < 127 and chr(sym) not in '"\\':
            out.append(chr(sym))
        else:
            out.append(f"\\\\x{sym:02x}")
    return "".join(out)
