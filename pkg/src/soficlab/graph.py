"""Finite labeled directed graphs and the structure ops the package needs.

A :class:`LabeledGraph` presents a set of bi-infinite label sequences: the
ones read along bi-infinite edge paths.  Vertices are ``0..n_vertices-1``;
edges carry a symbol rank into the graph's alphabet.  Parallel edges with
distinct labels are meaningful, exact duplicates are collapsed.

Functions here are pure: each returns a new graph (plus bookkeeping such as
old-vertex maps) and never mutates its input.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .base import Alphabet
from .errors import StateBlowup

_PATH_CAP = 500_000  # max vertices when forming path graphs


@dataclass(frozen=True)
class LabeledGraph:
    """Immutable labeled digraph.

    Parameters
    ----------
    alphabet : Alphabet
        Edge-label alphabet.
    n_vertices : int
        Vertex count; vertices are the ints ``0..n_vertices-1``.
    edges : tuple of (int, int, int)
        ``(src, dst, symbol_rank)`` triples.  Stored sorted and deduplicated.
    vertex_names : tuple of str, optional
        Display names, same length as the vertex count.
    """

    alphabet: Alphabet
    n_vertices: int
    edges: tuple[tuple[int, int, int], ...]
    vertex_names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n_vertices < 0:
            raise ValueError("negative vertex count")
        canon = tuple(sorted(set(map(tuple, self.edges))))
        for s, d, a in canon:
            if not (0 <= s < self.n_vertices and 0 <= d < self.n_vertices):
                raise ValueError(f"edge ({s},{d}) out of range")
            if not (0 <= a < len(self.alphabet)):
                raise ValueError(f"edge label rank {a} out of range")
        object.__setattr__(self, "edges", canon)
        if self.vertex_names is not None:
            names = tuple(self.vertex_names)
            if len(names) != self.n_vertices:
                raise ValueError("vertex_names length mismatch")
            object.__setattr__(self, "vertex_names", names)

    @classmethod
    def build(cls, alphabet: Alphabet, n_vertices: int, edges,
              vertex_names=None) -> "LabeledGraph":
        """Edges may name their label by symbol string instead of rank."""
        es = []
        for s, d, a in edges:
            if isinstance(a, str):
                a = alphabet.index(a)
            es.append((s, d, a))
        return cls(alphabet, n_vertices, tuple(es), vertex_names)

    def name_of(self, v: int) -> str:
        if self.vertex_names is not None:
            return self.vertex_names[v]
        return str(v)

    def out_map(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of ``(dst, symbol_rank)``, edge order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n_vertices)]
        for s, d, a in self.edges:
            adj[s].append((d, a))
        return adj

    def in_map(self) -> list[list[tuple[int, int]]]:
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n_vertices)]
        for s, d, a in self.edges:
            adj[d].append((s, a))
        return adj

    def is_right_resolving(self) -> bool:
        """No vertex carries two out-edges with the same label."""
        seen = set()
        for s, _, a in self.edges:
            if (s, a) in seen:
                return False
            seen.add((s, a))
        return True

    def __repr__(self) -> str:
        return (f"LabeledGraph({self.n_vertices} vertices, "
                f"{len(self.edges)} edges over {self.alphabet.compact})")


def subgraph(g: LabeledGraph, keep) -> tuple[LabeledGraph, list[int]]:
    """Induced subgraph on ``keep``.  Returns (graph, old_vertex_of_new)."""
    old = sorted(set(keep))
    pos = {v: i for i, v in enumerate(old)}
    edges = tuple((pos[s], pos[d], a) for s, d, a in g.edges
                  if s in pos and d in pos)
    names = None
    if g.vertex_names is not None:
        names = tuple(g.vertex_names[v] for v in old)
    return LabeledGraph(g.alphabet, len(old), edges, names), old


def essentialize(g: LabeledGraph) -> tuple[LabeledGraph, list[int]]:
    """Largest subgraph where every vertex has an in- and an out-edge.

    Returns (graph, old_vertex_of_new).  The result presents the same set
    of bi-infinite label sequences; it may be empty.
    """
    outdeg = [0] * g.n_vertices
    indeg = [0] * g.n_vertices
    for s, d, _ in g.edges:
        outdeg[s] += 1
        indeg[d] += 1
    out_adj = g.out_map()
    in_adj = g.in_map()
    dead = deque(v for v in range(g.n_vertices)
                 if outdeg[v] == 0 or indeg[v] == 0)
    alive = [True] * g.n_vertices
    while dead:
        v = dead.popleft()
        if not alive[v]:
            continue
        alive[v] = False
        for w, _ in out_adj[v]:
            if alive[w]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    dead.append(w)
        for w, _ in in_adj[v]:
            if alive[w]:
                outdeg[w] -= 1
                if outdeg[w] == 0:
                    dead.append(w)
    return subgraph(g, [v for v in range(g.n_vertices) if alive[v]])


def strongly_connected_components(g: LabeledGraph) -> list[list[int]]:
    """Tarjan's algorithm, iterative.  Components are sorted vertex lists;
    the list is in reverse topological order of the condensation."""
    n = g.n_vertices
    adj = [[] for _ in range(n)]
    for s, d, _ in g.edges:
        adj[s].append(d)
    index = [-1] * n
    low = [0] * n
    onstack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                onstack[v] = True
            descended = False
            for i in range(pi, len(adj[v])):
                w = adj[v][i]
                if index[w] == -1:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    descended = True
                    break
                if onstack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    onstack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


def is_strongly_connected(g: LabeledGraph) -> bool:
    if g.n_vertices <= 1:
        return True
    return len(strongly_connected_components(g)) == 1


def cycle_gcd(g: LabeledGraph) -> int:
    """gcd of all cycle lengths of a strongly connected graph (its period).

    Returns 0 when the graph has no edges at all.
    """
    if not g.edges:
        return 0
    adj = g.out_map()
    lvl = [-1] * g.n_vertices
    start = g.edges[0][0]
    lvl[start] = 0
    q = deque([start])
    while q:
        v = q.popleft()
        for w, _ in adj[v]:
            if lvl[w] == -1:
                lvl[w] = lvl[v] + 1
                q.append(w)
    val = 0
    for s, d, _ in g.edges:
        if lvl[s] != -1 and lvl[d] != -1:
            val = math.gcd(val, lvl[s] + 1 - lvl[d])
    return abs(val)


def directed_diameter(g: LabeledGraph) -> int:
    """Max over ordered vertex pairs of the shortest directed path length.

    Raises ValueError unless the graph is strongly connected.
    """
    if g.n_vertices <= 1:
        return 0
    adj = [[] for _ in range(g.n_vertices)]
    for s, d, _ in g.edges:
        adj[s].append(d)
    best = 0
    for src in range(g.n_vertices):
        dist = [-1] * g.n_vertices
        dist[src] = 0
        q = deque([src])
        seen = 1
        while q:
            v = q.popleft()
            for w in adj[v]:
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    seen += 1
                    q.append(w)
        if seen != g.n_vertices:
            raise ValueError("graph is not strongly connected")
        best = max(best, max(dist))
    return best


def block_name(alphabet: Alphabet, ranks: tuple[int, ...]) -> str:
    """Display name of a block of symbols; concatenated when the base
    symbols are single characters, comma-joined otherwise."""
    parts = [alphabet.symbols[r] for r in ranks]
    if all(len(p) == 1 for p in parts):
        return "".join(parts)
    return ",".join(parts)


def path_graph(g: LabeledGraph, k: int) -> tuple[LabeledGraph, tuple[tuple[int, ...], ...]]:
    """The k-th path graph: vertices are paths of length ``k-1`` in ``g``,
    edges are paths of length ``k`` labeled by their full label block.

    The new alphabet is the set of label blocks that occur, sorted by rank
    tuple; the second return value maps new symbol rank -> rank tuple over
    the old alphabet.  For an essential ``g`` the result is essential and
    presents the recoding of the same sequences by overlapping k-blocks.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    adj = g.out_map()
    # flat path encoding: (v0, s1, v1, ..., s_{k-1}, v_{k-1})
    paths: list[tuple[int, ...]] = [(v,) for v in range(g.n_vertices)]
    for _ in range(k - 1):
        nxt = []
        for p in paths:
            for w, a in adj[p[-1]]:
                nxt.append(p + (a, w))
            if len(nxt) > _PATH_CAP:
                raise StateBlowup(f"path graph exceeds {_PATH_CAP} vertices")
        paths = nxt
    paths.sort()
    vid = {p: i for i, p in enumerate(paths)}
    blocks_seen: set[tuple[int, ...]] = set()
    raw_edges = []
    for p in paths:
        for w, a in adj[p[-1]]:
            block = p[1::2] + (a,)
            q = (p + (a, w))[2:]
            blocks_seen.add(block)
            raw_edges.append((vid[p], vid[q], block))
    blocks = tuple(sorted(blocks_seen))
    brank = {b: i for i, b in enumerate(blocks)}
    names = tuple(block_name(g.alphabet, b) for b in blocks)
    if len(set(names)) != len(names):
        # pathological symbol names; fall back to unambiguous ones
        names = tuple("b" + "_".join(map(str, b)) for b in blocks)
    balpha = Alphabet(names)
    edges = tuple((s, d, brank[b]) for s, d, b in raw_edges)
    return LabeledGraph(balpha, len(paths), edges), blocks


def follower_reduce(g: LabeledGraph) -> tuple[LabeledGraph, list[int]]:
    """Merge vertices with equal follower sets (equal finite-word languages).

    Requires a right-resolving graph.  Returns (graph, class_of_old_vertex).
    On essential input the result is essential, right-resolving, and presents
    the same sequences.
    """
    if not g.is_right_resolving():
        raise ValueError("follower_reduce needs a right-resolving graph")
    n = g.n_vertices
    na = len(g.alphabet)
    trans = [[-1] * na for _ in range(n)]
    for s, d, a in g.edges:
        trans[s][a] = d
    cls = [0] * n
    nclasses = 1 if n else 0
    while True:
        sig = {}
        newcls = [0] * n
        for v in range(n):
            key = (cls[v], tuple(cls[t] if t != -1 else -1 for t in trans[v]))
            if key not in sig:
                sig[key] = len(sig)
            newcls[v] = sig[key]
        if len(sig) == nclasses:
            break
        cls, nclasses = newcls, len(sig)
    # renumber classes by least member so vertex order is stable
    order = sorted(range(nclasses), key=lambda c: cls.index(c))
    rename = {c: i for i, c in enumerate(order)}
    cls = [rename[c] for c in cls]
    edges = set()
    for s, d, a in g.edges:
        edges.add((cls[s], cls[d], a))
    names = None
    if g.vertex_names is not None:
        rep = {}
        for v in range(n):
            rep.setdefault(cls[v], g.name_of(v))
        names = tuple(rep[c] for c in range(nclasses))
    return LabeledGraph(g.alphabet, nclasses, tuple(edges), names), cls
