"""Partial deterministic acceptors for factorial languages.

A :class:`FactorialDfa` is a deterministic automaton in which every state
accepts and transitions may be undefined: the language is the set of words
whose run from state 0 is fully defined.  Languages of interest here are
factorial (factor-closed) and extendable, which the constructors guarantee;
the class itself only enforces shape and reachability.

All words at this layer are tuples of symbol ranks.  The typed Word wrappers
live one level up.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .base import Alphabet
from .errors import CapExceeded, StateBlowup
from .graph import LabeledGraph

_STATE_CAP = 10 ** 6


@dataclass(frozen=True)
class FactorialDfa:
    """Partial DFA, start state 0, every state accepting.

    ``trans[q][a]`` is the successor state or -1 when undefined.  Every
    state must be reachable from 0; constructors uphold this.
    """

    alphabet: Alphabet
    trans: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.trans)
        object.__setattr__(self, "trans", rows)
        n = len(rows)
        if n == 0:
            raise ValueError("need at least the start state")
        na = len(self.alphabet)
        for row in rows:
            if len(row) != na:
                raise ValueError("transition row width mismatch")
            for t in row:
                if not (-1 <= t < n):
                    raise ValueError(f"transition target {t} out of range")
        seen = [False] * n
        seen[0] = True
        q = deque([0])
        while q:
            v = q.popleft()
            for t in rows[v]:
                if t != -1 and not seen[t]:
                    seen[t] = True
                    q.append(t)
        if not all(seen):
            raise ValueError("unreachable states in acceptor")

    @property
    def n_states(self) -> int:
        return len(self.trans)

    def state_after(self, ranks, start: int = 0) -> int:
        """End state of the run, or -1 if it falls off."""
        q = start
        for a in ranks:
            q = self.trans[q][a]
            if q == -1:
                return -1
        return q

    def defined(self, ranks, start: int = 0) -> bool:
        return self.state_after(ranks, start) != -1

    def first_failure(self, ranks) -> int | None:
        """Length of the shortest undefined prefix, or None if all defined."""
        q = 0
        for i, a in enumerate(ranks):
            q = self.trans[q][a]
            if q == -1:
                return i + 1
        return None

    def __repr__(self) -> str:
        return f"FactorialDfa({self.n_states} states over {self.alphabet.compact})"


def determinize(g: LabeledGraph, cap: int = _STATE_CAP) -> FactorialDfa:
    """Subset construction from the set of all vertices of ``g``.

    For an essential graph this accepts exactly the finite label words of
    paths, i.e. the language of the presented subshift.  An empty graph
    yields the one-state acceptor of the empty-word-only language.
    """
    na = len(g.alphabet)
    if g.n_vertices == 0:
        return FactorialDfa(g.alphabet, ((-1,) * na,))
    post: list[list[list[int]]] = [[[] for _ in range(na)] for _ in range(g.n_vertices)]
    for s, d, a in g.edges:
        post[s][a].append(d)
    start = frozenset(range(g.n_vertices))
    ids: dict[frozenset, int] = {start: 0}
    order = [start]
    rows: list[list[int]] = []
    i = 0
    while i < len(order):
        cur = order[i]
        row = [-1] * na
        for a in range(na):
            nxt = frozenset(t for v in cur for t in post[v][a])
            if nxt:
                if nxt not in ids:
                    if len(ids) >= cap:
                        raise StateBlowup(f"subset construction passed {cap} states")
                    ids[nxt] = len(order)
                    order.append(nxt)
                row[a] = ids[nxt]
        rows.append(row)
        i += 1
    return FactorialDfa(g.alphabet, tuple(map(tuple, rows)))


def minimize(d: FactorialDfa) -> FactorialDfa:
    """Language-preserving minimization with a canonical state order.

    Moore refinement from the single all-accepting class, then breadth-first
    renumbering from the start state in symbol-rank order.  Two acceptors
    have equal languages iff their minimized forms are identical.
    """
    n = d.n_states
    na = len(d.alphabet)
    cls = [0] * n
    nc = 1
    while True:
        sig: dict[tuple, int] = {}
        new = [0] * n
        for q in range(n):
            key = (cls[q], tuple(cls[t] if t != -1 else -1 for t in d.trans[q]))
            if key not in sig:
                sig[key] = len(sig)
            new[q] = sig[key]
        if len(sig) == nc:
            break
        cls, nc = new, len(sig)
    # quotient transitions (well defined at the fixpoint)
    qtrans = [[-1] * na for _ in range(nc)]
    for q in range(n):
        for a in range(na):
            t = d.trans[q][a]
            if t != -1:
                qtrans[cls[q]][a] = cls[t]
    # canonical numbering: BFS from the start class
    old_of_new: list[int] = [cls[0]]
    new_of_old = {cls[0]: 0}
    i = 0
    while i < len(old_of_new):
        c = old_of_new[i]
        for a in range(na):
            t = qtrans[c][a]
            if t != -1 and t not in new_of_old:
                new_of_old[t] = len(old_of_new)
                old_of_new.append(t)
        i += 1
    rows = tuple(
        tuple(new_of_old[qtrans[c][a]] if qtrans[c][a] != -1 else -1
              for a in range(na))
        for c in old_of_new)
    return FactorialDfa(d.alphabet, rows)


def to_graph(d: FactorialDfa) -> LabeledGraph:
    """The transition structure as a labeled graph (one edge per defined
    transition)."""
    edges = []
    for q, row in enumerate(d.trans):
        for a, t in enumerate(row):
            if t != -1:
                edges.append((q, t, a))
    return LabeledGraph(d.alphabet, d.n_states, tuple(edges))


def word_counts(d: FactorialDfa, n_max: int) -> list[int]:
    """Exact counts of words of each length 0..n_max, as Python ints."""
    vec = [0] * d.n_states
    vec[0] = 1
    counts = [1]
    for _ in range(n_max):
        nxt = [0] * d.n_states
        for q, c in enumerate(vec):
            if c:
                for t in d.trans[q]:
                    if t != -1:
                        nxt[t] += c
        vec = nxt
        counts.append(sum(vec))
    return counts


def count_matrix(d: FactorialDfa) -> list[list[int]]:
    """M[q][t] = number of symbols taking q to t."""
    m = [[0] * d.n_states for _ in range(d.n_states)]
    for q, row in enumerate(d.trans):
        for t in row:
            if t != -1:
                m[q][t] += 1
    return m


def enumerate_ranks(d: FactorialDfa, length: int,
                    start: int = 0) -> Iterator[tuple[int, ...]]:
    """All length-``length`` words readable from ``start``, lexicographic."""
    na = len(d.alphabet)
    word: list[int] = []
    state = [start]

    def rec() -> Iterator[tuple[int, ...]]:
        if len(word) == length:
            yield tuple(word)
            return
        q = state[-1]
        for a in range(na):
            t = d.trans[q][a]
            if t != -1:
                word.append(a)
                state.append(t)
                yield from rec()
                word.pop()
                state.pop()

    yield from rec()


def shortest_difference(d1: FactorialDfa,
                        d2: FactorialDfa) -> tuple[tuple[int, ...], int] | None:
    """Shortest word in exactly one language, with the side (1 or 2) it
    belongs to; None when the languages are equal.  Ties break toward the
    lexicographically least word."""
    na = len(d1.alphabet)
    start = (0, 0)
    seen = {start}
    queue: deque[tuple[tuple[int, int], tuple[int, ...]]] = deque([(start, ())])
    while queue:
        (q1, q2), w = queue.popleft()
        for a in range(na):
            t1 = d1.trans[q1][a] if q1 != -1 else -1
            t2 = d2.trans[q2][a] if q2 != -1 else -1
            if t1 == -1 and t2 == -1:
                continue
            nw = w + (a,)
            if t1 == -1:
                return nw, 2
            if t2 == -1:
                return nw, 1
            if (t1, t2) not in seen:
                seen.add((t1, t2))
                queue.append(((t1, t2), nw))
    return None


def shortest_missing(d1: FactorialDfa,
                     d2: FactorialDfa) -> tuple[int, ...] | None:
    """Shortest word in L(d1) but not in L(d2), or None if L(d1) ⊆ L(d2)."""
    na = len(d1.alphabet)
    start = (0, 0)
    seen = {start}
    queue: deque[tuple[tuple[int, int], tuple[int, ...]]] = deque([(start, ())])
    while queue:
        (q1, q2), w = queue.popleft()
        for a in range(na):
            t1 = d1.trans[q1][a]
            if t1 == -1:
                continue
            t2 = d2.trans[q2][a] if q2 != -1 else -1
            nw = w + (a,)
            if t2 == -1:
                return nw
            if (t1, t2) not in seen:
                seen.add((t1, t2))
                queue.append(((t1, t2), nw))
    return None


def post_set(trans, states: frozenset, a: int) -> frozenset:
    """Image of a state set under one symbol of a partial transition table."""
    return frozenset(t for q in states if (t := trans[q][a]) != -1)


def shortest_sync(trans, states, n_symbols: int) -> tuple[tuple[int, ...], int] | None:
    """Shortest word collapsing ``states`` to a single state under the
    (possibly restricted) partial table ``trans``.

    Among equally short collapsing words the lexicographically greatest is
    returned, so the choice is deterministic.  Words whose image is empty
    are not collapsing (they are unreadable from every state).  Returns
    (word_ranks, final_state) or None when no collapsing word exists.
    """
    start = frozenset(states)
    if not start:
        return None
    if len(start) == 1:
        return (), next(iter(start))
    seen = {start}
    queue: deque[tuple[frozenset, tuple[int, ...]]] = deque([(start, ())])
    while queue:
        cur, w = queue.popleft()
        for a in range(n_symbols - 1, -1, -1):
            nxt = post_set(trans, cur, a)
            if not nxt or nxt in seen:
                continue
            nw = w + (a,)
            if len(nxt) == 1:
                return nw, next(iter(nxt))
            seen.add(nxt)
            queue.append((nxt, nw))
    return None


def backward_subsets(d: FactorialDfa,
                     cap: int = _STATE_CAP) -> list[tuple[frozenset, tuple[int, ...]]]:
    """All sets of the form {q : word readable from q}, with a shortest
    representative word for each.

    Starts from the full state set (the empty word) and closes under
    per-symbol preimage: the set for a word a·v is the a-preimage of the
    set for v.  Every set in the family is nonempty and its representative
    word is in the language (the family's sets are exactly the readable
    words' state sets, and readable-from-somewhere means in the language
    for a factor-closed acceptor).
    """
    na = len(d.alphabet)
    pre: list[list[list[int]]] = [[[] for _ in range(na)] for _ in range(d.n_states)]
    for q, row in enumerate(d.trans):
        for a, t in enumerate(row):
            if t != -1:
                pre[t][a].append(q)
    full = frozenset(range(d.n_states))
    out: list[tuple[frozenset, tuple[int, ...]]] = [(full, ())]
    seen = {full}
    i = 0
    while i < len(out):
        cur, v = out[i]
        for a in range(na):
            prev = frozenset(q for t in cur for q in pre[t][a])
            if prev and prev not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"backward subset family passed {cap} sets")
                seen.add(prev)
                out.append((prev, (a,) + v))
        i += 1
    return out
