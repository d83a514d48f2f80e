"""Irreducibility, mixing, strong irreducibility, gap certificates, gluing.

The decision procedures run on two canonical objects cached by Shift: the
minimal acceptor (for language-level questions: does some word connect u
to v) and the right-resolving reduced presentation (for structural
questions: synchronizing words, the synchronized component, its diameter
and cycle gcd).

Uniform-gap questions quantify over infinitely many word pairs and gap
lengths; both quantifiers are made finite here.  Word pairs matter only
through (state after u, set of states reading v), and the per-gap-length
reachability data evolves through a finite space, so it is eventually
periodic; detecting the cycle turns "for all N >= N0" into an exact check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .base import ConfigurationWindow, Decision, Word
from .dfa import FactorialDfa, backward_subsets, shortest_sync, to_graph
from .errors import (CapExceeded, EmptyShift, NoSyncWord, NotMixing,
                     SeparationTooSmall, WordNotInLanguage)
from .graph import (LabeledGraph, cycle_gcd, directed_diameter,
                    strongly_connected_components, subgraph)
from .shift import Shift

_GAP_CAP = 256


@dataclass(frozen=True)
class SyncWitness:
    """A word all of whose runs in the minimal follower automaton end at
    one state.

    ``vertex`` is that state (None only in the empty-shift degenerate
    case); ``length`` equals ``len(word)``.  The empty word is a valid
    witness when the automaton has a single state.  The same focusing
    property then holds in the synchronized cover, the canonical
    deterministic presentation cut out by the witness.
    """

    word: Word
    vertex: int | None
    length: int


@dataclass(frozen=True)
class SiCertificate:
    """Constructive uniform-gap certificate.

    ``n0`` is the least gap length from which the sync word can always be
    bridged to itself; ``L0 = n0 + len(sync word)``; ``D`` is the directed
    diameter of the synchronized strongly connected component; any gap of
    length at least ``N0_bound = L0 + 2*D`` can be filled between arbitrary
    language words.  ``N0_min`` is the exact least uniform gap when it has
    been computed (see :func:`minimal_gap`).
    """

    sync: SyncWitness
    n0: int
    L0: int
    D: int
    N0_bound: int
    N0_min: int | None = None
    note: str = ""

    def to_kv(self) -> list[tuple[str, str]]:
        out = [("sync_word", self.sync.word.text),
               ("l0", str(self.sync.length)),
               ("n0", str(self.n0)),
               ("L0", str(self.L0)),
               ("D", str(self.D)),
               ("N0_bound", str(self.N0_bound))]
        if self.N0_min is not None:
            out.append(("N0_min", str(self.N0_min)))
        return out


@dataclass(frozen=True)
class MixingReport:
    irreducible: bool
    cycle_gcd: int
    mixing: bool
    witness: object = None
    note: str = ""


@dataclass(frozen=True)
class GlueRequest:
    """Finitely many pinned windows to be realized in one language word.

    ``parts`` are disjoint windows, sorted by position after construction;
    ``separation`` records the gap bound the caller is relying on (gluing
    is guaranteed to succeed when all gaps are at least a valid certificate
    bound, and is attempted regardless).
    """

    parts: tuple[ConfigurationWindow, ...]
    separation: int

    def __post_init__(self):
        parts = tuple(sorted(self.parts, key=lambda p: p.start))
        if not parts:
            raise ValueError("need at least one part")
        for a, b in zip(parts, parts[1:]):
            if b.start < a.stop:
                raise ValueError(
                    f"parts overlap: [{a.start},{a.stop}) and [{b.start},{b.stop})")
        object.__setattr__(self, "parts", parts)


# ---------------------------------------------------------------- helpers

def _shortest_words_to_states(d: FactorialDfa) -> list[tuple[int, ...]]:
    """Lexicographically least shortest word reaching each state from 0."""
    na = len(d.alphabet)
    words: list[tuple[int, ...] | None] = [None] * d.n_states
    words[0] = ()
    frontier = [0]
    while frontier:
        nxt = []
        for q in frontier:
            for a in range(na):
                t = d.trans[q][a]
                if t != -1 and words[t] is None:
                    words[t] = words[q] + (a,)
                    nxt.append(t)
        frontier = nxt
    return words  # type: ignore[return-value]


def _post_all_masks(d: FactorialDfa) -> list[int]:
    """mask[q] = bitmask of one-step successors of q (any symbol)."""
    out = [0] * d.n_states
    for q, row in enumerate(d.trans):
        m = 0
        for t in row:
            if t != -1:
                m |= 1 << t
        out[q] = m
    return out


def _step_mask(mask: int, post_all: list[int]) -> int:
    out = 0
    m = mask
    while m:
        lsb = m & -m
        out |= post_all[lsb.bit_length() - 1]
        m ^= lsb
    return out


def _reading_states_mask(d: FactorialDfa, ranks) -> int:
    """Bitmask of states from which the whole word is readable."""
    mask = 0
    for q in range(d.n_states):
        if d.defined(ranks, start=q):
            mask |= 1 << q
    return mask


def _pair_gap_floor(d: FactorialDfa, s: int, r_mask: int,
                    cap: int) -> tuple[int | None, int | None]:
    """Least n0 such that the pair (state s, reading-set r_mask) can be
    bridged at every gap length >= n0.

    Returns (n0, None) on success, (None, failing_N) when bridging fails
    at arbitrarily large N (the failure repeats with the cycle).  Raises
    CapExceeded when the reachable-set evolution does not close within cap
    steps or n0 would exceed cap.
    """
    post_all = _post_all_masks(d)
    mask = 1 << s
    seen: dict[int, int] = {}
    history: list[int] = []
    while mask not in seen:
        if len(history) > cap:
            raise CapExceeded(f"gap evolution did not close within {cap} steps")
        seen[mask] = len(history)
        history.append(mask)
        mask = _step_mask(mask, post_all)
    pre = seen[mask]
    ok = [bool(m & r_mask) for m in history]
    for n in range(pre, len(history)):
        if not ok[n]:
            return None, n
    n0 = pre
    while n0 > 0 and ok[n0 - 1]:
        n0 -= 1
    if n0 > cap:
        raise CapExceeded(f"least gap {n0} exceeds cap {cap}")
    return n0, None


def _irreducibility_data(x: Shift):
    """Reach closure, backward family, and shortest state labels."""
    d = x.acceptor
    post_all = _post_all_masks(d)
    reach = []  # reflexive-transitive closure, bitmask per state
    for s in range(d.n_states):
        m = 1 << s
        while True:
            nm = m | _step_mask(m, post_all)
            if nm == m:
                break
            m = nm
        reach.append(m)
    fam = [(sum(1 << q for q in fs), v) for fs, v in backward_subsets(d)]
    return d, reach, fam


# ------------------------------------------------------------ decisions

def is_irreducible(x: Shift) -> Decision:
    """Can every ordered pair of language words be joined: for all u, v is
    there some w with uwv in the language?

    The pair (u, v) matters only through (state after u, set of states
    reading v), so the check quantifies over states and the backward
    subset family.  On failure the witness is a concrete unjoinable pair.
    """
    if x.is_empty:
        return Decision(True, None, "language",
                        note="empty shift: holds vacuously")
    d, reach, fam = _irreducibility_data(x)
    labels = _shortest_words_to_states(d)
    for s in range(d.n_states):
        for r_mask, v in fam:
            if not reach[s] & r_mask:
                u = x.alphabet.word_from_ranks(labels[s])
                return Decision(False, (u, x.alphabet.word_from_ranks(v)),
                                "language",
                                note="no word joins u to v")
    return Decision(True, None, "language")


def synchronizing_word(x: Shift) -> SyncWitness:
    """Shortest word focusing the minimal follower automaton to one state.

    Runs that die along the way drop out; the witness requires only that
    all surviving runs end together.  Ties break toward the
    lexicographically greatest word.  Every irreducible sofic shift admits
    one; NoSyncWord reports exhaustion otherwise."""
    if x.is_empty:
        raise NoSyncWord("the empty shift has no automaton to synchronize")
    d = x.acceptor
    res = shortest_sync(d.trans, range(d.n_states), len(x.alphabet))
    if res is None:
        return _sync_fail(x)
    ranks, q = res
    return SyncWitness(x.alphabet.word_from_ranks(ranks), q, len(ranks))


def _sync_fail(x: Shift):
    raise NoSyncWord(
        "no focusing word exists; the shift is not irreducible "
        f"(irreducible: {is_irreducible(x).verdict})")


def synchronized_cover(x: Shift) -> tuple[LabeledGraph, list[int], SyncWitness]:
    """The strongly connected component of the sync target, as a graph.

    Returns (cover, original automaton state ids, sync witness recomputed
    inside the cover).  For an irreducible shift the cover presents the
    same language, strongly connected and right-resolving; diameters and
    cycle gcds are measured on it.
    """
    w = synchronizing_word(x)
    g = to_graph(x.acceptor)
    comps = strongly_connected_components(g)
    comp = next(c for c in comps if w.vertex in c)
    cover, old = subgraph(g, comp)
    rows = [[-1] * len(x.alphabet) for _ in range(cover.n_vertices)]
    for s, t, a in cover.edges:
        rows[s][a] = t
    res = shortest_sync(rows, range(cover.n_vertices), len(x.alphabet))
    if res is None:
        return _sync_fail(x)
    ranks, q_local = res
    inner = SyncWitness(x.alphabet.word_from_ranks(ranks), old[q_local],
                        len(ranks))
    return cover, old, inner


def is_mixing(x: Shift) -> MixingReport:
    """Irreducible with aperiodic synchronized component.

    ``cycle_gcd`` is the gcd of cycle lengths through the sync target's
    strongly connected component; mixing holds iff the shift is irreducible
    and that gcd is 1.
    """
    if x.is_empty:
        return MixingReport(True, 0, True,
                            note="empty shift: holds vacuously")
    irr = is_irreducible(x)
    try:
        cover, old, _ = synchronized_cover(x)
        g = cycle_gcd(cover)
    except NoSyncWord:
        return MixingReport(False, 0, False, witness=irr.witness,
                            note="no synchronizing word")
    if not irr.verdict:
        return MixingReport(False, g, False, witness=irr.witness,
                            note="not irreducible")
    if g == 1:
        return MixingReport(True, 1, True)
    classes = _period_classes(cover, old, g)
    return MixingReport(True, g, False, witness=classes,
                        note=f"period {g}")

def _period_classes(cover: LabeledGraph, old: list[int], g: int) -> list[list[int]]:
    """Vertices of the cover split by path-length residue mod the period."""
    from collections import deque
    adj = cover.out_map()
    lvl = [-1] * cover.n_vertices
    lvl[0] = 0
    q = deque([0])
    while q:
        v = q.popleft()
        for w, _ in adj[v]:
            if lvl[w] == -1:
                lvl[w] = lvl[v] + 1
                q.append(w)
    classes: list[list[int]] = [[] for _ in range(g)]
    for v in range(cover.n_vertices):
        classes[lvl[v] % g].append(old[v])
    return classes


def si_certificate(x: Shift) -> SiCertificate:
    """Uniform-gap certificate from the sync word, its self-gap floor, and
    the cover diameter.  Requires a mixing shift."""
    if x.is_empty:
        return SiCertificate(SyncWitness(x.alphabet.word(""), None, 0),
                             0, 0, 0, 0, note="empty shift: degenerate")
    rep = is_mixing(x)
    if not rep.mixing:
        raise NotMixing(f"not strongly irreducible: {rep.note}")
    cover, old, sync = synchronized_cover(x)
    d = x.acceptor
    ranks = sync.word.ranks()
    s = d.state_after(ranks)
    if s == -1:
        raise NoSyncWord("sync word left the language; presentation bug")
    r_mask = _reading_states_mask(d, ranks)
    n0, bad = _pair_gap_floor(d, s, r_mask, _GAP_CAP)
    if n0 is None:
        raise NotMixing(f"sync word cannot be self-bridged at gap {bad}")
    l0 = sync.length
    diam = directed_diameter(cover)
    note = ""
    if l0 == 0:
        note = "single-vertex cover: empty sync word convention"
    return SiCertificate(sync, n0, n0 + l0, diam, n0 + l0 + 2 * diam,
                         note=note)


def is_strongly_irreducible(x: Shift) -> Decision:
    """Uniform-gap irreducibility; equivalent to mixing for these shifts,
    and reported with the constructive certificate when true."""
    if x.is_empty:
        return Decision(True, si_certificate(x), "language",
                        note="empty shift: holds vacuously")
    rep = is_mixing(x)
    if rep.mixing:
        return Decision(True, si_certificate(x), "language")
    return Decision(False, rep, "language", note=rep.note or "not mixing")


def minimal_gap(x: Shift, search_cap: int = _GAP_CAP) -> int:
    """Exact least N0 such that every pair of language words can be bridged
    by a word of every length >= N0.

    All pairs are covered by quantifying over (state after u) x (backward
    reading set of v); the joint per-state reachability data is evolved
    until it cycles, which decides the tail quantifier exactly.  Raises
    NotMixing when no uniform gap exists, CapExceeded past the cap.
    """
    if x.is_empty:
        raise EmptyShift("no uniform gap: the empty shift admits no fills")
    d = x.acceptor
    post_all = _post_all_masks(d)
    fam = [(sum(1 << q for q in fs), v) for fs, v in backward_subsets(d)]
    labels = _shortest_words_to_states(d)
    n = d.n_states

    rows = tuple(1 << s for s in range(n))
    seen: dict[tuple, int] = {}
    history: list[tuple] = []
    hard_cap = 4 * search_cap + 64
    while rows not in seen:
        if len(history) > hard_cap:
            raise CapExceeded(
                f"joint gap evolution did not close within {hard_cap} steps")
        seen[rows] = len(history)
        history.append(rows)
        rows = tuple(_step_mask(m, post_all) for m in rows)
    pre = seen[rows]

    def failing(step: tuple) -> tuple[int, tuple[int, ...]] | None:
        for s in range(n):
            for r_mask, v in fam:
                if not step[s] & r_mask:
                    return s, v
        return None

    ok = [failing(h) for h in history]
    for t in range(pre, len(history)):
        if ok[t] is not None:
            s, v = ok[t]
            u = x.alphabet.word_from_ranks(labels[s])
            raise NotMixing(
                f"no uniform gap: u={u.text!r} cannot reach "
                f"v={x.alphabet.word_from_ranks(v).text!r} at gap {t} "
                f"(recurs with period {len(history) - pre})")
    n0 = pre
    while n0 > 0 and ok[n0 - 1] is None:
        n0 -= 1
    if n0 > search_cap:
        raise CapExceeded(f"least uniform gap {n0} exceeds cap {search_cap}")
    return n0


def gap_witness(x: Shift, u, v, gap: int) -> Word | None:
    """A word w of length ``gap`` with uwv in the language, or None.

    Found by layered reachability between the state after u and the states
    reading v; among witnesses the lexicographically least is returned.
    """
    if gap < 0:
        raise ValueError("gap must be >= 0")
    u = x.alphabet.word(u)
    v = x.alphabet.word(v)
    d = x.acceptor
    s = d.state_after(u.ranks())
    if s == -1:
        raise WordNotInLanguage(f"{u.text!r} is not in the language")
    v_ranks = v.ranks()
    if not d.defined(v_ranks):
        raise WordNotInLanguage(f"{v.text!r} is not in the language")
    r_mask = _reading_states_mask(d, v_ranks)
    # backward feasibility layers: states that can still reach r_mask
    pre_all = [[] for _ in range(d.n_states)]
    for q, row in enumerate(d.trans):
        for a, t in enumerate(row):
            if t != -1:
                pre_all[t].append(q)
    feasible = [0] * (gap + 1)
    feasible[gap] = r_mask
    for i in range(gap - 1, -1, -1):
        m = 0
        cur = feasible[i + 1]
        while cur:
            lsb = cur & -cur
            for q in pre_all[lsb.bit_length() - 1]:
                m |= 1 << q
            cur ^= lsb
        feasible[i] = m
    if not feasible[0] & (1 << s):
        return None
    out = []
    q = s
    for i in range(gap):
        for a in range(len(x.alphabet)):
            t = d.trans[q][a]
            if t != -1 and feasible[i + 1] & (1 << t):
                out.append(a)
                q = t
                break
    return x.alphabet.word_from_ranks(out)


def glue(x: Shift, req: GlueRequest) -> ConfigurationWindow:
    """Realize all pinned windows inside a single language word.

    Fills the gaps left to right, each time bridging the whole accumulated
    prefix to the next part, so the invariant "accumulated word is in the
    language" holds throughout.  With gaps at least a valid certificate
    bound the fills always exist; otherwise SeparationTooSmall reports the
    first gap that cannot be realized.
    """
    parts = req.parts
    acc = x.alphabet.word(parts[0].word)
    if not x.contains_word(acc):
        raise WordNotInLanguage(f"part at {parts[0].start}: {acc.text!r}")
    end = parts[0].stop
    for part in parts[1:]:
        w = x.alphabet.word(part.word)
        if not x.contains_word(w):
            raise WordNotInLanguage(f"part at {part.start}: {w.text!r}")
        gap = part.start - end
        fill = gap_witness(x, acc, w, gap)
        if fill is None:
            raise SeparationTooSmall(
                f"no fill of length {gap} between position {end} and "
                f"{part.start} (certificate-sized gaps always fill)")
        acc = acc + fill + w
        end = part.stop
    return ConfigurationWindow(parts[0].start, acc)
