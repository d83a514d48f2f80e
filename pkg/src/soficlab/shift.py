"""Subshifts of the integer line presented by labeled graphs.

A :class:`Shift` is built either from a finite set of forbidden words (a
subshift of finite type) or from an arbitrary labeled graph (a sofic
subshift).  Construction eagerly canonicalizes: an essential presentation,
a right-resolving reduced presentation, and a minimal acceptor of the block
language are all cached on the instance, and every later query runs against
these.  Instances are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import dfa as _dfa
from .base import Alphabet, CellularAutomaton, Decision, Word
from .errors import AlphabetMismatch, EmptyShift, StateBlowup
from .graph import (LabeledGraph, block_name, essentialize, follower_reduce,
                    path_graph)

_STATE_CAP = 10 ** 6


@dataclass(frozen=True)
class SftSpec:
    """Forbidden-word description of a subshift of finite type.

    ``window`` is the length of the longest forbidden word (at least 1 even
    when nothing is forbidden); blocks of that length determine membership.
    """

    alphabet: Alphabet
    forbidden: tuple[Word, ...]

    def __post_init__(self):
        seen = set()
        canon = []
        for w in self.forbidden:
            w = self.alphabet.word(w)
            if len(w) == 0:
                raise ValueError("forbidden words must be nonempty")
            if w.letters not in seen:
                seen.add(w.letters)
                canon.append(w)
        canon.sort(key=lambda w: (len(w), w.ranks()))
        object.__setattr__(self, "forbidden", tuple(canon))

    @property
    def window(self) -> int:
        return max((len(w) for w in self.forbidden), default=1)


def sft_to_graph(spec: SftSpec, cap: int = _STATE_CAP) -> LabeledGraph:
    """Vertex-per-block presentation of the SFT.

    Vertices are the words of length ``window - 1`` containing no forbidden
    factor; an edge ``u -> v`` labeled ``a`` exists when ``v`` is ``u·a``
    minus its first symbol and no forbidden word is a suffix of ``u·a``.
    The result presents exactly the SFT once essentialized, and is
    right-resolving by construction.
    """
    m = spec.window
    na = len(spec.alphabet)
    bad = [w.ranks() for w in spec.forbidden]

    def blocked(word: tuple[int, ...]) -> bool:
        # appending to an already-clean prefix can only introduce a
        # forbidden factor as a suffix
        return any(len(f) <= len(word) and word[len(word) - len(f):] == f
                   for f in bad)

    verts: list[tuple[int, ...]] = [()]
    for _ in range(m - 1):
        verts = [w + (a,) for w in verts for a in range(na)
                 if not blocked(w + (a,))]
        if len(verts) > cap:
            raise StateBlowup(f"SFT presentation exceeds {cap} vertices")
    vid = {w: i for i, w in enumerate(verts)}
    edges = []
    for w in verts:
        for a in range(na):
            ext = w + (a,)
            if not blocked(ext):
                edges.append((vid[w], vid[ext[1:] if m > 1 else ()], a))
    names = tuple(block_name(spec.alphabet, w) if w else "^" for w in verts)
    return LabeledGraph(spec.alphabet, len(verts), tuple(edges), names)


def determinize_minimize(g: LabeledGraph, cap: int = _STATE_CAP) -> LabeledGraph:
    """Right-resolving reduced presentation of the same bi-infinite language.

    Already right-resolving graphs skip the subset construction, so a
    reduced presentation maps to itself (the operation is idempotent).
    Vertices with equal follower languages are merged.
    """
    ge, _ = essentialize(g)
    if ge.n_vertices == 0:
        raise EmptyShift("graph carries no bi-infinite path")
    if not ge.is_right_resolving():
        sub = _dfa.to_graph(_dfa.determinize(ge, cap))
        ge, _ = essentialize(sub)
    reduced, _ = follower_reduce(ge)
    return reduced


class Shift:
    """A subshift over the integers, canonicalized at construction.

    Attributes
    ----------
    alphabet : Alphabet
    kind : str
        ``"sft"`` when built from forbidden words (or a recoding of such),
        ``"sofic"`` when built from an arbitrary labeled graph.
    origin : SftSpec or LabeledGraph
        The description the shift was built from.
    essential : LabeledGraph
        Essential presentation.  Empty exactly when the shift is empty.
    deterministic : LabeledGraph
        Right-resolving reduced presentation (empty for the empty shift).
    acceptor : FactorialDfa
        Minimal acceptor of the block language, canonical form.
    window : int or None
        For ``"sft"`` kind: a length w such that vertices of ``essential``
        correspond to allowed (w-1)-blocks, so each point has a unique
        presenting path.  None for sofic-kind shifts.
    """

    __slots__ = ("alphabet", "kind", "origin", "essential", "deterministic",
                 "acceptor", "window")

    def __init__(self, origin, kind: str, essential: LabeledGraph,
                 window: int | None):
        if kind not in ("sft", "sofic"):
            raise ValueError(f"bad kind {kind!r}")
        self.alphabet = essential.alphabet
        self.kind = kind
        self.origin = origin
        ge, _ = essentialize(essential)
        self.essential = ge
        if ge.n_vertices == 0:
            self.deterministic = LabeledGraph(self.alphabet, 0, ())
            self.acceptor = _dfa.FactorialDfa(
                self.alphabet, ((-1,) * len(self.alphabet),))
        else:
            self.deterministic = determinize_minimize(ge)
            self.acceptor = _dfa.minimize(_dfa.determinize(self.deterministic))
        self.window = window

    @classmethod
    def from_forbidden(cls, alphabet: Alphabet, forbidden=()) -> "Shift":
        """SFT over ``alphabet`` avoiding every word in ``forbidden``."""
        spec = SftSpec(alphabet, tuple(alphabet.word(w) for w in forbidden))
        return cls(spec, "sft", sft_to_graph(spec), spec.window)

    @classmethod
    def from_graph(cls, g: LabeledGraph) -> "Shift":
        """Sofic shift presented by the labeled graph ``g``."""
        return cls(g, "sofic", g, None)

    @property
    def is_empty(self) -> bool:
        return self.essential.n_vertices == 0

    def word(self, letters) -> Word:
        return self.alphabet.word(letters)

    def contains_word(self, w) -> bool:
        """True iff ``w`` occurs in some point of the shift."""
        return self.acceptor.defined(self.alphabet.word(w).ranks())

    def blocks(self, n: int) -> set[Word]:
        """The set of length-``n`` words of the language (n = 0 gives the
        empty word alone, even for the empty shift)."""
        if n < 0:
            raise ValueError("n must be >= 0")
        return {self.alphabet.word_from_ranks(r)
                for r in _dfa.enumerate_ranks(self.acceptor, n)}

    def __repr__(self) -> str:
        return (f"Shift({self.kind} over {self.alphabet.compact}, "
                f"{self.essential.n_vertices} essential vertices)")


def equal_shifts(x: Shift, y: Shift) -> Decision:
    """Language equality, with a shortest distinguishing word on failure.

    Two routes are run and must agree: canonical minimal acceptors compared
    for identity, and a product-automaton search for a shortest word in the
    symmetric difference.  The witness carries a note naming the side that
    contains it.
    """
    if x.alphabet != y.alphabet:
        raise AlphabetMismatch(
            f"cannot compare shifts over {x.alphabet.compact} and {y.alphabet.compact}")
    diff = _dfa.shortest_difference(x.acceptor, y.acceptor)
    canon_equal = x.acceptor.trans == y.acceptor.trans
    if canon_equal != (diff is None):
        raise RuntimeError("canonical acceptor comparison and product search disagree")
    if diff is None:
        return Decision(True, None, "language")
    ranks, side = diff
    w = x.alphabet.word_from_ranks(ranks)
    return Decision(False, w, "language",
                    note=f"word occurs only in the {'first' if side == 1 else 'second'} shift")


def language_included(x: Shift, y: Shift) -> Decision:
    """Is every block of ``x`` a block of ``y``?  On failure the witness is
    a shortest word of ``x`` missing from ``y``."""
    if x.alphabet != y.alphabet:
        raise AlphabetMismatch(
            f"cannot compare shifts over {x.alphabet.compact} and {y.alphabet.compact}")
    missing = _dfa.shortest_missing(x.acceptor, y.acceptor)
    if missing is None:
        return Decision(True, None, "language")
    return Decision(False, x.alphabet.word_from_ranks(missing), "language",
                    note="occurs in the first shift only")


def higher_block(x: Shift, k: int) -> tuple[Shift, CellularAutomaton, CellularAutomaton]:
    """Recode by overlapping k-blocks.

    Returns ``(y, code, decode)`` where ``y`` is the shift over the alphabet
    of allowed k-blocks, ``code`` reads x-windows of length k (memory
    ``[0, k-1]``) onto block symbols, and ``decode`` is the one-symbol map
    back onto first letters.  On the recoded shift the two maps invert each
    other, so the recoding is a conjugacy.

    The code's rule table is total: windows that are not allowed blocks of
    ``x`` (which never occur in points of ``x``) map to block symbol 0.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if x.is_empty:
        raise EmptyShift("cannot recode the empty shift")
    pg, blocks = path_graph(x.essential, k)
    window = None
    if x.kind == "sft":
        window = x.window if k == 1 else max(x.window, 2)
    y = Shift(pg, x.kind, pg, window)
    brank = {b: i for i, b in enumerate(blocks)}

    def encode(win: tuple[str, ...]) -> str:
        r = tuple(x.alphabet.index(s) for s in win)
        return y.alphabet.symbols[brank.get(r, 0)]

    code = CellularAutomaton.from_rule(x.alphabet, y.alphabet, 0, k - 1, encode)
    decode = CellularAutomaton.from_rule(
        y.alphabet, x.alphabet, 0, 0,
        lambda t: x.alphabet.symbols[blocks[y.alphabet.index(t[0])][0]])
    return y, code, decode
