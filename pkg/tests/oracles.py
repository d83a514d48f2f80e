"""Reference implementations used to check the package's answers.

Everything here favors transparency over speed: explicit word enumeration,
per-pair set reachability, direct preimage search.  None of it shares
algorithmic machinery with the code under test (which uses joint bitmask
evolution, product automata, and matrix counting).
"""

from __future__ import annotations

import itertools


def words_up_to(x, max_len):
    """All language words of length 0..max_len, by prefix extension."""
    syms = x.alphabet.symbols
    out = [[""]]
    for _ in range(max_len):
        out.append([w + s for w in out[-1] for s in syms
                    if x.contains_word(w + s)])
    return [w for tier in out for w in tier]


def block_counts_by_extension(x, n_max):
    syms = x.alphabet.symbols
    words = [""]
    counts = [1]
    for _ in range(n_max):
        words = [w + s for w in words for s in syms
                 if x.contains_word(w + s)]
        counts.append(len(words))
    return counts


def fill_exists(x, u, v, n):
    """Direct enumeration: some w of length n with u+w+v in the language."""
    syms = x.alphabet.symbols
    return any(x.contains_word(u + "".join(w) + v)
               for w in itertools.product(syms, repeat=n))


def _layer_feasible(x, u, v, probe):
    """feasible[n] for n = 0..probe via explicit state-set layers.

    Independent of the package's gap machinery: per-pair, forward sets
    only, no cycle detection.
    """
    d = x.acceptor
    nsym = len(x.alphabet)
    q = 0
    for a in x.word(u).ranks():
        q = d.trans[q][a]
        if q == -1:
            raise ValueError(f"{u!r} not in the language")
    readers = set()
    vranks = x.word(v).ranks()
    for s in range(d.n_states):
        cur = s
        for a in vranks:
            cur = d.trans[cur][a]
            if cur == -1:
                break
        else:
            readers.add(s)
    layer = {q}
    feasible = []
    for _ in range(probe + 1):
        feasible.append(bool(layer & readers))
        layer = {d.trans[s][a] for s in layer for a in range(nsym)} - {-1}
    return feasible


def _end_state(x, u):
    q = 0
    for a in x.word(u).ranks():
        q = x.acceptor.trans[q][a]
        if q == -1:
            raise ValueError(f"{u!r} not in the language")
    return q


def _reader_states(x, v):
    d = x.acceptor
    out = set()
    vranks = x.word(v).ranks()
    for s in range(d.n_states):
        cur = s
        for a in vranks:
            cur = d.trans[cur][a]
            if cur == -1:
                break
        else:
            out.add(s)
    return frozenset(out)


def minimal_gap_bruteforce(x, max_word_len, probe=None):
    """Largest per-pair least gap over language words of bounded length.

    Per pair the fill lengths are scanned forward with plain state sets, no
    cycle detection.  The scan depends on u only through its end state and
    on v only through the set of states that can read it, so those are
    memoized; the quantification is still over every word pair.  Returns
    (gap, (u, v)); raises AssertionError when some pair has no stable gap
    within the probe horizon (not mixing, or the probe is too short).
    """
    d = x.acceptor
    nsym = len(x.alphabet)
    if probe is None:
        probe = 2 * d.n_states + 8
    pool = words_up_to(x, max_word_len)
    readers_of = {v: _reader_states(x, v) for v in pool}
    memo: dict[tuple, int] = {}
    best, best_pair = 0, ("", "")
    for u in pool:
        qu = _end_state(x, u)
        for v in pool:
            readers = readers_of[v]
            key = (qu, readers)
            n = memo.get(key)
            if n is None:
                layer = {qu}
                feas = []
                for _ in range(probe + 1):
                    feas.append(bool(layer & readers))
                    layer = {d.trans[s][a] for s in layer
                             for a in range(nsym)} - {-1}
                assert feas[-1] and feas[-2], \
                    f"pair ({u!r}, {v!r}) still failing at the probe horizon"
                n = probe
                while n > 0 and feas[n - 1]:
                    n -= 1
                assert all(feas[n:])
                memo[key] = n
            if n > best:
                best, best_pair = n, (u, v)
    return best, best_pair


def gap_failure_pair(x, max_word_len, probe=None):
    """Some pair of language words with no stable gap, if one exists."""
    if probe is None:
        probe = 2 * x.acceptor.n_states + 8
    pool = words_up_to(x, max_word_len)
    for u in pool:
        for v in pool:
            feas = _layer_feasible(x, u, v, probe)
            if not (feas[-1] and feas[-2]):
                return u, v
    return None


def missing_preimage(t, x, y, max_len):
    """First target word (BFS order) with no domain preimage, else None.

    Checks every word of y's language up to max_len against all candidate
    domain words of the stretched length.
    """
    width = t.width
    for n in range(max_len + 1):
        for w in sorted(y.blocks(n), key=lambda b: b.ranks()):
            found = False
            for u in x.blocks(n + width - 1):
                if t.apply(u).ranks() == w.ranks():
                    found = True
                    break
            if not found:
                return w
    return None
