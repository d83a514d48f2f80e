"""Exception types raised across the package.

Every error that callers are expected to catch derives from
:class:`SoficlabError`, so ``except SoficlabError`` at a CLI or notebook
boundary is always safe.  Programming errors (bad types, out-of-range
indices) stay as the builtin exceptions.
"""

from __future__ import annotations


class SoficlabError(Exception):
    """Base class for all package-specific errors."""


class AlphabetMismatch(SoficlabError):
    """A symbol or object from one alphabet was used with another."""


class WordTooShort(SoficlabError):
    """A word was shorter than the operation's minimum length."""


class WordNotInLanguage(SoficlabError):
    """A word outside L(X) was passed where a legal block is required."""


class NotSubshift(SoficlabError):
    """An object failed to define a subshift (e.g. empty after essentialization
    where a nonempty shift was required)."""


class EmptyShift(SoficlabError):
    """Operation undefined on the empty shift."""


class NotMixing(SoficlabError):
    """A mixing-only operation was applied to a non-mixing shift."""


class NoSyncWord(SoficlabError):
    """No synchronizing word exists (shift is not sofic-irreducible in the
    required sense, or the presentation cannot be synchronized)."""


class CapExceeded(SoficlabError):
    """A certified search passed its cap without reaching a verdict."""


class StateBlowup(SoficlabError):
    """Subset construction exceeded the state cap."""


class SeparationTooSmall(SoficlabError):
    """Gluing request has a gap too small to fill for this shift."""


class WindowTooSmall(SoficlabError):
    """Requested block/window length cannot express the constraint."""


class NotIntoTarget(SoficlabError):
    """A map's image leaves the declared target shift."""


class NotEndomorphism(SoficlabError):
    """A cellular automaton does not map the shift into itself."""


class CertificateMissing(SoficlabError):
    """An operation needing a gap certificate ran on a shift without one."""


class TableTooLarge(SoficlabError):
    """Local-rule table size |A|^(width) exceeds the construction cap."""


class ParseError(SoficlabError):
    """Malformed ``.shift`` or ``.ca`` input.

    Parameters
    ----------
    message : str
        Human-readable description.
    lineno : int or None
        1-based line number in the source text, when known.
    """

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
