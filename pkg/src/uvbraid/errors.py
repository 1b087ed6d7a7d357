"""Exception hierarchy shared by the engine and the CLI."""


class UVBError(Exception):
    """Base class for all errors raised by uvbraid."""


class ParseError(UVBError, ValueError):
    """Malformed textual input (braid words, permutations, free-group words)."""


class WordTooLongError(ParseError):
    """A word exceeded the configured maximum length."""


class StrandMismatchError(UVBError, ValueError):
    """Two operands live on different strand counts."""


class PreconditionError(UVBError, ValueError):
    """An operation was called outside its domain."""


class NotTorsionError(PreconditionError):
    """A torsion-only operation received an element of infinite order."""


class HypothesisError(PreconditionError):
    """The input violates ``w * alpha(w) == 1``."""
