"""Words over the generators sigma_i^{+-1}, rho_i of the unrestricted virtual braid group.

Text syntax: tokens ``s<i>`` (sigma_i), ``S<i>`` (sigma_i^-1), ``r<i>`` and
``R<i>`` (rho_i, which is an involution so both spellings give the same letter),
separated by whitespace or ``.``.  Indices are 1-based.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import ParseError, StrandMismatchError, WordTooLongError

MAX_WORD_LENGTH = 10**6

_TOKEN = re.compile(r"([sSrR])([0-9]+)\Z")
_SEPARATORS = re.compile(r"[\s.]+")


class Kind(enum.Enum):
    SIGMA = "s"
    SIGMA_INV = "S"
    RHO = "r"


@dataclass(frozen=True)
class Letter:
    kind: Kind
    index: int

    def inverse(self) -> Letter:
        if self.kind is Kind.SIGMA:
            return Letter(Kind.SIGMA_INV, self.index)
        if self.kind is Kind.SIGMA_INV:
            return Letter(Kind.SIGMA, self.index)
        return self

    def __str__(self) -> str:
        return f"{self.kind.value}{self.index}"


def sigma(i: int) -> Letter:
    return Letter(Kind.SIGMA, i)


def sigma_inv(i: int) -> Letter:
    return Letter(Kind.SIGMA_INV, i)


def rho(i: int) -> Letter:
    return Letter(Kind.RHO, i)


@dataclass(frozen=True)
class BraidWord:
    """A finite sequence of letters on ``n`` strands; no reduction is applied."""

    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"strand count must be >= 1, got {self.n}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if not 1 <= letter.index <= self.n - 1:
                raise ValueError(f"letter {letter} out of range for n={self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: BraidWord) -> BraidWord:
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.n != self.n:
            raise StrandMismatchError(f"cannot concatenate words on {self.n} and {other.n} strands")
        return BraidWord(self.n, self.letters + other.letters)

    def __str__(self) -> str:
        return render(self)

    @property
    def has_rho(self) -> bool:
        return any(letter.kind is Kind.RHO for letter in self.letters)


def word(n: int, letters: Iterable[Letter]) -> BraidWord:
    return BraidWord(n, tuple(letters))


def concat(*words: BraidWord) -> BraidWord:
    if not words:
        raise ValueError("concat needs at least one word")
    out = words[0]
    for w in words[1:]:
        out = out + w
    return out


def _tokens(text: str) -> list[str]:
    return [tok for tok in _SEPARATORS.split(text.strip()) if tok]


def infer_strands(text: str) -> int:
    """Strand count implied by the largest index in ``text`` (1 for the empty word)."""
    indices = [_parse_token(tok).index for tok in _tokens(text)]
    return 1 + max(indices) if indices else 1


def _parse_token(tok: str) -> Letter:
    m = _TOKEN.match(tok)
    if m is None:
        raise ParseError(f"malformed token {tok!r}")
    kind_char, digits = m.groups()
    index = int(digits)
    if index == 0:
        raise ParseError(f"index 0 in token {tok!r}; indices are 1-based")
    kind = {"s": Kind.SIGMA, "S": Kind.SIGMA_INV, "r": Kind.RHO, "R": Kind.RHO}[kind_char]
    return Letter(kind, index)


def parse(text: str, n: Optional[int] = None, *, max_length: int = MAX_WORD_LENGTH) -> BraidWord:
    """Parse a braid word.

    If ``n`` is omitted it is inferred as one more than the largest index.
    """
    toks = _tokens(text)
    if len(toks) > max_length:
        raise WordTooLongError(f"word has {len(toks)} letters, limit is {max_length}")
    letters = tuple(_parse_token(tok) for tok in toks)
    if n is None:
        n = 1 + max((letter.index for letter in letters), default=0)
    elif n < 1:
        raise ParseError(f"strand count must be >= 1, got {n}")
    for letter in letters:
        if letter.index >= n:
            raise ParseError(f"index {letter.index} in {letter} is out of range for n={n}")
    return BraidWord(n, letters)


def render(w: BraidWord) -> str:
    return " ".join(str(letter) for letter in w.letters)


def invert_word(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(letter.inverse() for letter in reversed(w.letters)))


def rho_to_sigma(w: BraidWord) -> BraidWord:
    """Replace every rho_i by sigma_i (other letters unchanged)."""
    return BraidWord(
        w.n,
        tuple(sigma(letter.index) if letter.kind is Kind.RHO else letter for letter in w.letters),
    )
