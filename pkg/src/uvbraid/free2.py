"""Rank-2 free groups F_{i,j} = F(lambda_{i,j}, lambda_{j,i}).

Words are stored run-length encoded as syllables ``((a, b), e)`` meaning
``lambda_{a,b}^e``; adjacent syllables always carry different labels.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import HypothesisError, ParseError

Pair = tuple[int, int]
Syllable = tuple[Pair, int]

_SYLLABLE = re.compile(r"l(\d+),(\d+)(?:\^(-?\d+))?\Z")


def canonical(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


def append_syllable(stack: list[Syllable], label: Pair, exp: int) -> None:
    """Multiply a reduced syllable stack on the right by ``lambda_label^exp`` in place."""
    if exp == 0:
        return
    if stack and stack[-1][0] == label:
        total = stack[-1][1] + exp
        if total:
            stack[-1] = (label, total)
        else:
            stack.pop()
    else:
        stack.append((label, exp))


@dataclass(frozen=True)
class F2Word:
    pair: Pair
    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self) -> None:
        i, j = self.pair
        if not i < j:
            raise ValueError(f"component pair must satisfy i < j, got {self.pair}")
        prev = None
        for label, exp in self.syllables:
            if canonical(*label) != self.pair or label[0] == label[1]:
                raise ValueError(f"syllable label {label} does not belong to F{self.pair}")
            if exp == 0 or label == prev:
                raise ValueError("syllables are not freely reduced")
            prev = label

    @classmethod
    def identity(cls, pair: Pair) -> F2Word:
        return cls(canonical(*pair))

    @classmethod
    def generator(cls, a: int, b: int, exp: int = 1) -> F2Word:
        """``lambda_{a,b}^exp``."""
        return cls.from_syllables(canonical(a, b), [((a, b), exp)])

    @classmethod
    def from_syllables(cls, pair: Pair, syllables: Iterable[Syllable]) -> F2Word:
        """Build a word from arbitrary (possibly unreduced) syllables."""
        stack: list[Syllable] = []
        for label, exp in syllables:
            append_syllable(stack, tuple(label), exp)
        return cls(canonical(*pair), tuple(stack))

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __mul__(self, other: F2Word) -> F2Word:
        return f2_mul(self, other)

    def __invert__(self) -> F2Word:
        return f2_inv(self)

    def __pow__(self, k: int) -> F2Word:
        return f2_pow(self, k)

    def __len__(self) -> int:
        return letter_length(self)

    def __str__(self) -> str:
        return format_f2(self)

    def letters(self) -> list[Syllable]:
        """Flat letter sequence, each entry with exponent +-1."""
        out = []
        for label, exp in self.syllables:
            unit = 1 if exp > 0 else -1
            out.extend([(label, unit)] * abs(exp))
        return out

    def relabel(self, mapping) -> F2Word:
        """Apply ``lambda_{a,b} -> lambda_{f(a),f(b)}`` letterwise (``f`` a callable)."""
        syl = [((mapping(a), mapping(b)), e) for (a, b), e in self.syllables]
        if not syl:
            a, b = self.pair
            return F2Word(canonical(mapping(a), mapping(b)))
        return F2Word(canonical(*syl[0][0]), tuple(syl))


def _check_pair(a: F2Word, b: F2Word) -> None:
    if a.pair != b.pair:
        raise ValueError(f"component mismatch: F{a.pair} vs F{b.pair}")


def f2_mul(a: F2Word, b: F2Word) -> F2Word:
    _check_pair(a, b)
    if not a.syllables:
        return b
    if not b.syllables:
        return a
    stack = list(a.syllables)
    rest = iter(b.syllables)
    for label, exp in rest:
        append_syllable(stack, label, exp)
        # past the junction no further cancellation is possible
        if stack and stack[-1][0] == label and stack[-1][1] == exp:
            stack.extend(rest)
            break
    return F2Word(a.pair, tuple(stack))


def f2_inv(a: F2Word) -> F2Word:
    return F2Word(a.pair, tuple((label, -exp) for label, exp in reversed(a.syllables)))


def f2_pow(a: F2Word, k: int) -> F2Word:
    base = a if k >= 0 else f2_inv(a)
    result = F2Word(a.pair)
    for _ in range(abs(k)):
        result = f2_mul(result, base)
    return result


def letter_length(a: F2Word) -> int:
    return sum(abs(e) for _, e in a.syllables)


def swap_alpha(w: F2Word) -> F2Word:
    """The automorphism exchanging lambda_{i,j} and lambda_{j,i}."""
    return F2Word(w.pair, tuple(((b, a), e) for (a, b), e in w.syllables))


def _prefix(w: F2Word, length: int) -> F2Word:
    out = []
    remaining = length
    for label, exp in w.syllables:
        if remaining == 0:
            break
        take = min(abs(exp), remaining)
        out.append((label, take if exp > 0 else -take))
        remaining -= take
    return F2Word(w.pair, tuple(out))


def solve_alpha_coboundary(w: F2Word) -> F2Word:
    """Return ``u`` with ``w == u * alpha(u^-1)``, given ``w * alpha(w) == 1``.

    The hypothesis forces the reduced word to have even length 2T with its
    k-th and (2T+1-k)-th letters alpha-inverse to each other, so the prefix of
    length T works.
    """
    if f2_mul(w, swap_alpha(w)):
        raise HypothesisError(f"{format_f2(w)} does not satisfy w*alpha(w) = 1")
    return _prefix(w, letter_length(w) // 2)


def cyclic_member(w: F2Word, g: F2Word) -> Optional[int]:
    """Return ``k`` with ``w == g^k``, or None if ``w`` is not in the cyclic subgroup <g>."""
    _check_pair(w, g)
    if not g.syllables:
        raise ValueError("cyclic_member needs a nontrivial generator")
    if not w.syllables:
        return 0
    # g = c * core * c^-1 with core cyclically reduced, so |g^k| = 2|c| + |k|*|core|
    letters = g.letters()
    c = 0
    while 2 * c + 2 <= len(letters) and letters[c][0] == letters[-1 - c][0] and letters[c][1] == -letters[-1 - c][1]:
        c += 1
    core = len(letters) - 2 * c
    excess = letter_length(w) - 2 * c
    if excess <= 0 or excess % core:
        return None
    k = excess // core
    wx, wy = exponent_pair(w)
    gx, gy = exponent_pair(g)
    candidates = (k, -k)
    if (gx, gy) != (0, 0):
        candidates = tuple(q for q in candidates if (q * gx, q * gy) == (wx, wy))
    for q in candidates:
        if f2_pow(g, q) == w:
            return q
    return None


def exponent_pair(w: F2Word) -> tuple[int, int]:
    """Exponent sums ``(on lambda_{i,j}, on lambda_{j,i})`` for the component {i<j}."""
    i, j = w.pair
    forward = backward = 0
    for label, exp in w.syllables:
        if label == (i, j):
            forward += exp
        else:
            backward += exp
    return forward, backward


def format_f2(w: F2Word) -> str:
    if not w.syllables:
        return "1"
    return " ".join(f"l{a},{b}" if e == 1 else f"l{a},{b}^{e}" for (a, b), e in w.syllables)


def parse_f2(text: str, pair: Optional[Sequence[int]] = None) -> F2Word:
    """Parse ``l1,2^-1 l2,1`` style text. ``"1"`` or ``""`` is the identity of ``pair``."""
    toks = text.split()
    if toks in ([], ["1"]):
        if pair is None:
            raise ParseError("the empty word needs an explicit component pair")
        return F2Word(canonical(*pair))
    syllables = []
    for tok in toks:
        m = _SYLLABLE.match(tok)
        if m is None:
            raise ParseError(f"malformed syllable {tok!r}")
        a, b = int(m.group(1)), int(m.group(2))
        if a == b or a == 0 or b == 0:
            raise ParseError(f"bad label in {tok!r}")
        syllables.append(((a, b), int(m.group(3) or 1)))
    comp = canonical(*syllables[0][0])
    if pair is not None and canonical(*pair) != comp:
        raise ParseError(f"{text!r} does not live in F{tuple(pair)}")
    if any(canonical(*label) != comp for label, _ in syllables):
        raise ParseError(f"{text!r} mixes letters from different components")
    return F2Word.from_syllables(comp, syllables)
