"""Permutations of {1, ..., n} and the orbit analysis of <s> acting on index pairs.

Composition convention, used everywhere: ``(s * t)(x) == s(t(x))``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError, StrandMismatchError
from .words import BraidWord, rho

Pair = tuple[int, int]


@dataclass(frozen=True)
class Permutation:
    """A permutation in one-line notation: ``images[k-1] == s(k)``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise ValueError("a permutation needs n >= 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{len(images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse one-line notation such as ``[2,1,3]``."""
        try:
            images = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed permutation {text!r}") from exc
        if not isinstance(images, list) or not all(isinstance(x, int) for x in images):
            raise ParseError(f"malformed permutation {text!r}")
        try:
            return cls(tuple(images))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.n)
        for _ in range(abs(k)):
            result = compose(result, base)
        return result

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images, start=1))

    def order(self) -> int:
        return perm_order_and_cycles(self)[0]

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


def compose(s: Permutation, t: Permutation) -> Permutation:
    if s.n != t.n:
        raise StrandMismatchError(f"cannot compose permutations of degree {s.n} and {t.n}")
    return Permutation(tuple(s.images[y - 1] for y in t.images))


def perm_order_and_cycles(s: Permutation) -> tuple[int, list[tuple[int, ...]]]:
    """Order of ``s`` and its cycles, fixed points included, each starting at its minimum."""
    seen = [False] * (s.n + 1)
    cycles = []
    for start in range(1, s.n + 1):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = s(x)
        cycles.append(tuple(cycle))
    order = math.lcm(*(len(c) for c in cycles))
    return order, cycles


@dataclass(frozen=True)
class OrbitBlock:
    """One block O_k: the <s>-orbit of an unordered pair, together with its reversal.

    ``cycle`` lists the ordered pairs ``(s^q(i0), s^q(j0))`` for ``q < size``;
    ``eps == 2`` when the ordered orbit of the representative also contains
    its reversal ``(j0, i0)``.
    """

    representative: Pair
    size: int
    eps: int
    cycle: tuple[Pair, ...]

    @property
    def unordered(self) -> frozenset[Pair]:
        return frozenset((min(a, b), max(a, b)) for a, b in self.cycle)

    @property
    def ordered_pairs(self) -> frozenset[Pair]:
        return frozenset(self.cycle) | frozenset((b, a) for a, b in self.cycle)


def pair_orbits(s: Permutation) -> list[OrbitBlock]:
    """Partition the unordered pairs {i, j} into blocks under the action of <s>.

    Blocks are listed by their representative, which is the lexicographically
    least ordered pair in the block.
    """
    if s.n < 2:
        raise ValueError("pair_orbits needs n >= 2")
    covered: set[Pair] = set()
    blocks = []
    for i in range(1, s.n + 1):
        for j in range(i + 1, s.n + 1):
            if (i, j) in covered:
                continue
            cycle = [(i, j)]
            eps = 1
            a, b = s(i), s(j)
            while (a, b) != (i, j):
                if (a, b) == (j, i):
                    eps = 2
                    break
                cycle.append((a, b))
                a, b = s(a), s(b)
            for a, b in cycle:
                covered.add((min(a, b), max(a, b)))
            blocks.append(OrbitBlock((i, j), len(cycle), eps, tuple(cycle)))
    return blocks


def _lift_from_swaps(n: int, swaps: list[int]) -> BraidWord:
    # Sorting applies s <- s * s_k for each recorded k, ending at the identity,
    # so s is the product of the recorded transpositions in reverse order.
    return BraidWord(n, tuple(rho(k) for k in reversed(swaps)))


def adjacent_lift(s: Permutation) -> BraidWord:
    """A rho-only word mapping to ``s``, read off an insertion sort of its one-line form."""
    arr = list(s.images)
    swaps = []
    for j in range(1, len(arr)):
        k = j
        while k > 0 and arr[k - 1] > arr[k]:
            arr[k - 1], arr[k] = arr[k], arr[k - 1]
            swaps.append(k)
            k -= 1
    return _lift_from_swaps(s.n, swaps)


def bubble_lift(s: Permutation) -> BraidWord:
    """Like :func:`adjacent_lift` but from a bubble sort; usually a different word."""
    arr = list(s.images)
    swaps = []
    for end in range(len(arr) - 1, 0, -1):
        for k in range(1, end + 1):
            if arr[k - 1] > arr[k]:
                arr[k - 1], arr[k] = arr[k], arr[k - 1]
                swaps.append(k)
    return _lift_from_swaps(s.n, swaps)


def word_permutation(w: BraidWord) -> Permutation:
    """Image of a word in S_n (every generator maps to its adjacent transposition)."""
    images = list(range(1, w.n + 1))
    # images holds s as a function; s <- s * s_i swaps the entries at positions i, i+1
    for letter in w.letters:
        i = letter.index
        images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))
