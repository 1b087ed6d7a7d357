"""The pure group UVP_n, a direct sum of the rank-2 free groups F_{i,j} over i < j.

Elements are sparse: only nontrivial components are stored, keyed by the
canonical pair and kept sorted so that iteration and serialization are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Optional

from .errors import StrandMismatchError
from .free2 import F2Word, Pair, canonical, exponent_pair, f2_inv, f2_mul, format_f2
from .perms import OrbitBlock, Permutation


def _check_pair(n: int, pair: Iterable[int]) -> Pair:
    i, j = pair
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"bad index pair {(i, j)} for n={n}")
    return canonical(i, j)


@dataclass(frozen=True)
class PureElement:
    n: int
    components: tuple[tuple[Pair, F2Word], ...] = ()

    def __post_init__(self) -> None:
        comps = tuple(sorted(self.components))
        object.__setattr__(self, "components", comps)
        if len({p for p, _ in comps}) != len(comps):
            raise ValueError("duplicate component pairs")
        for pair, w in comps:
            if w.pair != pair or not w.syllables:
                raise ValueError(f"component at {pair} must be a nonempty word of F{pair}")
            _check_pair(self.n, pair)

    @classmethod
    def identity(cls, n: int) -> PureElement:
        return cls(n)

    @classmethod
    def from_words(cls, n: int, words: Iterable[F2Word]) -> PureElement:
        """Product of the given words; words on distinct pairs commute."""
        acc: dict[Pair, F2Word] = {}
        for w in words:
            _check_pair(n, w.pair)
            acc[w.pair] = f2_mul(acc[w.pair], w) if w.pair in acc else w
        return cls(n, tuple((p, w) for p, w in acc.items() if w.syllables))

    @classmethod
    def generator(cls, n: int, a: int, b: int, exp: int = 1) -> PureElement:
        """``lambda_{a,b}^exp`` as an element of UVP_n."""
        _check_pair(n, (a, b))
        return cls.from_words(n, [F2Word.generator(a, b, exp)])

    @cached_property
    def as_dict(self) -> Mapping[Pair, F2Word]:
        return dict(self.components)

    @property
    def support(self) -> list[Pair]:
        return [p for p, _ in self.components]

    def is_identity(self) -> bool:
        return not self.components

    def __mul__(self, other: PureElement) -> PureElement:
        return uvp_mul(self, other)

    def __invert__(self) -> PureElement:
        return uvp_inv(self)

    def __str__(self) -> str:
        return format_pure(self)


def _same_n(a: PureElement, b: PureElement) -> None:
    if a.n != b.n:
        raise StrandMismatchError(f"UVP_{a.n} vs UVP_{b.n}")


def uvp_mul(a: PureElement, b: PureElement) -> PureElement:
    _same_n(a, b)
    if not b.components:
        return a
    if not a.components:
        return b
    acc = dict(a.components)
    for pair, w in b.components:
        if pair in acc:
            prod = f2_mul(acc[pair], w)
            if prod.syllables:
                acc[pair] = prod
            else:
                del acc[pair]
        else:
            acc[pair] = w
    return PureElement(a.n, tuple(acc.items()))


def uvp_inv(a: PureElement) -> PureElement:
    return PureElement(a.n, tuple((p, f2_inv(w)) for p, w in a.components))


def act_perm(s: Permutation, a: PureElement) -> PureElement:
    """The automorphism lambda_{i,j} -> lambda_{s(i),s(j)} (conjugation by iota(s))."""
    if s.n != a.n:
        raise StrandMismatchError(f"S_{s.n} cannot act on UVP_{a.n}")
    out = []
    for _, w in a.components:
        image = w.relabel(s)
        out.append((image.pair, image))
    return PureElement(a.n, tuple(out))


def component(a: PureElement, pair: Iterable[int]) -> F2Word:
    """Projection onto F_{i,j} (the empty word when the component is trivial)."""
    p = _check_pair(a.n, pair)
    return a.as_dict.get(p) or F2Word(p)


def epsilon(a: PureElement, pair: Iterable[int]) -> int:
    """Total exponent of lambda_{i,j} and lambda_{j,i} in ``a``."""
    x, y = exponent_pair(component(a, pair))
    return x + y


def restrict(a: PureElement, block: OrbitBlock) -> PureElement:
    """The part of ``a`` lying in the factor F_{O_k} of the block."""
    keep = block.unordered
    return PureElement(a.n, tuple((p, w) for p, w in a.components if p in keep))


def uvp_pow(a: PureElement, k: int) -> PureElement:
    base = a if k >= 0 else uvp_inv(a)
    result = PureElement(a.n)
    for _ in range(abs(k)):
        result = uvp_mul(result, base)
    return result


def format_pure(a: PureElement) -> str:
    if not a.components:
        return "1"
    return "; ".join(f"[{i},{j}]: {format_f2(w)}" for (i, j), w in a.components)


def pure_to_records(a: PureElement) -> list[dict]:
    return [
        {"pair": [i, j], "word": [[x, y, e] for (x, y), e in w.syllables]}
        for (i, j), w in a.components
    ]


def pure_from_records(n: int, records: Iterable[Mapping]) -> PureElement:
    words = []
    for rec in records:
        pair = canonical(*rec["pair"])
        words.append(F2Word.from_syllables(pair, [((x, y), e) for x, y, e in rec["word"]]))
    return PureElement.from_words(n, words)


def single(n: int, word: F2Word) -> PureElement:
    return PureElement.from_words(n, [word])


def commutator(a: PureElement, b: PureElement) -> PureElement:
    return uvp_mul(uvp_mul(a, b), uvp_mul(uvp_inv(a), uvp_inv(b)))


def evaluation_vector(a: PureElement, pairs: Optional[list[Pair]] = None) -> list[int]:
    """The vector (epsilon_{i,j}(a)) over all pairs i < j in lexicographic order."""
    if pairs is None:
        pairs = [(i, j) for i in range(1, a.n + 1) for j in range(i + 1, a.n + 1)]
    return [epsilon(a, p) for p in pairs]
