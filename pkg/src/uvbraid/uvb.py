"""Normal forms in UVB_n = UVP_n x| S_n and the word problem.

An element is the pair ``(P, s)`` standing for ``P * iota(s)``; the product is
``(P1, s1)(P2, s2) = (P1 * s1(P2), s1 * s2)``.  Words are folded left to
right using sigma_i = lambda_{i,i+1}^-1 rho_i and sigma_i^-1 = lambda_{i+1,i} rho_i.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import PreconditionError, StrandMismatchError
from .free2 import F2Word, append_syllable, canonical
from .perms import Permutation, adjacent_lift, compose
from .uvp import (
    PureElement,
    act_perm,
    format_pure,
    pure_from_records,
    pure_to_records,
    uvp_inv,
    uvp_mul,
)
from .words import BraidWord, Kind, parse, rho, sigma, sigma_inv


@dataclass(frozen=True)
class NormalForm:
    pure: PureElement
    perm: Permutation

    def __post_init__(self) -> None:
        if self.pure.n != self.perm.n:
            raise StrandMismatchError(f"pure part on {self.pure.n} strands, permutation on {self.perm.n}")

    @property
    def n(self) -> int:
        return self.perm.n

    @classmethod
    def identity(cls, n: int) -> NormalForm:
        return cls(PureElement(n), Permutation.identity(n))

    @classmethod
    def from_pure(cls, pure: PureElement) -> NormalForm:
        return cls(pure, Permutation.identity(pure.n))

    @classmethod
    def from_perm(cls, s: Permutation) -> NormalForm:
        """iota(s)."""
        return cls(PureElement(s.n), s)

    def is_identity(self) -> bool:
        return self.pure.is_identity() and self.perm.is_identity()

    def __mul__(self, other: NormalForm) -> NormalForm:
        return nf_mul(self, other)

    def __invert__(self) -> NormalForm:
        return nf_inv(self)

    def __str__(self) -> str:
        return f"pure: {format_pure(self.pure)}; perm: {self.perm}"

    def to_dict(self) -> dict:
        return {"n": self.n, "perm": list(self.perm.images), "pure": pure_to_records(self.pure)}

    @classmethod
    def from_dict(cls, data: Mapping) -> NormalForm:
        n = int(data["n"])
        perm = Permutation(tuple(data["perm"]))
        return cls(pure_from_records(n, data.get("pure", [])), perm)


def dumps(obj) -> str:
    """Canonical, key-sorted JSON text; byte-identical for equal inputs."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def normal_form(w: BraidWord) -> NormalForm:
    n = w.n
    images = list(range(1, n + 1))
    stacks: dict[tuple[int, int], list] = {}
    for letter in w.letters:
        i = letter.index
        if letter.kind is not Kind.RHO:
            if letter.kind is Kind.SIGMA:
                a, b, e = i, i + 1, -1
            else:
                a, b, e = i + 1, i, 1
            label = (images[a - 1], images[b - 1])
            append_syllable(stacks.setdefault(canonical(*label), []), label, e)
        images[i - 1], images[i] = images[i], images[i - 1]
    comps = tuple((p, F2Word(p, tuple(st))) for p, st in stacks.items() if st)
    return NormalForm(PureElement(n, comps), Permutation(tuple(images)))


def nf(text: str, n: int | None = None) -> NormalForm:
    """Shorthand: parse then normalize."""
    return normal_form(parse(text, n))


def nf_mul(a: NormalForm, b: NormalForm) -> NormalForm:
    if a.n != b.n:
        raise StrandMismatchError(f"UVB_{a.n} vs UVB_{b.n}")
    return NormalForm(uvp_mul(a.pure, act_perm(a.perm, b.pure)), compose(a.perm, b.perm))


def nf_inv(a: NormalForm) -> NormalForm:
    s_inv = a.perm.inverse()
    return NormalForm(act_perm(s_inv, uvp_inv(a.pure)), s_inv)


def nf_pow(a: NormalForm, k: int) -> NormalForm:
    base = a if k >= 0 else nf_inv(a)
    result = NormalForm.identity(a.n)
    for _ in range(abs(k)):
        result = nf_mul(result, base)
    return result


def nf_product(items: Iterable[NormalForm]) -> NormalForm:
    items = list(items)
    if not items:
        raise ValueError("empty product needs an explicit strand count")
    out = items[0]
    for x in items[1:]:
        out = nf_mul(out, x)
    return out


def conjugate(g: NormalForm, x: NormalForm) -> NormalForm:
    """``g x g^-1``."""
    return nf_mul(nf_mul(g, x), nf_inv(g))


def nf_equals(a: NormalForm, b: NormalForm) -> bool:
    if a.n != b.n:
        raise StrandMismatchError(f"UVB_{a.n} vs UVB_{b.n}")
    return a == b


def is_identity(a: NormalForm) -> bool:
    return a.is_identity()


def words_equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Decide equality in UVB_n."""
    return nf_equals(normal_form(w1), normal_form(w2))


def lambda_generator_word(a: int, b: int, n: int) -> BraidWord:
    """A word representing lambda_{a,b}.

    For i < j, lambda_{i,j} = rho_{j-1} ... rho_{i+1} lambda_{i,i+1} rho_{i+1} ... rho_{j-1}
    with lambda_{i,i+1} = rho_i sigma_i^-1, and lambda_{j,i} is the same conjugate of
    lambda_{i+1,i} = sigma_i^-1 rho_i.
    """
    if a == b or not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"bad generator indices ({a}, {b}) for n={n}")
    i, j = min(a, b), max(a, b)
    core = [rho(i), sigma_inv(i)] if a < b else [sigma_inv(i), rho(i)]
    left = [rho(k) for k in range(j - 1, i, -1)]
    return BraidWord(n, tuple(left + core + left[::-1]))


@dataclass(frozen=True)
class RelationInstance:
    family: str
    indices: tuple[int, ...]
    lhs: BraidWord
    rhs: BraidWord
    passed: bool

    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        idx = ",".join(map(str, self.indices))
        lhs, rhs = str(self.lhs) or "1", str(self.rhs) or "1"
        return f"{self.family}({idx}): {lhs} = {rhs} ... {status}"


def relation_instances(n: int) -> list[tuple[str, tuple[int, ...], BraidWord, BraidWord]]:
    """Every index instance of the defining relations of UVB_n."""
    s, r = sigma, rho
    out = []

    def add(family, indices, lhs, rhs):
        out.append((family, indices, BraidWord(n, tuple(lhs)), BraidWord(n, tuple(rhs))))

    gens = range(1, n)
    far = [(i, j) for i in gens for j in gens if abs(i - j) >= 2]
    for i in range(1, n - 1):
        add("BR1", (i,), [s(i), s(i + 1), s(i)], [s(i + 1), s(i), s(i + 1)])
    for i, j in far:
        if i < j:
            add("BR2", (i, j), [s(i), s(j)], [s(j), s(i)])
    for i in range(1, n - 1):
        add("SR1", (i,), [r(i), r(i + 1), r(i)], [r(i + 1), r(i), r(i + 1)])
    for i, j in far:
        if i < j:
            add("SR2", (i, j), [r(i), r(j)], [r(j), r(i)])
    for i in gens:
        add("SR3", (i,), [r(i), r(i)], [])
    for i, j in far:
        add("MR1", (i, j), [s(i), r(j)], [r(j), s(i)])
    for i in range(1, n - 1):
        add("MR2", (i,), [r(i), r(i + 1), s(i)], [s(i + 1), r(i), r(i + 1)])
    for i in range(1, n - 1):
        add("OC", (i,), [r(i), s(i + 1), s(i)], [s(i + 1), s(i), r(i + 1)])
    for i in range(1, n - 1):
        add("UC", (i,), [r(i + 1), s(i), s(i + 1)], [s(i), s(i + 1), r(i)])
    return out


def check_relations(n: int) -> list[RelationInstance]:
    """Normalize both sides of every relation instance and compare."""
    if n < 2:
        raise PreconditionError("check_relations needs n >= 2")
    return [
        RelationInstance(fam, idx, lhs, rhs, normal_form(lhs) == normal_form(rhs))
        for fam, idx, lhs, rhs in relation_instances(n)
    ]


def iota(s: Permutation) -> NormalForm:
    return NormalForm.from_perm(s)


def perm_word_nf(s: Permutation) -> NormalForm:
    """Normal form of the rho-word lifting ``s``; equals ``iota(s)``."""
    return normal_form(adjacent_lift(s))
