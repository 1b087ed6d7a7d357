"""The crystallographic braid group B_n/[P_n,P_n] inside UVB_n, and related quotients.

B_n/[P_n,P_n] is modelled by the image of the canonical map eta: B_n -> UVB_n,
so a sigma-only word is represented by its normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .errors import PreconditionError, StrandMismatchError
from .free2 import F2Word, cyclic_member
from .perms import Permutation, adjacent_lift, compose
from .uvb import NormalForm, nf_inv, nf_mul, normal_form
from .uvp import PureElement, epsilon
from .words import BraidWord, Kind, rho_to_sigma, sigma, sigma_inv

Pair = tuple[int, int]


def eta(w: BraidWord) -> NormalForm:
    if w.has_rho:
        raise PreconditionError("eta is only defined on sigma-only words")
    return normal_form(w)


def crystal_equals(w1: BraidWord, w2: BraidWord) -> bool:
    """Equality of two sigma-words in B_n/[P_n,P_n]."""
    a, b = eta(w1), eta(w2)
    if a.n != b.n:
        raise StrandMismatchError(f"B_{a.n} vs B_{b.n}")
    return a == b


def pure_braid_generator_word(i: int, j: int, n: int) -> BraidWord:
    """a_{i,j} = sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 ... sigma_{j-1}^-1."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got ({i}, {j}) with n={n}")
    left = [sigma(k) for k in range(j - 1, i, -1)]
    right = [sigma_inv(k) for k in range(i + 1, j)]
    return BraidWord(n, tuple(left + [sigma(i), sigma(i)] + right))


def gamma_generator(i: int, j: int) -> F2Word:
    """lambda_{i,j}^-1 lambda_{j,i}^-1, the image of a_{i,j}."""
    return F2Word.from_syllables((i, j), [((i, j), -1), ((j, i), -1)])


def h_generator(i: int, j: int) -> F2Word:
    """lambda_{i,j} lambda_{j,i}^-1 for i < j, a generator of H_n."""
    return F2Word.from_syllables((i, j), [((i, j), 1), ((j, i), -1)])


def _all_components_in(pure: PureElement, gen: Callable[[int, int], F2Word]) -> bool:
    return all(cyclic_member(w, gen(*pair)) is not None for pair, w in pure.components)


def eta_residual(v: NormalForm, lift: Callable[[Permutation], BraidWord] = adjacent_lift) -> NormalForm:
    """``eta(beta)^-1 v`` where ``beta`` is a sigma-lift of ``v``'s permutation."""
    beta = rho_to_sigma(lift(v.perm))
    return nf_mul(nf_inv(eta(beta)), v)


def in_image_eta(v: NormalForm, lift: Callable[[Permutation], BraidWord] = adjacent_lift) -> bool:
    """Decide whether ``v`` lies in eta(B_n).

    The residual after removing a sigma-lift of the permutation is pure, and
    ``v`` is in the image exactly when that residual lies in
    eta(P_n) = sum of the cyclic groups <lambda_{i,j}^-1 lambda_{j,i}^-1>.
    """
    residual = eta_residual(v, lift)
    return _all_components_in(residual.pure, gamma_generator)


def in_cn(v: NormalForm) -> bool:
    """Membership in C_n = H_n x| iota(S_n)."""
    return _all_components_in(v.pure, h_generator)


@dataclass(frozen=True)
class CrystalQuotientElement:
    """An element of Z^{n(n-1)/2} x| S_n; ``vector`` maps pairs i < j to coefficients."""

    vector: tuple[tuple[Pair, int], ...]
    perm: Permutation

    def __post_init__(self) -> None:
        vec = tuple(sorted((p, c) for p, c in self.vector if c))
        object.__setattr__(self, "vector", vec)

    @property
    def n(self) -> int:
        return self.perm.n

    def coeff(self, i: int, j: int) -> int:
        key = (min(i, j), max(i, j))
        return dict(self.vector).get(key, 0)

    def __mul__(self, other: CrystalQuotientElement) -> CrystalQuotientElement:
        return quotient_mul(self, other)

    def to_dict(self) -> dict:
        return {
            "perm": list(self.perm.images),
            "vector": [{"pair": [i, j], "coeff": c} for (i, j), c in self.vector],
        }

    def __str__(self) -> str:
        vec = " + ".join(f"{c}*x{i},{j}" for (i, j), c in self.vector) or "0"
        return f"vector: {vec}; perm: {self.perm}"


def quotient_act(s: Permutation, vector) -> tuple[tuple[Pair, int], ...]:
    out = []
    for (i, j), c in vector:
        a, b = s(i), s(j)
        out.append(((min(a, b), max(a, b)), c))
    return tuple(out)


def quotient_mul(a: CrystalQuotientElement, b: CrystalQuotientElement) -> CrystalQuotientElement:
    if a.n != b.n:
        raise StrandMismatchError(f"degree {a.n} vs {b.n}")
    acc = dict(a.vector)
    for p, c in quotient_act(a.perm, b.vector):
        acc[p] = acc.get(p, 0) + c
    return CrystalQuotientElement(tuple(acc.items()), compose(a.perm, b.perm))


def project_hn_quotient(v: NormalForm) -> CrystalQuotientElement:
    """Image in UVB_n / <<H_n>>, where lambda_{i,j} and lambda_{j,i} both become x_{i,j}."""
    vector = tuple((pair, epsilon(v.pure, pair)) for pair, _ in v.pure.components)
    return CrystalQuotientElement(vector, v.perm)


def writhe(x: Union[BraidWord, NormalForm]) -> int:
    """The homomorphism to Z killing every rho_i and sending sigma_i to 1."""
    if isinstance(x, BraidWord):
        return sum(
            1 if letter.kind is Kind.SIGMA else -1
            for letter in x.letters
            if letter.kind is not Kind.RHO
        )
    return -sum(epsilon(x.pure, pair) for pair, _ in x.pure.components)
