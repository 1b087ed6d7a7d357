"""Orders of elements of UVB_n and conjugators taking torsion elements to permutations.

For ``w = u * iota(s)`` with ``s`` of order ``r``,
``w^r = u s(u) s^2(u) ... s^{r-1}(u)``, and ``w^k`` is not pure for ``0 < k < r``.
Since UVP_n is torsion free, ``w`` has finite order exactly when that cocycle
product is trivial, and the order is then ``r``.
"""

from __future__ import annotations

from typing import Optional

from .errors import HypothesisError, NotTorsionError
from .free2 import F2Word, f2_mul, solve_alpha_coboundary
from .perms import OrbitBlock, Permutation, pair_orbits
from .uvb import NormalForm, conjugate, iota
from .uvp import PureElement, act_perm, component, uvp_mul


def cocycle_product(u: PureElement, s: Permutation, length: int) -> PureElement:
    """``u * s(u) * ... * s^{length-1}(u)``."""
    acc = PureElement(u.n)
    term = u
    for _ in range(length):
        acc = uvp_mul(acc, term)
        term = act_perm(s, term)
    return acc


def order_of(w: NormalForm) -> Optional[int]:
    """The order of ``w``, or None when it has infinite order."""
    r = w.perm.order()
    if cocycle_product(w.pure, w.perm, r).is_identity():
        return r
    return None


def is_torsion(w: NormalForm) -> bool:
    return order_of(w) is not None


def _act_power(s: Permutation, k: int, word: F2Word) -> F2Word:
    for _ in range(k):
        word = word.relabel(s)
    return word


def _solve_block(w: NormalForm, block: OrbitBlock) -> list[F2Word]:
    """Solve ``u_j = v_j * s(v_{j-1})^-1`` around one orbit block; returns the v_j."""
    s = w.perm
    n1 = block.size
    u = [component(w.pure, pair) for pair in block.cycle]
    # W = u_0 s(u_{n1-1}) s^2(u_{n1-2}) ... s^{n1-1}(u_1), a word in F_{i0,j0}
    closing = u[0]
    for k in range(1, n1):
        closing = f2_mul(closing, _act_power(s, k, u[n1 - k]))
    if block.eps == 1:
        if closing.syllables:
            raise NotTorsionError(f"cocycle does not close on block {block.representative}")
        seed = F2Word(u[0].pair)
    else:
        try:
            seed = solve_alpha_coboundary(closing)
        except HypothesisError as exc:
            raise NotTorsionError(f"cocycle does not close on block {block.representative}") from exc
    v = [seed]
    for j in range(1, n1):
        v.append(f2_mul(u[j], v[j - 1].relabel(s)))
    return v


def torsion_conjugator(w: NormalForm) -> PureElement:
    """Return a pure ``L`` with ``L * iota(s) * L^-1 == w`` where ``s = w.perm``.

    Raises NotTorsionError when ``w`` has infinite order.
    """
    if order_of(w) is None:
        raise NotTorsionError("element has infinite order")
    if w.n < 2:
        return PureElement(w.n)
    words = []
    for block in pair_orbits(w.perm):
        words.extend(v for v in _solve_block(w, block) if v.syllables)
    conj = PureElement.from_words(w.n, words)
    # blocks are solved independently; the assembled element must reproduce w
    if conjugate(NormalForm.from_pure(conj), iota(w.perm)) != w:
        raise AssertionError("conjugator failed to recompose")
    return conj


def recomposes(conj: PureElement, w: NormalForm) -> bool:
    """Check ``conj * iota(w.perm) * conj^-1 == w``."""
    return conjugate(NormalForm.from_pure(conj), iota(w.perm)) == w

