"""Independent checks: seeded random generators, brute-force order, presentation checks.

Randomness comes from numpy's counter-based Philox generator.  Each trial of a
property suite draws from ``Rng(seed).spawn(trial)``, so trials are
reproducible individually and can be partitioned across workers.

Distributions (all uniform):

* ``random_f2_word`` draws ``length`` letters from the four letters
  lambda_{i,j}^{+-1}, lambda_{j,i}^{+-1} and freely reduces the product.
* ``random_pure`` draws ``length`` letters lambda_{a,b}^{+-1} over ordered pairs a != b.
* ``random_element`` multiplies ``random_pure(pure_len)`` by the image of
  ``rho_count`` random adjacent transpositions.
* ``random_sigma_word`` / ``random_word`` draw letters from sigma_i^{+-1}
  (resp. sigma_i^{+-1} and rho_i).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .free2 import F2Word, canonical
from .perms import Permutation
from .uvb import NormalForm, check_relations, lambda_generator_word, nf_mul, normal_form
from .uvp import PureElement, commutator
from .words import BraidWord, rho, sigma, sigma_inv


class Rng:
    """Deterministic random stream keyed by a 64-bit seed (and optional spawn path)."""

    def __init__(self, seed: int, path: Sequence[int] = ()):
        self.seed = int(seed)
        self.path = tuple(int(p) for p in path)
        ss = np.random.SeedSequence(self.seed & (2**64 - 1), spawn_key=self.path)
        self._gen = np.random.Generator(np.random.Philox(ss))

    def spawn(self, index: int) -> Rng:
        """An independent child stream; depends only on (seed, path, index)."""
        return Rng(self.seed, self.path + (index,))

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed range [lo, hi]."""
        return int(self._gen.integers(lo, hi, endpoint=True))

    def choice(self, items: Sequence):
        return items[self.randint(0, len(items) - 1)]

    def sign(self) -> int:
        return 1 if self.randint(0, 1) else -1

    def shuffled(self, items: Sequence) -> list:
        idx = self._gen.permutation(len(items))
        return [items[int(k)] for k in idx]


def random_f2_word(rng: Rng, pair: tuple[int, int], length: int) -> F2Word:
    i, j = canonical(*pair)
    labels = [(i, j), (j, i)]
    return F2Word.from_syllables((i, j), [(rng.choice(labels), rng.sign()) for _ in range(length)])


def random_pure(rng: Rng, n: int, length: int) -> PureElement:
    words = []
    for _ in range(length):
        a = rng.randint(1, n)
        b = rng.randint(1, n - 1)
        if b >= a:
            b += 1
        words.append(F2Word.generator(a, b, rng.sign()))
    return PureElement.from_words(n, words)


def random_perm(rng: Rng, n: int) -> Permutation:
    return Permutation(tuple(rng.shuffled(list(range(1, n + 1)))))


def random_involution(rng: Rng, n: int) -> Permutation:
    """A permutation of order exactly 2 (needs n >= 2)."""
    pts = rng.shuffled(list(range(1, n + 1)))
    k = rng.randint(1, n // 2)
    return Permutation.from_cycles(n, [(pts[2 * q], pts[2 * q + 1]) for q in range(k)])


def random_element(rng: Rng, n: int, pure_len: int, rho_count: int) -> NormalForm:
    images = list(range(1, n + 1))
    for _ in range(rho_count):
        i = rng.randint(1, n - 1)
        images[i - 1], images[i] = images[i], images[i - 1]
    return NormalForm(random_pure(rng, n, pure_len), Permutation(tuple(images)))


def random_sigma_word(rng: Rng, n: int, length: int) -> BraidWord:
    return BraidWord(n, tuple((sigma if rng.randint(0, 1) else sigma_inv)(rng.randint(1, n - 1)) for _ in range(length)))


def random_word(rng: Rng, n: int, length: int) -> BraidWord:
    makers = (sigma, sigma_inv, rho)
    return BraidWord(n, tuple(rng.choice(makers)(rng.randint(1, n - 1)) for _ in range(length)))


def brute_force_order(v: NormalForm, max_k: int) -> Optional[int]:
    """Smallest k <= max_k with v^k = 1 by repeated multiplication, else None."""
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    power = v
    for k in range(1, max_k + 1):
        if power.is_identity():
            return k
        power = nf_mul(power, v)
    return None


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank over Q by Gaussian elimination on fractions."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def pure_presentation_failures(n: int) -> list[str]:
    """Check the lambda-generator commutation pattern through words and normal forms.

    Generators on different pairs must commute; lambda_{i,j} and lambda_{j,i}
    must not.
    """
    gens = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a != b:
                g = normal_form(lambda_generator_word(a, b, n))
                gens[a, b] = g
    failures = []
    keys = sorted(gens)
    for x, p in enumerate(keys):
        for q in keys[x + 1:]:
            gp, gq = gens[p].pure, gens[q].pure
            trivial = commutator(gp, gq).is_identity()
            if canonical(*p) == canonical(*q):
                if trivial:
                    failures.append(f"lambda{p} and lambda{q} commute")
            elif not trivial:
                failures.append(f"lambda{p} and lambda{q} do not commute")
    return failures


def lambda_word_failures(n: int) -> list[str]:
    failures = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a == b:
                continue
            got = normal_form(lambda_generator_word(a, b, n))
            want = NormalForm.from_pure(PureElement.generator(n, a, b))
            if got != want:
                failures.append(f"lambda({a},{b}) word normalizes to {got}")
    return failures


def verify_presentation(n: int) -> bool:
    if n < 2:
        raise ValueError("verify_presentation needs n >= 2")
    if not all(inst.passed for inst in check_relations(n)):
        return False
    return not pure_presentation_failures(n) and not lambda_word_failures(n)
