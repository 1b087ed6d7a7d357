"""Seeded property suites.

Each ``check_*`` function runs one property over a fixed number of trials and
returns a :class:`PropertyResult`; ``run_selftest`` runs them all.  Trial
``t`` of a suite draws from ``Rng(seed).spawn(suite_id).spawn(t)``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import crystal, oracle, torsion
from .free2 import f2_inv, f2_mul, solve_alpha_coboundary, swap_alpha
from .perms import adjacent_lift, bubble_lift
from .uvb import NormalForm, check_relations, conjugate, iota, nf_mul, normal_form
from .uvp import commutator, evaluation_vector, single
from .words import invert_word

DEFAULT_SEED = 20240501


@dataclass
class PropertyResult:
    name: str
    trials: int = 0
    failures: int = 0
    seconds: float = 0.0
    examples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.trials > 0

    def fail(self, message: str) -> None:
        self.failures += 1
        if len(self.examples) < 5:
            self.examples.append(message)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "trials": self.trials,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
            "passed": self.passed,
            "examples": self.examples,
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: {self.trials} trials, {self.failures} failures, {self.seconds:.2f}s"


def _timed(name: str):
    def deco(fn: Callable[..., None]) -> Callable[..., PropertyResult]:
        def run(*args, **kwargs) -> PropertyResult:
            result = PropertyResult(name)
            start = time.perf_counter()
            fn(result, *args, **kwargs)
            result.seconds = time.perf_counter() - start
            return result

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return deco


@_timed("presentation relations")
def check_presentation(result: PropertyResult, ns: Iterable[int] = range(2, 7)) -> None:
    for n in ns:
        for inst in check_relations(n):
            result.trials += 1
            if not inst.passed:
                result.fail(f"n={n}: {inst}")


@_timed("pure presentation")
def check_pure_presentation(result: PropertyResult, ns: Iterable[int] = range(2, 6)) -> None:
    for n in ns:
        result.trials += 1
        for msg in oracle.pure_presentation_failures(n):
            result.fail(f"n={n}: {msg}")


@_timed("lambda words")
def check_lambda_words(result: PropertyResult, ns: Iterable[int] = range(2, 7)) -> None:
    for n in ns:
        result.trials += n * (n - 1)
        for msg in oracle.lambda_word_failures(n):
            result.fail(f"n={n}: {msg}")


@_timed("torsion round trip")
def check_torsion_round_trip(result: PropertyResult, seed: int, trials: int = 1000,
                             max_n: int = 6, max_pure: int = 20) -> None:
    base = oracle.Rng(seed).spawn(4)
    for t in range(trials):
        rng = base.spawn(t)
        n = rng.randint(2, max_n)
        g = NormalForm.from_pure(oracle.random_pure(rng, n, rng.randint(0, max_pure)))
        s = oracle.random_perm(rng, n)
        v = conjugate(g, iota(s))
        result.trials += 1
        order = torsion.order_of(v)
        if order != s.order():
            result.fail(f"trial {t}: order {order}, expected {s.order()} for {v}")
            continue
        conj = torsion.torsion_conjugator(v)
        if not torsion.recomposes(conj, v):
            result.fail(f"trial {t}: conjugator {conj} does not recompose {v}")


def _mixed_element(rng: oracle.Rng, max_n: int) -> NormalForm:
    # half generic elements, half conjugates of permutations (some perturbed)
    n = rng.randint(2, max_n)
    mode = rng.randint(0, 3)
    if mode <= 1:
        return oracle.random_element(rng, n, rng.randint(0, 8), rng.randint(0, 8))
    g = NormalForm.from_pure(oracle.random_pure(rng, n, rng.randint(0, 10)))
    v = conjugate(g, iota(oracle.random_perm(rng, n)))
    if mode == 3:
        v = nf_mul(v, NormalForm.from_pure(oracle.random_pure(rng, n, 1)))
    return v


@_timed("torsion vs brute force")
def check_torsion_brute_force(result: PropertyResult, seed: int, trials: int = 1000, max_n: int = 6) -> None:
    base = oracle.Rng(seed).spawn(5)
    for t in range(trials):
        v = _mixed_element(base.spawn(t), max_n)
        result.trials += 1
        fast = torsion.order_of(v)
        slow = oracle.brute_force_order(v, v.perm.order())
        if fast != slow:
            result.fail(f"trial {t}: order_of={fast}, brute force={slow} for {v}")


@_timed("no even torsion in Im(eta)")
def check_no_even_torsion(result: PropertyResult, seed: int, trials: int = 500, max_n: int = 6,
                          max_len: int = 20) -> None:
    base = oracle.Rng(seed).spawn(6)
    for t in range(trials):
        rng = base.spawn(2 * t)
        n = rng.randint(3, max_n)
        while True:
            w = oracle.random_sigma_word(rng, n, rng.randint(1, max_len))
            v = crystal.eta(w)
            if v.perm.order() % 2 == 0:
                break
        result.trials += 1
        if torsion.order_of(v) is not None:
            result.fail(f"trial {t}: eta({w}) has finite order")
    for t in range(trials):
        rng = base.spawn(2 * t + 1)
        n = rng.randint(3, max_n)
        g = NormalForm.from_pure(oracle.random_pure(rng, n, rng.randint(0, 12)))
        v = conjugate(g, iota(oracle.random_involution(rng, n)))
        result.trials += 1
        if torsion.order_of(v) != 2 or crystal.in_image_eta(v):
            result.fail(f"trial {t}: order-2 element {v} reported in Im(eta)")


@_timed("alpha-coboundary round trip")
def check_alpha_coboundary(result: PropertyResult, seed: int, trials: int = 1000, max_len: int = 30) -> None:
    base = oracle.Rng(seed).spawn(7)
    for t in range(trials):
        rng = base.spawn(t)
        i = rng.randint(1, 5)
        j = rng.randint(i + 1, 6)
        u = oracle.random_f2_word(rng, (i, j), rng.randint(0, max_len))
        w = f2_mul(u, swap_alpha(f2_inv(u)))
        result.trials += 1
        if f2_mul(w, swap_alpha(w)).syllables:
            result.fail(f"trial {t}: w*alpha(w) != 1 for u={u}")
            continue
        u2 = solve_alpha_coboundary(w)
        if f2_mul(u2, swap_alpha(f2_inv(u2))) != w:
            result.fail(f"trial {t}: solution {u2} does not recompose {w}")


@_timed("eta kernel and rank")
def check_kernel_and_rank(result: PropertyResult, ns: Iterable[int] = range(2, 6)) -> None:
    for n in ns:
        pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        words = {p: crystal.pure_braid_generator_word(*p, n) for p in pairs}
        images = {p: crystal.eta(w) for p, w in words.items()}
        for p in pairs:
            result.trials += 1
            img = images[p]
            want = crystal.gamma_generator(*p)
            if not img.perm.is_identity() or img.pure.components != ((p, want),):
                result.fail(f"n={n}: eta(a{p}) = {img}")
            for q in pairs:
                w1, w2 = words[p], words[q]
                comm = w1 + w2 + invert_word(w1) + invert_word(w2)
                result.trials += 1
                if not crystal.eta(comm).is_identity():
                    result.fail(f"n={n}: [a{p}, a{q}] not killed by eta")
                if not commutator(images[p].pure, images[q].pure).is_identity():
                    result.fail(f"n={n}: eta(a{p}) and eta(a{q}) do not commute")
        rank = oracle.integer_rank([evaluation_vector(images[p].pure) for p in pairs])
        result.trials += 1
        if rank != len(pairs):
            result.fail(f"n={n}: rank {rank}, expected {len(pairs)}")


@_timed("Im(eta) lift independence")
def check_lift_independence(result: PropertyResult, seed: int, trials: int = 200, max_n: int = 6) -> None:
    base = oracle.Rng(seed).spawn(9)
    for t in range(trials):
        rng = base.spawn(t)
        n = rng.randint(2, max_n)
        if rng.randint(0, 1):
            v = crystal.eta(oracle.random_sigma_word(rng, n, rng.randint(0, 15)))
        else:
            v = oracle.random_element(rng, n, rng.randint(0, 8), rng.randint(0, 10))
        result.trials += 1
        a = crystal.in_image_eta(v, lift=adjacent_lift)
        b = crystal.in_image_eta(v, lift=bubble_lift)
        if a != b:
            result.fail(f"trial {t}: insertion lift says {a}, bubble lift says {b} for {v}")


@_timed("writhe and quotient homomorphisms")
def check_homomorphisms(result: PropertyResult, seed: int, trials: int = 500, max_n: int = 6) -> None:
    base = oracle.Rng(seed).spawn(10)
    for t in range(trials):
        rng = base.spawn(3 * t)
        n = rng.randint(2, max_n)
        a = oracle.random_element(rng, n, rng.randint(0, 10), rng.randint(0, 10))
        b = oracle.random_element(rng, n, rng.randint(0, 10), rng.randint(0, 10))
        result.trials += 1
        if crystal.writhe(nf_mul(a, b)) != crystal.writhe(a) + crystal.writhe(b):
            result.fail(f"trial {t}: writhe not additive")
    for t in range(trials):
        rng = base.spawn(3 * t + 1)
        n = rng.randint(2, max_n)
        w = oracle.random_word(rng, n, rng.randint(0, 30))
        result.trials += 1
        if crystal.writhe(w) != crystal.writhe(normal_form(w)):
            result.fail(f"trial {t}: word writhe != normal-form writhe for {w}")
    for t in range(trials):
        rng = base.spawn(3 * t + 2)
        n = rng.randint(2, max_n)
        a = oracle.random_element(rng, n, rng.randint(0, 10), rng.randint(0, 10))
        b = oracle.random_element(rng, n, rng.randint(0, 10), rng.randint(0, 10))
        result.trials += 1
        lhs = crystal.project_hn_quotient(nf_mul(a, b))
        rhs = crystal.quotient_mul(crystal.project_hn_quotient(a), crystal.project_hn_quotient(b))
        if lhs != rhs:
            result.fail(f"trial {t}: projection not multiplicative")
    for n in range(2, max_n + 1):
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                h = NormalForm.from_pure(single(n, crystal.h_generator(i, j)))
                img = crystal.project_hn_quotient(h)
                result.trials += 1
                if img.vector or not img.perm.is_identity():
                    result.fail(f"H_n generator ({i},{j}) maps to {img}")


def run_selftest(seed: int = DEFAULT_SEED, scale: float = 1.0) -> list[PropertyResult]:
    """Run every suite; ``scale`` multiplies the randomized trial counts."""

    def k(x: int) -> int:
        return max(1, int(x * scale))

    return [
        check_presentation(),
        check_pure_presentation(),
        check_lambda_words(),
        check_torsion_round_trip(seed, trials=k(1000)),
        check_torsion_brute_force(seed, trials=k(1000)),
        check_no_even_torsion(seed, trials=k(500)),
        check_alpha_coboundary(seed, trials=k(1000)),
        check_kernel_and_rank(),
        check_lift_independence(seed, trials=k(200)),
        check_homomorphisms(seed, trials=k(500)),
    ]
