import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from uvbraid.errors import StrandMismatchError
from uvbraid.free2 import F2Word, f2_mul
from uvbraid.perms import Permutation, compose, pair_orbits
from uvbraid.uvp import (
    PureElement,
    act_perm,
    component,
    epsilon,
    pure_from_records,
    pure_to_records,
    restrict,
    uvp_inv,
    uvp_mul,
    uvp_pow,
)

from conftest import permutations, pure_elements


def lam(n, a, b, e=1):
    return PureElement.generator(n, a, b, e)


def test_mul_examples():
    assert uvp_mul(lam(4, 1, 2), lam(4, 1, 2, -1)).is_identity()
    a, b = lam(4, 1, 2), lam(4, 3, 4)
    assert uvp_mul(a, b) == uvp_mul(b, a)
    assert uvp_mul(a, b).support == [(1, 2), (3, 4)]
    assert uvp_mul(lam(4, 1, 2), lam(4, 2, 1)) != uvp_mul(lam(4, 2, 1), lam(4, 1, 2))


def test_mismatched_n():
    with pytest.raises(StrandMismatchError):
        uvp_mul(lam(3, 1, 2), lam(4, 1, 2))


def test_act_examples():
    s = Permutation.from_cycles(3, [(1, 2)])
    assert act_perm(s, lam(3, 1, 3)) == lam(3, 2, 3)
    assert act_perm(Permutation.identity(3), lam(3, 1, 3)) == lam(3, 1, 3)
    assert act_perm(s, lam(3, 1, 2)) == lam(3, 2, 1)


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(pure_elements(n), pure_elements(n), permutations(n), permutations(n))))
def test_action_laws(data):
    a, b, s, t = data
    assert act_perm(s, uvp_mul(a, b)) == uvp_mul(act_perm(s, a), act_perm(s, b))
    assert act_perm(compose(s, t), a) == act_perm(s, act_perm(t, a))
    assert act_perm(s.inverse(), act_perm(s, a)) == a


def test_component_examples():
    a = PureElement.from_words(3, [F2Word.from_syllables((1, 2), [((1, 2), 1), ((2, 1), 1)])])
    assert component(a, (1, 2)).syllables == (((1, 2), 1), ((2, 1), 1))
    assert component(a, (2, 1)) == component(a, (1, 2))
    assert component(a, (1, 3)) == F2Word((1, 3))
    with pytest.raises(ValueError):
        component(a, (1, 1))
    with pytest.raises(ValueError):
        component(a, (1, 4))


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(pure_elements(n), pure_elements(n))))
def test_projection_is_homomorphism_and_direct_sum(data):
    a, b = data
    n = a.n
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    ab = uvp_mul(a, b)
    for p in pairs:
        assert component(ab, p) == f2_mul(component(a, p), component(b, p))
    rebuilt = PureElement.from_words(n, [component(a, p) for p in pairs])
    assert rebuilt == a


def test_epsilon_examples():
    g = PureElement.from_words(3, [F2Word.from_syllables((1, 2), [((1, 2), -1), ((2, 1), -1)])])
    assert epsilon(g, (1, 2)) == -2
    assert epsilon(lam(3, 1, 2), (1, 3)) == 0
    assert epsilon(lam(3, 2, 1), (1, 2)) == 1


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(pure_elements(n), pure_elements(n), permutations(n))))
def test_epsilon_additive_and_invariant(data):
    a, b, s = data
    n = a.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            assert epsilon(uvp_mul(a, b), (i, j)) == epsilon(a, (i, j)) + epsilon(b, (i, j))
            assert epsilon(act_perm(s, a), (s(i), s(j))) == epsilon(a, (i, j))


@given(st.integers(2, 6).flatmap(pure_elements), st.integers(1, 6))
def test_torsion_free(a, k):
    assume(not a.is_identity())
    assert not uvp_pow(a, k).is_identity()


@given(st.integers(2, 6).flatmap(pure_elements))
def test_inverse(a):
    assert uvp_mul(a, uvp_inv(a)).is_identity()


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(pure_elements(n), permutations(n))))
def test_orbit_blocks_decompose(data):
    a, s = data
    total = PureElement(a.n)
    for block in pair_orbits(s):
        part = restrict(a, block)
        assert set(part.support) <= block.unordered
        assert set(act_perm(s, part).support) <= block.unordered
        total = uvp_mul(total, part)
    assert total == a


def test_records_round_trip():
    a = uvp_mul(lam(4, 1, 2), uvp_mul(lam(4, 4, 3, -2), lam(4, 2, 1)))
    recs = pure_to_records(a)
    assert recs == [
        {"pair": [1, 2], "word": [[1, 2, 1], [2, 1, 1]]},
        {"pair": [3, 4], "word": [[4, 3, -2]]},
    ]
    assert pure_from_records(4, recs) == a
