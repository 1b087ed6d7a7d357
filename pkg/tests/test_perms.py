import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uvbraid.errors import ParseError, StrandMismatchError
from uvbraid.perms import (
    Permutation,
    adjacent_lift,
    bubble_lift,
    compose,
    pair_orbits,
    perm_order_and_cycles,
    word_permutation,
)
from uvbraid.uvb import normal_form
from uvbraid.words import Kind

from conftest import permutations


def brute_orbit_blocks(s):
    """Orbits of <s> on unordered pairs by repeated application, as sets of frozensets."""
    n = s.n
    seen, blocks = set(), []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        p = frozenset((i, j))
        if p in seen:
            continue
        orbit, q = set(), p
        while q not in orbit:
            orbit.add(q)
            q = frozenset(s(x) for x in q)
        seen |= orbit
        blocks.append(frozenset(orbit))
    return set(blocks)


def test_compose_pointwise():
    s = Permutation.from_cycles(3, [(1, 2)])
    t = Permutation.from_cycles(3, [(2, 3)])
    st_ = compose(s, t)
    assert [st_(x) for x in (1, 2, 3)] == [s(t(x)) for x in (1, 2, 3)]
    assert st_.images == (2, 3, 1)


def test_compose_inverse_and_identity():
    s = Permutation((3, 1, 4, 2))
    assert compose(s, s.inverse()).is_identity()
    assert compose(Permutation.identity(4), s) == s


def test_compose_mismatch():
    with pytest.raises(StrandMismatchError):
        compose(Permutation.identity(2), Permutation.identity(3))


def test_order_and_cycles_examples():
    assert perm_order_and_cycles(Permutation.from_cycles(4, [(1, 2), (3, 4)])) == (2, [(1, 2), (3, 4)])
    assert perm_order_and_cycles(Permutation.identity(3)) == (1, [(1,), (2,), (3,)])
    order, cycles = perm_order_and_cycles(Permutation.from_cycles(4, [(1, 2, 3)]))
    assert cycles == [(1, 2, 3), (4,)]
    assert order == math.lcm(3, 1) == 3


@given(st.integers(1, 7).flatmap(permutations))
def test_order_matches_powering(s):
    order, cycles = perm_order_and_cycles(s)
    assert sorted(x for c in cycles for x in c) == list(range(1, s.n + 1))
    assert (s ** order).is_identity()
    assert all(not (s ** k).is_identity() for k in range(1, order))


def test_pair_orbits_double_transposition():
    blocks = pair_orbits(Permutation.from_cycles(4, [(1, 2), (3, 4)]))
    summary = [(b.representative, b.size, b.eps) for b in blocks]
    assert summary == [((1, 2), 1, 2), ((1, 3), 2, 1), ((1, 4), 2, 1), ((3, 4), 1, 2)]
    assert blocks[1].unordered == {(1, 3), (2, 4)}
    assert blocks[2].unordered == {(1, 4), (2, 3)}


def test_pair_orbits_identity_n2():
    (block,) = pair_orbits(Permutation.identity(2))
    assert (block.representative, block.size, block.eps, block.cycle) == ((1, 2), 1, 1, ((1, 2),))


def test_pair_orbits_three_cycle():
    (block,) = pair_orbits(Permutation.from_cycles(3, [(1, 2, 3)]))
    assert block.size == 3 and block.eps == 1
    assert block.cycle == ((1, 2), (2, 3), (3, 1))
    assert block.unordered == {(1, 2), (2, 3), (1, 3)}


@given(st.integers(2, 7).flatmap(permutations))
def test_pair_orbits_invariants(s):
    blocks = pair_orbits(s)
    assert {frozenset(frozenset(p) for p in b.unordered) for b in blocks} == brute_orbit_blocks(s)
    assert sum(2 * b.size for b in blocks) == s.n * (s.n - 1)
    for b in blocks:
        i0, j0 = b.representative
        assert b.representative == min(b.ordered_pairs)
        # ordered orbit of the representative
        orbit, p = [], (i0, j0)
        while p not in orbit:
            orbit.append(p)
            p = (s(p[0]), s(p[1]))
        assert (b.eps == 2) == ((j0, i0) in orbit)
        if b.eps == 2:
            assert len(orbit) % 2 == 0
        assert len(orbit) == b.eps * b.size
        assert len(b.ordered_pairs) == 2 * b.size


def test_adjacent_lift_examples():
    assert len(adjacent_lift(Permutation.identity(3))) == 0
    assert str(adjacent_lift(Permutation((2, 1)))) == "r1"
    s = Permutation((3, 1, 2))
    w = adjacent_lift(s)
    assert len(w) == 2
    # re-evaluate the word as a product of transpositions
    prod = Permutation.identity(3)
    for letter in w:
        prod = compose(prod, Permutation.transposition(3, letter.index, letter.index + 1))
    assert prod == s


def inversions(s):
    return sum(1 for a, b in itertools.combinations(s.images, 2) if a > b)


@given(st.integers(1, 7).flatmap(permutations))
def test_lifts_realize_permutation(s):
    for lift in (adjacent_lift, bubble_lift):
        w = lift(s)
        assert all(letter.kind is Kind.RHO for letter in w)
        assert word_permutation(w) == s
        assert len(w) == inversions(s)
        v = normal_form(w)
        assert v.pure.is_identity() and v.perm == s


def test_lifts_differ_somewhere():
    assert any(adjacent_lift(s) != bubble_lift(s) for s in map(Permutation, itertools.permutations(range(1, 5))))


def test_one_line_parse():
    assert Permutation.parse("[2,1,3]") == Permutation((2, 1, 3))
    assert str(Permutation((2, 1, 3))) == "[2,1,3]"
    for bad in ["[1,1]", "2,1", "[a]", "[]"]:
        with pytest.raises(ParseError):
            Permutation.parse(bad)
