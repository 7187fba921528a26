import itertools
import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from skewinc import catalog
from skewinc.errors import CycleError, NotAllComparable, NotBijective, NotOrderPreserving, UnknownElement
from skewinc.poset import (Poset, all_comparable_elements, automorphisms, chain,
                           check_vanishing_condition, count_multichains, multichains,
                           poset_from_covers, poset_length, validate_automorphism)
from skewinc.randomgen import random_poset

seeds = st.integers(0, 2**32 - 1)


def brute_multichains(p, n):
    return [t for t in itertools.product(p.elements, repeat=n + 1)
            if all(p.le(a, b) for a, b in zip(t, t[1:]))]


def test_two_crown_has_eight_pairs():
    X = catalog.two_crown()
    assert len(X.pairs) == 8
    assert list(X.covers) == [("1", "3"), ("1", "4"), ("2", "3"), ("2", "4")]


def test_singleton():
    p = poset_from_covers([1], [])
    assert p.leq == frozenset({(1, 1)})


def test_closure_adds_transitive_pair():
    p = poset_from_covers([1, 2, 3], [(1, 2), (2, 3)])
    assert p.le(1, 3) and not p.le(3, 1)
    assert list(p.covers) == [(1, 2), (2, 3)]


def test_cycle_is_reported():
    with pytest.raises(CycleError) as exc:
        poset_from_covers("abc", [("a", "b"), ("b", "c"), ("c", "a")])
    cyc = exc.value.cycle
    assert cyc[0] == cyc[-1] and set(cyc) == {"a", "b", "c"}


def test_self_loop_is_harmless():
    p = poset_from_covers([1, 2], [(1, 1), (1, 2)])
    assert p.le(1, 2)


def test_unknown_element():
    with pytest.raises(UnknownElement):
        poset_from_covers([1, 2], [(1, 3)])


@given(seeds)
def test_closure_idempotent(seed):
    p = random_poset(random.Random(seed), 6)
    q = poset_from_covers(p.elements, list(p.leq))
    assert q == p and q.leq == p.leq
    r = poset_from_covers(p.elements, p.covers)
    assert r.leq == p.leq


def test_multichains_small():
    assert list(multichains(chain(2), 1)) == [(1, 1), (1, 2), (2, 2)]
    assert len(multichains(catalog.two_crown(), 1)) == 8


def test_v_poset_weak_three_chains():
    # brute force gives 7, not the 10 sometimes quoted
    V = catalog.v_poset()
    got = multichains(V, 2)
    assert len(got) == 7
    assert sorted(got) == sorted(brute_multichains(V, 2))


@given(seeds, st.integers(0, 3))
def test_multichain_count_formula(seed, n):
    p = random_poset(random.Random(seed), 5)
    brute = brute_multichains(p, n)
    assert sorted(multichains(p, n)) == sorted(brute)
    # a weak chain is a strict chain with k+1 elements plus a choice of n-k repeats
    formula = sum(len(p.strict_chains(k + 1)) * comb(n, k) for k in range(n + 1))
    assert count_multichains(p, n) == formula == len(brute)


def test_automorphism_examples():
    X = catalog.two_crown()
    assert catalog.two_crown_swap(X)("3") == "4"
    V = catalog.v_poset()
    lam = catalog.v_swap(V)
    assert lam("2") == "3" and lam.inv("3") == "2"
    with pytest.raises(NotOrderPreserving) as exc:
        validate_automorphism(chain(2), {1: 2, 2: 1})
    assert exc.value.witness == (1, 2)
    with pytest.raises(NotBijective):
        validate_automorphism(chain(2), {1: 1, 2: 1})


def test_automorphism_counts():
    assert len(automorphisms(catalog.two_crown())) == 4
    assert len(automorphisms(catalog.v_poset())) == 2
    assert len(automorphisms(chain(4))) == 1
    # dihedral group of the 8-cycle Hasse diagram
    assert len(automorphisms(catalog.four_crown())) == 8
    antichain = poset_from_covers([1, 2, 3], [])
    assert len(automorphisms(antichain)) == 6


@given(seeds)
def test_automorphisms_brute_force(seed):
    p = random_poset(random.Random(seed), 5)
    auts = automorphisms(p)
    brute = 0
    for perm in itertools.permutations(p.elements):
        m = dict(zip(p.elements, perm))
        if all(p.le(m[a], m[b]) == p.le(a, b) for a in p for b in p):
            brute += 1
    assert len(auts) == brute == len(set(auts))


@given(seeds)
def test_no_strict_drift_under_automorphism(seed):
    p = random_poset(random.Random(seed), 6)
    for lam in automorphisms(p):
        for x in p:
            below, above, fixed = p.le(lam(x), x), p.le(x, lam(x)), lam(x) == x
            assert below == above == fixed


def test_all_comparable():
    assert set(all_comparable_elements(chain(3))) == {1, 2, 3}
    assert list(all_comparable_elements(catalog.two_crown())) == []
    assert list(all_comparable_elements(catalog.four_crown_with_bottom())) == ["0"]


def test_vanishing_condition():
    c = chain(3)
    assert check_vanishing_condition(c, automorphisms(c)[0], 1)
    V = catalog.v_poset()
    assert not check_vanishing_condition(V, catalog.v_swap(V), "1")
    C = catalog.four_crown_with_bottom()
    assert not check_vanishing_condition(C, catalog.four_crown_rotation(C), "0")
    X = catalog.two_crown()
    with pytest.raises(NotAllComparable):
        check_vanishing_condition(X, catalog.two_crown_swap(X), "1")


def test_length():
    assert poset_length(poset_from_covers([1], [])) == 0
    assert poset_length(catalog.two_crown()) == 1
    assert poset_length(chain(3)) == 2
    assert poset_length(catalog.four_crown_with_bottom()) == 2


def test_adjoin_bottom():
    p = catalog.two_crown().adjoin_bottom("0")
    assert all(p.le("0", x) for x in p)
    assert len(p) == 5 and p.elements[0] == "0"


def test_interval_and_covers():
    c = chain(3)
    assert list(c.interval(1, 3)) == [1, 2, 3]
    assert list(c.upper_covers(1)) == [2]
    assert isinstance(c, Poset)


@given(seeds)
def test_vanishing_condition_forces_identity(seed):
    p = random_poset(random.Random(seed), 5).adjoin_bottom(0)
    for lam in automorphisms(p):
        assert check_vanishing_condition(p, lam, 0) == lam.is_identity
