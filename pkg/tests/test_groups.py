import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewbracoid import groups
from skewbracoid.errors import InternalConsistencyError, PreconditionError

from conftest import brute_force_subgroups


def test_cyclic_matches_modular_addition():
    G = groups.cyclic(6)
    for a in range(6):
        for b in range(6):
            assert G.op(a, b) == (a + b) % 6
    assert G.inverse(2) == 4
    assert G.names[0] == "e" and G.names[1] == "g" and G.names[5] == "g^5"


def test_dihedral_relations():
    n = 4
    G = groups.dihedral(n)
    r, s = G.index_of("r"), G.index_of("s")
    # r^n = s^2 = (rs)^2 = e
    x = 0
    for _ in range(n):
        x = G.op(x, r)
    assert x == 0
    assert G.op(s, s) == 0
    rs = G.op(r, s)
    assert G.op(rs, rs) == 0
    # s r = r^-1 s
    assert G.op(s, r) == G.op(G.inverse(r), s)
    assert G.names[G.op(r, s)] == "rs"


def test_symmetric_composition_convention():
    G = groups.symmetric(3)
    perms = groups.symmetric_perms(3)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            composed = tuple(p[q[x]] for x in range(3))  # (p*q)(x) = p(q(x))
            assert perms[G.op(i, j)] == composed
    assert perms[0] == (0, 1, 2)  # identity at index 0


def test_symmetric_generators_generate():
    G = groups.symmetric(4)
    assert len(groups.closure(G, G.generators)) == 24


def test_identity_is_index_zero_everywhere():
    for G in (groups.cyclic(5), groups.dihedral(3), groups.symmetric(3)):
        n = G.order
        assert np.array_equal(G.mul[0], np.arange(n))
        assert np.array_equal(G.mul[:, 0], np.arange(n))
        for g in range(n):
            assert G.op(g, G.inverse(g)) == 0


def test_bad_table_rejected():
    with pytest.raises(PreconditionError):
        groups.from_table([[0, 1], [1, 1]])  # not a Latin square
    with pytest.raises(PreconditionError):
        groups.from_table([[1, 0], [0, 1]])  # identity not at 0


def test_direct_product_coordinates():
    A, B = groups.cyclic(4), groups.cyclic(2)
    G = groups.direct_product(A, B)
    assert G.order == 8
    for i1, j1, i2, j2 in itertools.product(range(4), range(2), range(4), range(2)):
        x = i1 + 4 * j1
        y = i2 + 4 * j2
        assert G.op(x, y) == (i1 + i2) % 4 + 4 * ((j1 + j2) % 2)
    assert G.names[1 + 4 * 1] == "(g,g)"
    assert groups.factor_embedding(G, 0) == [0, 1, 2, 3]
    assert groups.factor_embedding(G, 1) == [0, 4]
    assert groups.project_to_factor(G, 0, 7) == 3
    assert groups.project_to_factor(G, 1, 7) == 1


def test_semidirect_gives_dihedral():
    base = groups.cyclic(5)
    acting = groups.cyclic(2)
    inv = [(5 - i) % 5 for i in range(5)]
    G = groups.semidirect(base, acting, [list(range(5)), inv])
    D = groups.dihedral(5)
    # same indexing convention: r^i at i, r^i s at 5+i
    assert np.array_equal(G.mul, D.mul)


def test_semidirect_rejects_bad_action():
    base = groups.cyclic(4)
    acting = groups.cyclic(2)
    with pytest.raises(PreconditionError):
        groups.semidirect(base, acting, [list(range(4)), [0, 2, 1, 3]])
    with pytest.raises(PreconditionError):
        # nontrivial action of the identity
        groups.semidirect(base, acting, [[0, 3, 2, 1], list(range(4))])


def test_build_group_specs():
    assert groups.build_group({"kind": "cyclic", "n": 7}).order == 7
    assert groups.build_group({"kind": "dihedral", "n": 4}).order == 8
    assert groups.build_group({"kind": "symmetric", "n": 4}).order == 24
    G = groups.build_group({"kind": "product",
                            "factors": [{"kind": "cyclic", "n": 2},
                                        {"kind": "cyclic", "n": 3}]})
    assert G.order == 6 and G.is_abelian()
    with pytest.raises(PreconditionError):
        groups.build_group({"kind": "cyclic", "n": 100}, order_cap=50)
    with pytest.raises(PreconditionError):
        groups.build_group({"kind": "mystery"})


@pytest.mark.parametrize("builder,expected", [
    (lambda: groups.dihedral(4), 10),
    (lambda: groups.symmetric(3), 6),
    (lambda: groups.cyclic(4), 3),
])
def test_subgroup_enumeration_counts(builder, expected):
    G = builder()
    subs = groups.enumerate_subgroups(G)
    assert len(subs) == expected
    assert sorted(s.members for s in subs) == sorted(brute_force_subgroups(G))


def test_subgroup_validation():
    G = groups.dihedral(4)
    with pytest.raises(PreconditionError):
        groups.Subgroup(G, (0, 1))  # not closed: r has order 4
    with pytest.raises(PreconditionError):
        groups.Subgroup(G, (1, 2))  # missing the identity
    H = groups.Subgroup(G, (0, 4))
    assert H.order == 2 and 4 in H and 1 not in H


def test_closure_matches_naive_word_enumeration():
    G = groups.symmetric(3)
    for gens in [(1,), (3,), (1, 3), ()]:
        # words up to length |G| over the generators and their inverses
        reachable = {0}
        alphabet = set(gens) | {int(G.inv[g]) for g in gens}
        for _ in range(G.order):
            reachable |= {int(G.mul[x, g]) for x in reachable for g in alphabet}
        assert set(groups.closure(G, gens)) == reachable


def test_center_and_normality():
    G = groups.dihedral(4)
    assert groups.center(G).members == (0, 2)  # {e, r^2}
    rot = groups.subgroup_generated(G, [1])
    assert groups.is_normal(G, rot)
    refl = groups.subgroup_generated(G, [4])
    assert not groups.is_normal(G, refl)
    S = groups.symmetric(3)
    assert groups.center(S).members == (0,)


def test_commutator_condition():
    G = groups.dihedral(4)
    zentrum = groups.center(G)
    # [G, G] = <r^2> for D4, so commutators always land in the center
    assert groups.commutator_condition(G, range(G.order), zentrum)
    refl = groups.subgroup_generated(G, [4])
    assert not groups.commutator_condition(G, range(G.order), refl)


def test_coset_space_partitions():
    G = groups.dihedral(4)
    H = groups.subgroup_generated(G, [5])  # <rs>
    cs = groups.coset_space(G, H)
    assert cs.size == 4
    assert sorted(cs.coset_of.tolist()).count(0) == H.order
    for g in range(G.order):
        for h in H.members:
            assert cs.coset_of[G.op(g, h)] == cs.coset_of[g]
    # representatives are the minimal member of their coset
    for c, rep in enumerate(cs.representatives):
        assert rep == min(np.flatnonzero(cs.coset_of == c))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 4, 5, 6]), st.lists(st.integers(0, 11), max_size=3))
def test_closure_is_always_a_subgroup(n, gens):
    G = groups.dihedral(n)
    gens = [g % G.order for g in gens]
    H = groups.subgroup_generated(G, gens)
    assert G.order % H.order == 0
    mset = H.member_set()
    assert all(int(G.mul[a, b]) in mset for a in H.members for b in H.members)
