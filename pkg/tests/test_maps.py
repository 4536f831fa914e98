import itertools

import numpy as np
import pytest

from skewbracoid import groups, maps
from skewbracoid.errors import PreconditionError, WorkLimitError


def d4_psi():
    G = groups.dihedral(4)
    return G, maps.make_map(G, G, {"r": "rs", "s": "e"})


def test_make_map_from_generators_matches_explicit_formula():
    G, psi = d4_psi()
    rs = G.index_of("rs")
    # psi(r^i s^j) = (rs)^i, so image is rs for odd i and e otherwise
    for a in range(8):
        i = a % 4
        assert psi(a) == (rs if i % 2 else 0)


def test_make_map_rejects_non_homomorphism():
    G = groups.dihedral(4)
    with pytest.raises(PreconditionError):
        # s^2 = e but the requested image r has order 4
        maps.make_map(G, G, {"r": "s", "s": "r"})
    with pytest.raises(PreconditionError):
        maps.make_map(G, G, [0] * 7)  # wrong length
    with pytest.raises(PreconditionError):
        maps.make_map(G, G, list(range(1, 9)))  # out of range / not a hom


def test_map_flags():
    G, psi = d4_psi()
    assert psi.abelian_image
    assert psi.idempotent
    assert not psi.fixed_point_free
    assert maps.trivial_map(G).fixed_point_free
    ident = maps.identity_map(G)
    assert not ident.abelian_image  # D4 is nonabelian
    assert ident.idempotent


def test_enumerate_abelian_maps_against_naive_search():
    G = groups.dihedral(4)
    found = maps.enumerate_abelian_maps(G)
    assert len(found) == len({tuple(f.image_of.tolist()) for f in found})

    # oracle: all 64 generator assignments, extended by the normal form
    # r^i s^j |-> a^i b^j and checked elementwise
    count = 0
    for a in range(8):
        for b in range(8):
            img = np.empty(8, dtype=np.int64)
            for g in range(8):
                i, j = g % 4, g // 4
                v = 0
                for _ in range(i):
                    v = G.op(v, a)
                for _ in range(j):
                    v = G.op(v, b)
                img[g] = v
            is_hom = all(img[G.op(x, y)] == G.op(img[x], img[y])
                         for x in range(8) for y in range(8))
            if not is_hom:
                continue
            image = set(img.tolist())
            if all(G.op(u, v) == G.op(v, u) for u in image for v in image):
                count += 1
    assert len(found) == count == 28


def test_enumerate_abelian_maps_work_limit():
    G = groups.symmetric(4)
    with pytest.raises(WorkLimitError):
        maps.enumerate_abelian_maps(G, candidate_cap=10)


def test_map_analysis_named_sets():
    G, psi = d4_psi()
    analysis = maps.map_analysis(psi)
    assert [G.names[m] for m in analysis.kernel.members] == ["e", "r^2", "s", "r^2s"]
    assert [G.names[m] for m in analysis.fix.members] == ["e", "rs"]
    assert analysis.image.members == (0, G.index_of("rs"))


def test_circle_product_hand_values():
    G, psi = d4_psi()
    r, s = G.index_of("r"), G.index_of("s")
    # worked by hand from g o h = g psi(g^-1) h psi(g):
    # r o r = r(rs)r(rs) = e,  r o s = r(rs)s(rs) = r^3 s,  s o s = e
    assert maps.circle_product(G, psi, r, r) == 0
    assert maps.circle_product(G, psi, r, s) == G.index_of("r^3s")
    assert maps.circle_product(G, psi, s, s) == 0
    # for g in ker psi the circle product degenerates to the group product
    for g in (0, 2, 4, 6):
        for h in range(8):
            assert maps.circle_product(G, psi, g, h) == G.op(g, h)


def test_phi_values_and_kernel():
    G, psi = d4_psi()
    phi = maps.phi_of(psi)
    for g in range(8):
        assert phi(g) == G.op(g, psi(G.inverse(g)))
    assert set(np.flatnonzero(phi.image_of == 0).tolist()) == {0, G.index_of("rs")}
    assert phi.image_subgroup().members == (0, 2, 4, 6)  # = ker psi here


def test_psi_iterate_recursion():
    G, psi = d4_psi()
    assert np.array_equal(maps.psi_iterate(psi, 0).image_of, np.zeros(8, dtype=np.int64))
    assert np.array_equal(maps.psi_iterate(psi, 1).image_of, psi.image_of)
    phi = maps.phi_of(psi).image_of
    prev = maps.psi_iterate(psi, 1).image_of
    for n in (2, 3, 4):
        cur = maps.psi_iterate(psi, n).image_of
        for g in range(8):
            assert cur[g] == G.op(psi(g), int(prev[phi[g]]))
        prev = cur
    with pytest.raises(PreconditionError):
        maps.psi_iterate(psi, -1)


def test_phi_power_is_composition():
    G, psi = d4_psi()
    phi = maps.phi_of(psi).image_of
    composed = np.arange(8)
    for n in range(5):
        assert np.array_equal(maps.phi_power(psi, n), composed)
        composed = phi[composed]


def test_product_swap_map_coordinates():
    G1 = groups.cyclic(4)
    G2 = groups.symmetric(3)
    alpha = maps.make_map(G1, G2, {"g": "102"})
    beta = maps.make_map(G2, G1, {"102": "g^2", "120": "e"})
    psi = maps.product_swap_map(alpha, beta)
    G = psi.domain
    assert G.order == 24
    for g1 in range(4):
        for g2 in range(6):
            got = psi(g1 + 4 * g2)
            assert got % 4 == beta(g2)
            assert got // 4 == alpha(g1)


def test_cyclic_chain_map():
    C2 = groups.cyclic(2)
    ident = maps.identity_map(C2)
    psi = maps.cyclic_chain_map([ident, ident, ident])
    G = psi.domain
    # coordinates are cyclically shifted by one slot
    for c0 in range(2):
        for c1 in range(2):
            for c2 in range(2):
                idx = c0 + 2 * c1 + 4 * c2
                assert psi(idx) == c2 + 2 * c0 + 4 * c1
    # a two-element chain coincides with the product swap
    C3 = groups.cyclic(3)
    a = maps.trivial_map(C2, C3)
    b = maps.trivial_map(C3, C2)
    assert np.array_equal(maps.cyclic_chain_map([a, b]).image_of,
                          maps.product_swap_map(a, b).image_of)


def test_left_regular_map():
    A = groups.cyclic(3)
    f = maps.left_regular_map(A)
    S = f.codomain
    assert S.order == 6
    perms = groups.symmetric_perms(3)
    image = {perms[m] for m in f.image_members()}
    assert image == {(0, 1, 2), (1, 2, 0), (2, 0, 1)}  # identity + both 3-cycles
    with pytest.raises(PreconditionError):
        maps.left_regular_map(groups.symmetric(3))
