import numpy as np
import pytest

from skewbracoid import braces, groups, maps
from skewbracoid.errors import InternalConsistencyError, PreconditionError


def d4_setup():
    G = groups.dihedral(4)
    psi = maps.make_map(G, G, {"r": "rs", "s": "e"})
    return G, psi


def brace_oracle(A, M):
    """Naive triple loop for g o (h . k) = (g o h) . g^-1 . (g o k)."""
    n = A.shape[0]
    ainv = [int(np.argmax(A[g] == 0)) for g in range(n)]
    for g in range(n):
        for h in range(n):
            for k in range(n):
                lhs = M[g, A[h, k]]
                rhs = A[A[M[g, h], ainv[g]], M[g, k]]
                if lhs != rhs:
                    return (g, h, k)
    return None


def test_circle_table_matches_pointwise_formula():
    G, psi = d4_setup()
    circ = braces.circle_table(G, psi)
    for g in range(8):
        for h in range(8):
            assert circ.op[g, h] == maps.circle_product(G, psi, g, h)
    assert circ.op[G.index_of("r"), G.index_of("s")] == G.index_of("r^3s")


def test_circle_inverse_closed_form():
    G, psi = d4_setup()
    circ = braces.circle_table(G, psi)
    for g in range(8):
        gbar = braces.circle_inverse(G, psi, g)
        assert circ.op[g, gbar] == 0 and circ.op[gbar, g] == 0


def test_opposite_table_is_involution():
    G, _ = d4_setup()
    t = braces.table_of(G)
    opp = braces.opposite_table(t)
    assert opp.label == ".'"
    assert np.array_equal(braces.opposite_table(opp).op, t.op)
    assert opp.op[1, 4] == t.op[4, 1]


def test_verify_brace_agrees_with_oracle():
    G, psi = d4_setup()
    dot = braces.table_of(G)
    circ = braces.circle_table(G, psi)
    for A, M in [(dot, circ), (circ, dot), (braces.opposite_table(dot), circ),
                 (braces.opposite_table(circ), dot)]:
        rep = braces.verify_brace(A, M)
        assert rep.holds and rep.checked == "exhaustive"
        assert brace_oracle(A.op, M.op) is None


def test_verify_brace_failure_witness_matches_oracle():
    # dihedral of order 12 admits abelian maps whose opposite pair fails
    G = groups.dihedral(6)
    failing = None
    for psi in maps.enumerate_abelian_maps(G):
        A = braces.opposite_table(braces.table_of(G))
        M = braces.opposite_table(braces.circle_table(G, psi))
        rep = braces.verify_brace(A, M)
        if not rep.holds:
            failing = (A, M, rep)
            break
    assert failing is not None
    A, M, rep = failing
    assert rep.failure == brace_oracle(A.op, M.op)


def test_verify_brace_sampled_path():
    G, psi = d4_setup()
    dot = braces.table_of(G)
    circ = braces.circle_table(G, psi)
    rep = braces.verify_brace(dot, circ, exhaustive_cap=0)
    assert rep.holds and rep.checked == "sampled"


def test_make_brace_and_braces_from_map():
    G, psi = d4_setup()
    left, right = braces.braces_from_map(G, psi)
    assert left.additive.label == "." and left.multiplicative.label == "o"
    assert right.additive.label == "o" and right.multiplicative.label == "."
    bad = np.array(G.mul)
    bad[1, 1] = 0  # breaks the Latin property
    with pytest.raises(PreconditionError):
        braces.make_brace(braces.OpTable(bad, "."), left.multiplicative)


def test_gamma_family_values_and_failure():
    G, psi = d4_setup()
    brace, _ = braces.braces_from_map(G, psi)
    gamma = braces.gamma_family(brace)
    circ = brace.multiplicative.op
    for g in range(8):
        for h in range(8):
            assert gamma[g, h] == G.op(G.inverse(g), int(circ[g, h]))
    # gamma of a non-brace pair must be rejected
    klein = groups.direct_product(groups.cyclic(2), groups.cyclic(2))
    mismatch = braces.SkewBrace(braces.table_of(groups.cyclic(4)),
                                braces.table_of(klein))
    with pytest.raises(PreconditionError):
        braces.gamma_family(braces.SkewBrace(
            braces.table_of(G), braces.OpTable(np.array(G.mul[::-1]), "x")))
    del mismatch


def test_brace_block_depths_and_pairwise_relation():
    G, psi = d4_setup()
    tables = braces.brace_block(psi, 3)
    assert [t.label for t in tables] == [".", "o", "o_2", "o_3"]
    assert np.array_equal(tables[1].op, braces.circle_table(G, psi).op)
    for tm in tables:
        for tn in tables:
            assert brace_oracle(tm.op, tn.op) is None
    with pytest.raises(PreconditionError):
        braces.brace_block(psi, 99)


def test_quotient_brace_by_center():
    G, psi = d4_setup()
    brace, _ = braces.braces_from_map(G, psi)
    q = braces.quotient_brace(brace, (0, 2))  # <r^2>, an ideal here
    assert q.order == 4
    assert brace_oracle(q.additive.op, q.multiplicative.op) is None


def test_quotient_brace_rejects_bad_subset():
    G, psi = d4_setup()
    brace, _ = braces.braces_from_map(G, psi)
    with pytest.raises(PreconditionError):
        braces.quotient_brace(brace, (0, 1))  # not even a subgroup
