"""Operation tables, the circle operation, and skew brace verification.

A skew (left) brace is one carrier with two group tables sharing identity 0
and satisfying  g o (h . k) = (g o h) . g^-1 . (g o k),  where the inverse
is taken in the additive table.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import groups, maps
from .errors import InternalConsistencyError, PreconditionError
from .groups import FiniteGroup, Subgroup
from .maps import GroupMap

TRIPLE_EXHAUSTIVE_CAP = 256
TRIPLE_SAMPLE_COUNT = 10**6
BRACE_BLOCK_BOUND = 8


@dataclass(frozen=True, eq=False)
class OpTable:
    """A binary operation on 0..order-1 as a dense table, with a label."""

    op: np.ndarray
    label: str

    def __post_init__(self):
        self.op.setflags(write=False)

    @property
    def order(self) -> int:
        return self.op.shape[0]

    def inverses(self) -> np.ndarray:
        return np.argmax(self.op == 0, axis=1).astype(np.int64)

    def is_group(self) -> bool:
        try:
            groups.verify_group_table(self.op)
        except PreconditionError:
            return False
        return True

    def require_group(self) -> "OpTable":
        groups.verify_group_table(self.op)
        return self

    def __repr__(self):
        return f"OpTable({self.label!r}, order={self.order})"


def table_of(G: FiniteGroup, label: str = ".") -> OpTable:
    return OpTable(G.mul, label)


def circle_table(G: FiniteGroup, psi: GroupMap, label: str = "o") -> OpTable:
    """Group table of g o h = g psi(g^-1) h psi(g)."""
    if not (psi.is_endomorphism() and psi.abelian_image):
        raise PreconditionError("circle operation requires psi in Ab(G)")
    n = G.order
    im = psi.image_of
    left = G.mul[np.arange(n), im[G.inv]]  # g psi(g^-1)
    circ = G.mul[G.mul[left[:, None], np.arange(n)[None, :]], im[:, None]]
    out = OpTable(circ, label)
    out.require_group()
    return out


def circle_inverse(G: FiniteGroup, psi: GroupMap, g: int) -> int:
    """Inverse of g under o, via the closed form psi(g) g^-1 psi(g^-1)."""
    im = psi.image_of
    gbar = int(G.mul[G.mul[im[g], G.inv[g]], im[G.inv[g]]])
    if maps.circle_product(G, psi, g, gbar) != 0 or \
            maps.circle_product(G, psi, gbar, g) != 0:
        raise InternalConsistencyError("closed-form circle inverse failed")
    return gbar


def opposite_table(t: OpTable) -> OpTable:
    return OpTable(t.op.T.copy(), t.label + "'")


@dataclass(frozen=True, eq=False)
class BraceReport:
    holds: bool
    checked: str  # "exhaustive" | "sampled"
    failure: tuple[int, int, int] | None = None

    def to_jsonable(self) -> dict:
        return {"holds": self.holds, "checked": self.checked,
                "failure": list(self.failure) if self.failure else None}


def _first_bad_triple(bad: np.ndarray) -> tuple[int, int, int]:
    flat = int(np.flatnonzero(bad.reshape(-1))[0])
    n = bad.shape[0]
    return (flat // (n * n), (flat // n) % n, flat % n)


def verify_brace(additive: OpTable, multiplicative: OpTable, *,
                 exhaustive_cap: int = TRIPLE_EXHAUSTIVE_CAP,
                 seed: int = 0) -> BraceReport:
    """Check the brace relation over all (or, above the cap, sampled) triples."""
    if additive.order != multiplicative.order:
        raise PreconditionError("carrier mismatch between the two tables")
    A, M = additive.op, multiplicative.op
    n = additive.order
    ainv = additive.inverses()
    idx = np.arange(n)
    if n <= exhaustive_cap:
        g = idx[:, None, None]
        lhs = M[g, A[None, :, :]]
        t1 = A[M, ainv[:, None]]  # (g o h) . g^-1
        rhs = A[t1[:, :, None], M[:, None, :]]
        bad = lhs != rhs
        if bad.any():
            return BraceReport(False, "exhaustive", _first_bad_triple(bad))
        return BraceReport(True, "exhaustive")
    rng = np.random.default_rng(seed)
    g, h, k = rng.integers(0, n, size=(3, TRIPLE_SAMPLE_COUNT))
    lhs = M[g, A[h, k]]
    rhs = A[A[M[g, h], ainv[g]], M[g, k]]
    bad = lhs != rhs
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        return BraceReport(False, "sampled", (int(g[i]), int(h[i]), int(k[i])))
    return BraceReport(True, "sampled")


@dataclass(frozen=True, eq=False)
class SkewBrace:
    additive: OpTable
    multiplicative: OpTable
    psi_provenance: GroupMap | None = None

    @property
    def order(self) -> int:
        return self.additive.order


def make_brace(additive: OpTable, multiplicative: OpTable,
               psi: GroupMap | None = None) -> SkewBrace:
    """Verify both group structures and the brace relation, then bundle them."""
    additive.require_group()
    multiplicative.require_group()
    report = verify_brace(additive, multiplicative)
    if not report.holds:
        raise PreconditionError(
            f"brace relation fails at triple {report.failure}")
    return SkewBrace(additive, multiplicative, psi)


def braces_from_map(G: FiniteGroup, psi: GroupMap) -> tuple[SkewBrace, SkewBrace]:
    """The bi-skew pair ((G,.,o), (G,o,.)) induced by psi in Ab(G)."""
    dot = table_of(G)
    circ = circle_table(G, psi)
    return make_brace(dot, circ, psi), make_brace(circ, dot, psi)


def gamma_family(brace: SkewBrace) -> np.ndarray:
    """gamma(g)[h] = g^-1 .A (g oM h), verified to be a homomorphism from
    the multiplicative group into automorphisms of the additive group."""
    A, M = brace.additive.op, brace.multiplicative.op
    n = brace.order
    ainv = brace.additive.inverses()
    gamma = A[ainv[:, None], M]
    # each gamma(g) must be an additive automorphism
    for g in range(n):
        row = gamma[g]
        if sorted(row.tolist()) != list(range(n)):
            raise PreconditionError("gamma(g) is not a permutation; invalid brace")
        if not np.array_equal(row[A], A[row[:, None], row[None, :]]):
            raise PreconditionError("gamma(g) is not an additive automorphism")
    # g |-> gamma(g) must be multiplicative
    idx = np.arange(n)
    if not np.array_equal(gamma[M], gamma[idx[:, None, None], gamma[None, :, :]]):
        raise PreconditionError("gamma is not a homomorphism")
    return gamma


def brace_block(psi: GroupMap, N: int, *, bound: int = BRACE_BLOCK_BOUND) -> list[OpTable]:
    """Tables o_0 .. o_N from the iterated maps, o_0 = the original product.

    Every ordered pair (o_m, o_n) is verified to satisfy the brace relation.
    """
    if N < 0 or N > bound:
        raise PreconditionError(f"block depth must lie in 0..{bound}")
    G = psi.domain
    tables = []
    for k in range(N + 1):
        psik = maps.psi_iterate(psi, k)
        label = "." if k == 0 else ("o" if k == 1 else f"o_{k}")
        tables.append(circle_table(G, psik, label=label) if k > 0
                      else table_of(G))
    for m, tm in enumerate(tables):
        for n_, tn in enumerate(tables):
            if m == n_:
                continue
            rep = verify_brace(tm, tn)
            if not rep.holds:
                raise InternalConsistencyError(
                    f"(G, o_{m}, o_{n_}) fails the brace relation at {rep.failure}")
    return tables


def quotient_brace(brace: SkewBrace, H) -> SkewBrace:
    """Both operations pushed down to the coset space of H.

    H is a member tuple or Subgroup whose underlying set must be an ideal of
    the brace; ill-definedness of either induced operation is reported as a
    precondition failure.
    """
    members = tuple(H.members) if isinstance(H, Subgroup) else tuple(sorted(set(H)))
    A = brace.additive.op
    n = brace.order
    coset_of = np.full(n, -1, dtype=np.int64)
    reps = []
    for g in range(n):
        if coset_of[g] >= 0:
            continue
        c = len(reps)
        reps.append(g)
        for h in members:
            coset_of[A[g, h]] = c
    if len(reps) * len(members) != n:
        raise PreconditionError("H does not partition the carrier into cosets")
    reps_arr = np.array(reps, dtype=np.int64)
    quotients = []
    for t in (brace.additive, brace.multiplicative):
        induced = coset_of[t.op[reps_arr[:, None], reps_arr[None, :]]]
        if not np.array_equal(coset_of[t.op], induced[coset_of[:, None], coset_of[None, :]]):
            raise PreconditionError(
                f"operation {t.label!r} is not well-defined on the cosets of H")
        quotients.append(OpTable(induced, t.label))
    return make_brace(quotients[0], quotients[1], brace.psi_provenance)
