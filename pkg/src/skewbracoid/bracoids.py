"""Skew bracoids: a group acting transitively on another group such that

    g (+) (eta * mu) = (g (+) eta) * (g (+) e_N)^-1 * (g (+) mu).

Constructors take classified subgroups (the C1 / C2 routes), the phi-tower,
or quotient data; every constructed bracoid is verified exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import braces, groups, maps
from .braces import OpTable
from .errors import InternalConsistencyError, PreconditionError, WorkLimitError
from .groups import FiniteGroup, Subgroup
from .maps import GroupMap

CONTAINED_BRACE_ENUM_CAP = 64


@dataclass(frozen=True, eq=False)
class Bracoid:
    acting: OpTable
    target: OpTable
    action: np.ndarray  # [acting element, target element] -> target element
    provenance: dict

    def __post_init__(self):
        self.action.setflags(write=False)

    @property
    def acting_order(self) -> int:
        return self.acting.order

    @property
    def target_order(self) -> int:
        return self.target.order

    def __repr__(self):
        return (f"Bracoid(acting={self.acting_order}, target={self.target_order}, "
                f"via={self.provenance.get('construction')!r})")


@dataclass(frozen=True, eq=False)
class BracoidReport:
    action_valid: bool
    transitive: bool
    relation_holds: bool
    first_failure: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.action_valid and self.transitive and self.relation_holds

    def to_jsonable(self) -> dict:
        return {"action_valid": self.action_valid, "transitive": self.transitive,
                "relation_holds": self.relation_holds,
                "first_failure": list(self.first_failure) if self.first_failure else None}


def verify_bracoid(b: Bracoid) -> BracoidReport:
    """Exhaustive check of the action axioms, transitivity, and the bracoid
    relation; reports the lexicographically first failing witness."""
    act = b.action
    G, T = b.acting.op, b.target.op
    n, m = b.acting_order, b.target_order
    if act.shape != (n, m):
        raise PreconditionError("action table has the wrong shape")
    # e acts as the identity and the action respects the acting product
    if not np.array_equal(act[0], np.arange(m)):
        return BracoidReport(False, False, False, (0,))
    compat = act[G] == act[np.arange(n)[:, None, None], act[None, :, :]]
    if not compat.all():
        g, h, eta = np.argwhere(~compat)[0]
        return BracoidReport(False, False, False, (int(g), int(h), int(eta)))
    transitive = len(set(act[:, 0].tolist())) == m
    tinv = b.target.inverses()
    lhs = act[np.arange(n)[:, None, None], T[None, :, :]]
    t1 = T[act, tinv[act[:, 0]][:, None]]  # (g+eta) * (g+e)^-1
    rhs = T[t1[:, :, None], act[:, None, :]]
    bad = lhs != rhs
    if bad.any():
        g, eta, mu = np.argwhere(bad)[0]
        return BracoidReport(True, transitive, False, (int(g), int(eta), int(mu)))
    return BracoidReport(True, transitive, True)


def _require_valid(b: Bracoid) -> Bracoid:
    report = verify_bracoid(b)
    if not report.ok:
        raise InternalConsistencyError(
            f"constructed bracoid failed verification: {report.to_jsonable()}")
    return b


def bracoid_from_C1(G: FiniteGroup, psi: GroupMap, H: Subgroup,
                    opposite: bool = False) -> Bracoid:
    """(G, ., G/H, o, (+)) with g (+) xH = (gx)H, for H satisfying C1."""
    phi = maps.phi_of(psi)
    phiH = sorted(set(int(phi.image_of[h]) for h in H.members))
    if not groups.commutator_condition(G, phiH, H):
        raise PreconditionError("C1 fails: [G, phi(H)] is not contained in H")
    circ = braces.circle_table(G, psi)
    cs = groups.coset_space(G, H)
    cos = cs.coset_of
    reps = np.array(cs.representatives, dtype=np.int64)
    members = np.array(H.members, dtype=np.int64)
    # the o-cosets must coincide with the .-cosets
    if not np.array_equal(cos[circ.op[:, members]],
                          np.repeat(cos[:, None], len(members), axis=1)):
        raise InternalConsistencyError("y o H differs from yH")
    induced = cos[circ.op[reps[:, None], reps[None, :]]]
    if not np.array_equal(cos[circ.op], induced[cos[:, None], cos[None, :]]):
        raise InternalConsistencyError("circle operation ill-defined on cosets")
    label = "o'" if opposite else "o"
    target = OpTable(induced.T.copy() if opposite else induced, label)
    target.require_group()
    action = cos[G.mul[:, reps]]
    b = Bracoid(braces.table_of(G), target, action,
                {"construction": "from_C1", "subgroup": list(H.members),
                 "opposite": opposite, "C2": groups.is_normal(G, H)})
    return _require_valid(b)


def bracoid_from_C2(G: FiniteGroup, psi: GroupMap, H: Subgroup,
                    opposite: bool = False) -> Bracoid:
    """(G, o, G/H, ., (+)) with g (+) xH = (g o x)H, for H normal in (G, .)."""
    if not groups.is_normal(G, H):
        raise PreconditionError("C2 fails: H is not normal in (G, .)")
    circ = braces.circle_table(G, psi)
    cs = groups.coset_space(G, H)
    cos = cs.coset_of
    reps = np.array(cs.representatives, dtype=np.int64)
    induced = cos[G.mul[reps[:, None], reps[None, :]]]
    if not np.array_equal(cos[G.mul], induced[cos[:, None], cos[None, :]]):
        raise InternalConsistencyError("dot operation ill-defined on cosets")
    label = ".'" if opposite else "."
    target = OpTable(induced.T.copy() if opposite else induced, label)
    target.require_group()
    action = cos[circ.op[:, reps]]
    if not np.array_equal(cos[circ.op], action[:, cos]):
        raise InternalConsistencyError("action ill-defined on cosets")
    phi = maps.phi_of(psi)
    phiH = sorted(set(int(phi.image_of[h]) for h in H.members))
    provenance = {"construction": "from_C2", "subgroup": list(H.members),
                  "opposite": opposite,
                  "C1": groups.commutator_condition(G, phiH, H)}
    if G.factors is not None and len(G.factors) == 2:
        for k in (0, 1):
            if set(H.members) == set(groups.factor_embedding(G, k)):
                provenance["contained_candidates"] = [
                    groups.factor_embedding(G, 1 - k)]
    b = Bracoid(circ, target, action, provenance)
    return _require_valid(b)


def reduce_bracoid(b: Bracoid) -> Bracoid:
    """Quotient the acting group by the kernel of the action (the elements
    acting as the identity), yielding a faithful bracoid.  Idempotent."""
    act = b.action
    n, m = b.acting_order, b.target_order
    identity_row = np.arange(m)
    kernel = tuple(g for g in range(n) if np.array_equal(act[g], identity_row))
    if kernel == (0,):
        return b
    Gact = groups.from_table(b.acting.op)
    K = Subgroup(Gact, kernel)
    if not groups.is_normal(Gact, K):
        raise InternalConsistencyError("action kernel is not normal")
    cs = groups.coset_space(Gact, K)
    cos = cs.coset_of
    reps = np.array(cs.representatives, dtype=np.int64)
    induced = cos[b.acting.op[reps[:, None], reps[None, :]]]
    if not np.array_equal(cos[b.acting.op], induced[cos[:, None], cos[None, :]]):
        raise InternalConsistencyError("acting operation ill-defined on kernel cosets")
    # all members of a coset act identically
    if not np.array_equal(act, act[reps[cos]]):
        raise InternalConsistencyError("kernel cosets do not act uniformly")
    reduced = Bracoid(OpTable(induced, b.acting.label), b.target, act[reps].copy(),
                      {"construction": "reduced", "kernel": list(kernel),
                       "inner": b.provenance})
    return _require_valid(reduced)


def find_contained_brace(b: Bracoid, *,
                         enum_cap: int = CONTAINED_BRACE_ENUM_CAP) -> Subgroup | None:
    """A subgroup of the acting group whose restricted action on the target
    is regular, if one exists.

    Only subgroups of order exactly |target| can act regularly, so the
    search is restricted to those.  Candidates recorded by the constructor
    in provenance are tried first; below the enumeration cap the search
    then falls back to all subgroups in canonical (order, members) order.
    """
    m = b.target_order
    Gact = groups.from_table(b.acting.op)

    def regular(members) -> bool:
        vals = [int(b.action[g, 0]) for g in members]
        return len(set(vals)) == m

    tried = False
    for cand in b.provenance.get("contained_candidates", []):
        tried = True
        try:
            S = Subgroup(Gact, tuple(cand))
        except PreconditionError:
            continue
        if S.order == m and regular(S.members):
            return S
    if b.acting_order <= enum_cap:
        for S in groups.enumerate_subgroups(Gact):
            if S.order == m and regular(S.members):
                return S
        return None
    if tried:
        return None
    raise WorkLimitError(
        "acting group too large for subgroup enumeration and no candidates "
        "were recorded in provenance")


def phi_tower_bracoid(G: FiniteGroup, psi: GroupMap, n: int) -> Bracoid:
    """(G, ., phi^n(G), ., (+)_n) with g (+)_n phi^n(x) = phi^n(gx)."""
    if n < 0:
        raise PreconditionError("tower index must be non-negative")
    phin = maps.phi_power(psi, n)
    members = sorted(set(phin.tolist()))
    pos = np.full(G.order, -1, dtype=np.int64)
    for i, mem in enumerate(members):
        pos[mem] = i
    marr = np.array(members, dtype=np.int64)
    target = OpTable(pos[G.mul[marr[:, None], marr[None, :]]], ".")
    target.require_group()
    timg = pos[phin]  # x |-> target index of phi^n(x)
    action = np.empty((G.order, len(members)), dtype=np.int64)
    # well-definedness: phi^n(gx) must depend on x only through phi^n(x)
    full = timg[G.mul]  # [g, x] -> target index of phi^n(g x)
    rep_of = np.empty(len(members), dtype=np.int64)
    for t in range(len(members)):
        xs = np.flatnonzero(timg == t)
        rep_of[t] = xs[0]
        if not all(np.array_equal(full[:, x], full[:, xs[0]]) for x in xs[1:]):
            raise InternalConsistencyError("phi-tower action ill-defined")
    action = full[:, rep_of]
    b = Bracoid(braces.table_of(G), target, action,
                {"construction": "phi_tower", "n": n,
                 "contained_candidates": [members] if psi.idempotent else [],
                 "target_members": members})
    return _require_valid(b)
