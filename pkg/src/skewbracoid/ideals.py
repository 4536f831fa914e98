"""Classification of strong left ideals and ideals of the bi-skew braces
induced by an abelian map.

Two routes are always computed and cross-checked:

* the predicate route: C1 = "[g, phi(h)] in H for all g, h" and
  C2 = "H normal in (G, .)", mapped to brace labels;
* the definition route: for each labelled brace (A, M), check directly that
  H is a subgroup of (G, M), normal in (G, A), and gamma-stable.

A disagreement would contradict the classification theorem and raises
InternalConsistencyError.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import braces, groups, maps
from .braces import OpTable
from .errors import InternalConsistencyError, PreconditionError
from .groups import FiniteGroup, Subgroup
from .maps import GroupMap

# brace labels, written (additive, multiplicative)
SLI_LABELS = ("(o,.)", "(o',.)", "(.,o)", "(.',o)")
IDEAL_LABELS = ("(.,o)", "(.,o')", "(o',.)")


@dataclass(eq=False)
class IdealVerdict:
    subgroup: Subgroup
    C1: bool
    C2: bool
    strong_left_ideal_of: tuple[str, ...]
    ideal_of: tuple[str, ...]

    def to_jsonable(self) -> dict:
        return {
            "subgroup": list(self.subgroup.members),
            "order": self.subgroup.order,
            "C1": self.C1,
            "C2": self.C2,
            "strong_left_ideal_of": list(self.strong_left_ideal_of),
            "ideal_of": list(self.ideal_of),
        }


def _brace_tables(G: FiniteGroup, psi: GroupMap) -> dict[str, OpTable]:
    dot = braces.table_of(G)
    circ = braces.circle_table(G, psi)
    return {
        ".": dot,
        "o": circ,
        ".'": braces.opposite_table(dot),
        "o'": braces.opposite_table(circ),
    }


_LABEL_PAIRS = {
    "(o,.)": ("o", "."),
    "(o',.)": ("o'", "."),
    "(.,o)": (".", "o"),
    "(.',o)": (".'", "o"),
    "(.,o')": (".", "o'"),
}


def _is_subgroup_under(t: OpTable, members: frozenset[int]) -> bool:
    inv = t.inverses()
    return all(int(t.op[a, b]) in members for a in members for b in members) and \
        all(int(inv[a]) in members for a in members)


def _is_normal_under(t: OpTable, members: frozenset[int]) -> bool:
    inv = t.inverses()
    return all(int(t.op[t.op[g, h], inv[g]]) in members
               for g in range(t.order) for h in members)


def _is_sli_direct(A: OpTable, M: OpTable, members: frozenset[int]) -> bool:
    if not _is_subgroup_under(M, members):
        return False
    if not _is_normal_under(A, members):
        return False
    ainv = A.inverses()
    return all(int(A.op[ainv[g], M.op[g, h]]) in members
               for g in range(A.order) for h in members)


def classify_subgroup(G: FiniteGroup, psi: GroupMap, H: Subgroup,
                      tables: dict[str, OpTable] | None = None) -> IdealVerdict:
    """Verdict for a single subgroup, predicate vs definition cross-checked."""
    if H.parent is not G:
        raise PreconditionError("subgroup does not belong to the given group")
    if not (psi.is_endomorphism() and psi.abelian_image):
        raise PreconditionError("psi must be an abelian endomorphism")
    phi = maps.phi_of(psi)
    phiH = sorted(set(int(phi.image_of[h]) for h in H.members))
    C1 = groups.commutator_condition(G, phiH, H)
    C2 = groups.is_normal(G, H)

    sli_pred = []
    if C1:
        sli_pred += ["(o,.)", "(o',.)"]
    if C2:
        sli_pred += ["(.,o)", "(.',o)"]
    ideal_pred = list(IDEAL_LABELS) if (C1 and C2) else []

    tables = tables or _brace_tables(G, psi)
    members = H.member_set()
    sli_direct = [label for label in SLI_LABELS
                  if _is_sli_direct(tables[_LABEL_PAIRS[label][0]],
                                    tables[_LABEL_PAIRS[label][1]], members)]
    ideal_direct = [label for label in IDEAL_LABELS
                    if _is_sli_direct(tables[_LABEL_PAIRS[label][0]],
                                      tables[_LABEL_PAIRS[label][1]], members)
                    and _is_normal_under(tables[_LABEL_PAIRS[label][1]], members)]

    if sorted(sli_pred) != sorted(sli_direct) or sorted(ideal_pred) != sorted(ideal_direct):
        raise InternalConsistencyError(
            "predicate and definition classifications disagree for "
            f"H={H.members}: predicate slis={sorted(sli_pred)} "
            f"direct={sorted(sli_direct)}, predicate ideals={sorted(ideal_pred)} "
            f"direct={sorted(ideal_direct)}")
    order = {label: i for i, label in enumerate(SLI_LABELS + IDEAL_LABELS)}
    return IdealVerdict(H, C1, C2,
                        tuple(sorted(sli_pred, key=order.get)),
                        tuple(sorted(ideal_pred, key=order.get)))


@dataclass(eq=False)
class NamedSubgroups:
    """The classifiable subgroups the theory names for a given (G, psi)."""

    group: FiniteGroup
    psi: GroupMap
    ker: Subgroup
    fix: Subgroup
    h_hat: Subgroup

    def ker_times(self, H1: Subgroup) -> Subgroup:
        """The set product (ker psi) * H1, for H1 <= fix psi."""
        if not H1.member_set() <= self.fix.member_set():
            raise PreconditionError("H1 must be a subgroup of fix psi")
        G = self.group
        prod = {int(G.mul[k, h]) for k in self.ker.members for h in H1.members}
        try:
            return Subgroup(G, tuple(sorted(prod)))
        except PreconditionError as exc:
            raise InternalConsistencyError(
                "ker psi * H1 failed its subgroup check") from exc


def named_subgroups(G: FiniteGroup, psi: GroupMap) -> NamedSubgroups:
    analysis = maps.map_analysis(psi)
    if analysis.fix is None:
        raise PreconditionError("named subgroups need an endomorphism")
    phi = maps.phi_of(psi)
    z = groups.center(G).member_set()
    hat = tuple(sorted(h for h in range(G.order) if int(phi.image_of[h]) in z))
    try:
        h_hat = Subgroup(G, hat)
    except PreconditionError as exc:
        raise InternalConsistencyError("h_hat failed its subgroup check") from exc
    if not analysis.fix.member_set() <= h_hat.member_set():
        raise InternalConsistencyError("fix psi is not contained in h_hat")
    return NamedSubgroups(G, psi, analysis.kernel, analysis.fix, h_hat)


def find_strong_left_ideals(G: FiniteGroup, psi: GroupMap) -> list[IdealVerdict]:
    """Verdicts for every subgroup of G, in canonical (order, members) order."""
    tables = _brace_tables(G, psi)
    return [classify_subgroup(G, psi, H, tables)
            for H in groups.enumerate_subgroups(G)]
