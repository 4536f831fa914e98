"""Finite groups as dense Cayley tables over integer element indices.

Every group lives on the index set ``0..order-1`` with the identity fixed at
index 0.  Multiplication is a dense ``order x order`` table, so all later
verification sweeps (brace relations, bracoid relations, braid relations)
reduce to fancy indexing into numpy arrays.

Element ordering is construction-defined and stable:

* cyclic n:      ``g^i`` at index i
* dihedral n:    ``r^i`` at index i, ``r^i s`` at index n+i
* symmetric n:   permutations of ``0..n-1`` in lexicographic one-line order
* products:      pair ``(i1, i2)`` at index ``i1 + order1 * i2``
* semidirect:    pair ``(b, a)`` at index ``b + |base| * a``
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import InternalConsistencyError, PreconditionError, WorkLimitError

DEFAULT_ORDER_CAP = 10_000
ASSOC_EXHAUSTIVE_CAP = 200
ASSOC_SAMPLE_TRIPLES = 100_000
SUBGROUP_WORK_LIMIT = 10**6
SUBGROUP_COMPLETE_ORDER = 64


def verify_group_table(mul: np.ndarray, *, seed: int = 0) -> None:
    """Check the group axioms on a candidate Cayley table.

    Identity must sit at index 0.  Associativity is exhaustive up to order
    ``ASSOC_EXHAUSTIVE_CAP`` and sampled (fixed seed) above that.
    Raises PreconditionError on any failure.
    """
    n = mul.shape[0]
    if mul.shape != (n, n):
        raise PreconditionError("multiplication table must be square")
    if mul.min() < 0 or mul.max() >= n:
        raise PreconditionError("multiplication table is not closed")
    idx = np.arange(n)
    if not (np.array_equal(mul[0], idx) and np.array_equal(mul[:, 0], idx)):
        raise PreconditionError("index 0 is not a two-sided identity")
    # every row must contain the identity somewhere (existence of inverses)
    if not np.all((mul == 0).any(axis=1)):
        raise PreconditionError("some element has no right inverse")
    if n <= ASSOC_EXHAUSTIVE_CAP:
        a = idx[:, None, None]
        b = idx[None, :, None]
        c = idx[None, None, :]
        if not np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]]):
            raise PreconditionError("associativity fails")
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, ASSOC_SAMPLE_TRIPLES))
        if not np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]]):
            raise PreconditionError("associativity fails (sampled)")


def _inverses(mul: np.ndarray) -> np.ndarray:
    return np.argmax(mul == 0, axis=1).astype(np.int64)


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """An immutable finite group: Cayley table, inverses, display names."""

    mul: np.ndarray
    inv: np.ndarray
    names: tuple[str, ...]
    generators: tuple[int, ...] | None = None
    factors: tuple["FiniteGroup", ...] | None = None  # direct-product metadata

    def __post_init__(self):
        self.mul.setflags(write=False)
        self.inv.setflags(write=False)
        if len(set(self.names)) != len(self.names):
            raise PreconditionError("element names must be pairwise distinct")

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    identity = 0

    def op(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def conjugate(self, g: int, h: int) -> int:
        """g h g^-1"""
        return int(self.mul[self.mul[g, h], self.inv[g]])

    def commutator(self, g: int, h: int) -> int:
        """g h g^-1 h^-1"""
        return int(self.mul[self.mul[g, h], self.mul[self.inv[g], self.inv[h]]])

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise PreconditionError(f"no element named {name!r}") from None

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


# ---------------------------------------------------------------------------
# builders


def from_table(mul, names=None, generators=None, *, seed: int = 0) -> FiniteGroup:
    """Build a group from an explicit Cayley table, verifying the axioms."""
    table = np.asarray(mul, dtype=np.int64)
    verify_group_table(table, seed=seed)
    n = table.shape[0]
    if names is None:
        names = tuple(f"a{i}" for i in range(n))
    else:
        names = tuple(names)
        if len(names) != n:
            raise PreconditionError("names length does not match order")
    gens = tuple(int(g) for g in generators) if generators is not None else None
    if gens is not None and any(g < 0 or g >= n for g in gens):
        raise PreconditionError("generator index out of range")
    return FiniteGroup(table, _inverses(table), names, gens)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise PreconditionError("cyclic order must be positive")
    idx = np.arange(n)
    mul = (idx[:, None] + idx[None, :]) % n
    names = ["e"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    return FiniteGroup(mul.astype(np.int64), _inverses(mul), tuple(names),
                       (1,) if n > 1 else (0,))


def _dihedral_name(i: int, refl: bool, n: int) -> str:
    if not refl:
        return "e" if i == 0 else ("r" if i == 1 else f"r^{i}")
    return "s" if i == 0 else ("rs" if i == 1 else f"r^{i}s")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n with presentation r^n = s^2 = (rs)^2 = e."""
    if n < 1:
        raise PreconditionError("dihedral parameter must be positive")
    order = 2 * n
    mul = np.empty((order, order), dtype=np.int64)
    for a in range(order):
        i, p = a % n, a // n
        for b in range(order):
            j, q = b % n, b // n
            # r^i s^p * r^j s^q = r^(i + (-1)^p j) s^(p+q)
            k = (i + (j if p == 0 else -j)) % n
            mul[a, b] = k + n * ((p + q) % 2)
    names = tuple(_dihedral_name(a % n, a >= n, n) for a in range(order))
    return FiniteGroup(mul, _inverses(mul), names, (1, n))


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group on 0..n-1; composition (s*t)(x) = s(t(x))."""
    if n < 1 or n > 8:
        raise PreconditionError("symmetric group builder supports 1 <= n <= 8")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    order = len(perms)
    mul = np.empty((order, order), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            mul[i, j] = index[tuple(p[q[k]] for k in range(n))]
    names = tuple("".join(map(str, p)) for p in perms)
    if n == 1:
        gens: tuple[int, ...] = (0,)
    else:
        transposition = tuple([1, 0] + list(range(2, n)))
        ncycle = tuple(list(range(1, n)) + [0])
        gens = (index[transposition], index[ncycle])
    return FiniteGroup(mul, _inverses(mul), names, gens)


def symmetric_perms(n: int) -> list[tuple[int, ...]]:
    """One-line permutations in the same order the symmetric builder uses."""
    return list(itertools.permutations(range(n)))


def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    """Direct product; index encodes (i1, .., ik) with the first factor fastest."""
    if len(groups) < 2:
        raise PreconditionError("direct product needs at least two factors")
    orders = [g.order for g in groups]
    total = 1
    for o in orders:
        total *= o
    coords = np.empty((total, len(groups)), dtype=np.int64)
    rem = np.arange(total)
    for k, o in enumerate(orders):
        coords[:, k] = rem % o
        rem = rem // o
    weights = np.cumprod([1] + orders[:-1])
    mul = np.zeros((total, total), dtype=np.int64)
    for k, g in enumerate(groups):
        mul += weights[k] * g.mul[coords[:, k][:, None], coords[:, k][None, :]]
    names = tuple(
        "(" + ",".join(groups[k].names[coords[i, k]] for k in range(len(groups))) + ")"
        for i in range(total)
    )
    gens = []
    for k, g in enumerate(groups):
        for gen in g.generators or ():
            gens.append(int(weights[k] * gen))
    return FiniteGroup(mul, _inverses(mul), names, tuple(gens), tuple(groups))


def factor_embedding(G: FiniteGroup, k: int) -> list[int]:
    """Indices of the embedded k-th factor of a direct product."""
    if G.factors is None:
        raise PreconditionError("group is not a direct product")
    orders = [f.order for f in G.factors]
    weight = 1
    for o in orders[:k]:
        weight *= o
    return [weight * i for i in range(orders[k])]


def project_to_factor(G: FiniteGroup, k: int, idx: int) -> int:
    """Coordinate of element `idx` in the k-th factor of a direct product."""
    if G.factors is None:
        raise PreconditionError("group is not a direct product")
    for j, f in enumerate(G.factors):
        coord = idx % f.order
        idx //= f.order
        if j == k:
            return coord
    raise PreconditionError("factor index out of range")


def semidirect(base: FiniteGroup, acting: FiniteGroup, action) -> FiniteGroup:
    """Semidirect product base x| acting.

    `action` lists, for each acting element, the image array of an
    automorphism of `base`; the list must itself be a homomorphism from
    the acting group into Aut(base).  Both conditions are verified.
    """
    action = [np.asarray(a, dtype=np.int64) for a in action]
    if len(action) != acting.order:
        raise PreconditionError("need one automorphism per acting element")
    nb = base.order
    for a in action:
        if sorted(a.tolist()) != list(range(nb)):
            raise PreconditionError("action entry is not a permutation of the base")
        if not np.array_equal(a[base.mul], base.mul[a[:, None], a[None, :]]):
            raise PreconditionError("action entry is not an automorphism of the base")
    if not np.array_equal(action[0], np.arange(nb)):
        raise PreconditionError("acting identity must act trivially")
    for x in range(acting.order):
        for y in range(acting.order):
            if not np.array_equal(action[acting.op(x, y)], action[x][action[y]]):
                raise PreconditionError("action is not a homomorphism from the acting group")
    total = nb * acting.order
    mul = np.empty((total, total), dtype=np.int64)
    for g in range(total):
        b1, a1 = g % nb, g // nb
        for h in range(total):
            b2, a2 = h % nb, h // nb
            mul[g, h] = base.op(b1, int(action[a1][b2])) + nb * acting.op(a1, a2)
    names = [f"({base.names[g % nb]},{acting.names[g // nb]})"
             for g in range(total)]
    gens = list(base.generators or ()) + [nb * a for a in (acting.generators or ())]
    return FiniteGroup(mul, _inverses(mul), tuple(names), tuple(gens))


def _spec_order(spec: dict) -> int:
    kind = spec.get("kind")
    if kind == "cyclic":
        return int(spec["n"])
    if kind == "dihedral":
        return 2 * int(spec["n"])
    if kind == "symmetric":
        import math

        return math.factorial(int(spec["n"]))
    if kind == "product":
        out = 1
        for f in spec["factors"]:
            out *= _spec_order(f)
        return out
    if kind == "semidirect":
        return _spec_order(spec["base"]) * _spec_order(spec["acting"])
    if kind == "table":
        return len(spec["mul"])
    raise PreconditionError(f"unknown group spec kind {kind!r}")


def build_group(spec: dict, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build a group from a GroupSpec dict (see the JSON interface docs)."""
    if _spec_order(spec) > order_cap:
        raise PreconditionError(
            f"requested order {_spec_order(spec)} exceeds cap {order_cap}")
    kind = spec["kind"]
    if kind == "cyclic":
        return cyclic(int(spec["n"]))
    if kind == "dihedral":
        return dihedral(int(spec["n"]))
    if kind == "symmetric":
        return symmetric(int(spec["n"]))
    if kind == "product":
        return direct_product(*(build_group(f, order_cap=order_cap)
                                for f in spec["factors"]))
    if kind == "semidirect":
        base = build_group(spec["base"], order_cap=order_cap)
        acting = build_group(spec["acting"], order_cap=order_cap)
        return semidirect(base, acting, spec["action"])
    if kind == "table":
        return from_table(spec["mul"], spec.get("names"), spec.get("generators"))
    raise PreconditionError(f"unknown group spec kind {kind!r}")


# ---------------------------------------------------------------------------
# subgroups and cosets


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        mem = tuple(sorted(set(int(m) for m in self.members)))
        object.__setattr__(self, "members", mem)
        G = self.parent
        if any(m < 0 or m >= G.order for m in mem):
            raise PreconditionError("subgroup member index out of range")
        mset = set(mem)
        if 0 not in mset:
            raise PreconditionError("subgroup must contain the identity")
        for a in mem:
            if int(G.inv[a]) not in mset:
                raise PreconditionError("subgroup not closed under inversion")
            for b in mem:
                if int(G.mul[a, b]) not in mset:
                    raise PreconditionError("subgroup not closed under multiplication")
        if G.order % len(mem) != 0:
            raise InternalConsistencyError("Lagrange violated by a closed subset")

    @property
    def order(self) -> int:
        return len(self.members)

    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __contains__(self, g: int) -> bool:
        return int(g) in self.member_set()

    def __repr__(self):
        names = ",".join(self.parent.names[m] for m in self.members[:6])
        more = ",..." if self.order > 6 else ""
        return f"Subgroup({{{names}{more}}}, order={self.order})"


def closure(G: FiniteGroup, gens) -> tuple[int, ...]:
    """Member tuple of the smallest subgroup containing `gens`."""
    members = {0}
    frontier = [0]
    gens = [int(g) for g in gens]
    for g in gens:
        if g < 0 or g >= G.order:
            raise PreconditionError("generator index out of range")
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = int(G.mul[x, g])
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    # positive words in the generators; in a finite group this already
    # contains all inverses
    return tuple(sorted(members))


def subgroup_generated(G: FiniteGroup, gens) -> Subgroup:
    return Subgroup(G, closure(G, gens))


def enumerate_subgroups(G: FiniteGroup, *, work_limit: int = SUBGROUP_WORK_LIMIT) -> list[Subgroup]:
    """All subgroups of G, each once, sorted by (order, member tuple).

    Breadth-first closure over generator extensions; complete for any order
    the work limit admits (guaranteed for order <= 64).
    """
    trivial = (0,)
    seen = {trivial}
    queue = [trivial]
    work = 0
    while queue:
        current = queue.pop()
        cset = set(current)
        for x in range(G.order):
            if x in cset:
                continue
            ext = closure(G, list(current) + [x])
            work += len(ext)
            if work > work_limit:
                raise WorkLimitError("subgroup enumeration work limit exceeded")
            if ext not in seen:
                seen.add(ext)
                queue.append(ext)
    subs = [Subgroup(G, members) for members in seen]
    subs.sort(key=lambda s: (s.order, s.members))
    return subs


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    mset = H.member_set()
    return all(G.conjugate(g, h) in mset for g in range(G.order) for h in H.members)


def center(G: FiniteGroup) -> Subgroup:
    z = [g for g in range(G.order) if np.array_equal(G.mul[g], G.mul[:, g])]
    return Subgroup(G, tuple(z))


def commutator_condition(G: FiniteGroup, S, H: Subgroup) -> bool:
    """True iff the commutator [g, s] lies in H for every g in G, s in S."""
    mset = H.member_set()
    return all(G.commutator(g, int(s)) in mset
               for g in range(G.order) for s in S)


@dataclass(frozen=True, eq=False)
class CosetSpace:
    parent: FiniteGroup
    subgroup: Subgroup
    coset_of: np.ndarray
    representatives: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.representatives)


def coset_space(G: FiniteGroup, H: Subgroup) -> CosetSpace:
    """Left cosets gH with minimal-index representatives, in index order."""
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        c = len(reps)
        reps.append(g)
        for h in H.members:
            coset_of[int(G.mul[g, h])] = c
    if len(reps) * H.order != G.order:
        raise InternalConsistencyError("cosets do not partition the group")
    coset_of.setflags(write=False)
    return CosetSpace(G, H, coset_of, tuple(reps))
