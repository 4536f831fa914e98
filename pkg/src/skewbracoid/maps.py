"""Homomorphisms between finite groups, stored element-wise.

The central notion is an *abelian map*: a homomorphism whose image is an
abelian subgroup of the codomain.  An abelian endomorphism psi induces the
derived map phi(g) = g * psi(g^-1), the circle operation, and the iterated
maps psi_n; those live here, the operation tables they induce live in
`braces`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import groups
from .errors import InternalConsistencyError, PreconditionError, WorkLimitError
from .groups import FiniteGroup, Subgroup

ABELIAN_MAP_CANDIDATE_CAP = 10**8
PSI_ITERATE_BOUND = 32
LEFT_REGULAR_CAP = 6


@dataclass(eq=False)
class GroupMap:
    """A verified total map between finite groups.

    `image_of[g]` is the codomain index of the image of g.  The map is
    checked to be a homomorphism at construction; `abelian_image`,
    `idempotent` and `fixed_point_free` are computed flags (the latter two
    only for endomorphisms, else None).
    """

    domain: FiniteGroup
    codomain: FiniteGroup
    image_of: np.ndarray
    abelian_image: bool = False
    idempotent: bool | None = None
    fixed_point_free: bool | None = None
    provenance: str = "explicit"

    def __post_init__(self):
        im = np.asarray(self.image_of, dtype=np.int64)
        if im.shape != (self.domain.order,):
            raise PreconditionError("image array length must equal the domain order")
        if im.min() < 0 or im.max() >= self.codomain.order:
            raise PreconditionError("image index out of codomain range")
        lhs = im[self.domain.mul]
        rhs = self.codomain.mul[im[:, None], im[None, :]]
        if not np.array_equal(lhs, rhs):
            raise PreconditionError("map is not a homomorphism")
        im.setflags(write=False)
        self.image_of = im
        img = sorted(set(im.tolist()))
        cm = self.codomain.mul
        self.abelian_image = all(cm[a, b] == cm[b, a] for a in img for b in img)
        if self.is_endomorphism():
            self.idempotent = bool(np.array_equal(im[im], im))
            fix = np.flatnonzero(im == np.arange(self.domain.order))
            self.fixed_point_free = bool(fix.tolist() == [0])

    def is_endomorphism(self) -> bool:
        return self.domain is self.codomain or np.array_equal(
            self.domain.mul, self.codomain.mul)

    def __call__(self, g: int) -> int:
        return int(self.image_of[g])

    def image_members(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.image_of.tolist())))

    def is_abelian_map(self) -> bool:
        return self.abelian_image

    def __repr__(self):
        return (f"GroupMap(|G|={self.domain.order} -> |G'|={self.codomain.order}, "
                f"abelian_image={self.abelian_image})")


def trivial_map(G: FiniteGroup, Gp: FiniteGroup | None = None) -> GroupMap:
    Gp = Gp or G
    return GroupMap(G, Gp, np.zeros(G.order, dtype=np.int64), provenance="trivial")


def identity_map(G: FiniteGroup) -> GroupMap:
    return GroupMap(G, G, np.arange(G.order, dtype=np.int64), provenance="identity")


def _extend_generator_images(G: FiniteGroup, Gp: FiniteGroup,
                             gen_idx: list[int], gen_img: list[int]):
    """Propagate generator images over the whole group.

    Returns the full image array, or None if the assignment is inconsistent
    (cheap relation pruning; callers still run the full table check).
    """
    img = np.full(G.order, -1, dtype=np.int64)
    img[0] = 0
    for t, v in zip(gen_idx, gen_img):
        if img[t] >= 0 and img[t] != v:
            return None
        img[t] = v
    frontier = [0] + [t for t in gen_idx if t != 0]
    while frontier:
        nxt = []
        for g in frontier:
            for t, v in zip(gen_idx, gen_img):
                h = int(G.mul[g, t])
                w = int(Gp.mul[img[g], v])
                if img[h] < 0:
                    img[h] = w
                    nxt.append(h)
                elif img[h] != w:
                    return None
        frontier = nxt
    if (img < 0).any():
        return None  # generators do not generate G
    return img


def make_map(G: FiniteGroup, Gp: FiniteGroup, images, *,
             provenance: str = "explicit") -> GroupMap:
    """Build a verified GroupMap.

    `images` is either a full image array, or a dict from generator (index
    or element name) to image (index or name), which must extend to a
    homomorphism defined on all of G.
    """
    if isinstance(images, dict):
        gen_idx, gen_img = [], []
        for k, v in images.items():
            gen_idx.append(G.index_of(k) if isinstance(k, str) else int(k))
            gen_img.append(Gp.index_of(v) if isinstance(v, str) else int(v))
        img = _extend_generator_images(G, Gp, gen_idx, gen_img)
        if img is None:
            raise PreconditionError(
                "generator images do not extend to a homomorphism "
                "(or the given elements do not generate the domain)")
        return GroupMap(G, Gp, img, provenance=provenance)
    return GroupMap(G, Gp, np.asarray(images, dtype=np.int64), provenance=provenance)


def enumerate_abelian_maps(G: FiniteGroup, Gp: FiniteGroup | None = None, *,
                           candidate_cap: int = ABELIAN_MAP_CANDIDATE_CAP) -> list[GroupMap]:
    """All homomorphisms G -> G' with abelian image, by backtracking over
    generator images in lexicographic order."""
    Gp = Gp or G
    gens = G.generators
    if not gens:
        raise PreconditionError("domain group has no generator list")
    if Gp.order ** len(gens) > candidate_cap:
        raise WorkLimitError("abelian map search space exceeds candidate cap")
    out = []
    for assignment in itertools.product(range(Gp.order), repeat=len(gens)):
        img = _extend_generator_images(G, Gp, list(gens), list(assignment))
        if img is None:
            continue
        try:
            f = GroupMap(G, Gp, img, provenance="enumerated")
        except PreconditionError:
            continue
        if f.abelian_image:
            out.append(f)
    return out


@dataclass(eq=False)
class MapAnalysis:
    kernel: Subgroup
    image: Subgroup
    fix: Subgroup | None
    idempotent: bool | None
    fixed_point_free: bool | None


def map_analysis(f: GroupMap) -> MapAnalysis:
    """Kernel, image, and (for endomorphisms) fix psi = {g : psi(g) = g}."""
    ker = tuple(np.flatnonzero(f.image_of == 0).tolist())
    kernel = Subgroup(f.domain, ker)
    image = Subgroup(f.codomain, f.image_members())
    fix = None
    if f.is_endomorphism():
        fixed = tuple(np.flatnonzero(
            f.image_of == np.arange(f.domain.order)).tolist())
        try:
            fix = Subgroup(f.domain, fixed)
        except PreconditionError as exc:
            raise InternalConsistencyError(
                "fix psi failed its subgroup closure check") from exc
    return MapAnalysis(kernel, image, fix, f.idempotent, f.fixed_point_free)


def circle_product(G: FiniteGroup, psi: GroupMap, g: int, h: int) -> int:
    """g o h = g psi(g^-1) h psi(g), evaluated pointwise."""
    im = psi.image_of
    m = G.mul
    return int(m[m[m[g, im[G.inv[g]]], h], im[g]])


@dataclass(eq=False)
class PhiMap:
    """The derived map phi(g) = g psi(g^-1) of an abelian endomorphism.

    phi is a homomorphism from (G, o) to (G, .), with ker phi = fix psi;
    both facts are verified at construction.
    """

    psi: GroupMap
    image_of: np.ndarray

    def __call__(self, g: int) -> int:
        return int(self.image_of[g])

    def image_members(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.image_of.tolist())))

    def image_subgroup(self) -> Subgroup:
        return Subgroup(self.psi.domain, self.image_members())


def phi_of(psi: GroupMap) -> PhiMap:
    if not (psi.is_endomorphism() and psi.abelian_image):
        raise PreconditionError("phi requires an abelian endomorphism")
    G = psi.domain
    n = G.order
    im = psi.image_of
    phi = G.mul[np.arange(n), im[G.inv]]
    # phi(g o h) = phi(g) . phi(h), with o evaluated from its defining formula
    circ = G.mul[G.mul[phi[:, None], np.arange(n)[None, :]], im[:, None]]
    if not np.array_equal(phi[circ], G.mul[phi[:, None], phi[None, :]]):
        raise InternalConsistencyError("phi is not multiplicative on (G, o)")
    fix = set(np.flatnonzero(im == np.arange(n)).tolist())
    ker = set(np.flatnonzero(phi == 0).tolist())
    if fix != ker:
        raise InternalConsistencyError("ker phi differs from fix psi")
    phi.setflags(write=False)
    return PhiMap(psi, phi)


def phi_power(psi: GroupMap, n: int) -> np.ndarray:
    """Image array of phi composed with itself n times (n = 0 is identity)."""
    phi = phi_of(psi).image_of
    out = np.arange(psi.domain.order)
    for _ in range(n):
        out = phi[out]
    return out


def psi_iterate(psi: GroupMap, n: int, *, bound: int = PSI_ITERATE_BOUND) -> GroupMap:
    """The n-th iterated map: psi_0 trivial, psi_n(g) = psi(g) psi_{n-1}(phi(g))."""
    if not (psi.is_endomorphism() and psi.abelian_image):
        raise PreconditionError("psi_n requires an abelian endomorphism")
    if n < 0 or n > bound:
        raise PreconditionError(f"iteration index must lie in 0..{bound}")
    G = psi.domain
    phi = phi_of(psi).image_of
    current = np.zeros(G.order, dtype=np.int64)
    for _ in range(n):
        current = G.mul[psi.image_of, current[phi]]
    try:
        out = GroupMap(G, G, current, provenance=f"psi_{n}")
    except PreconditionError as exc:
        raise InternalConsistencyError("psi_n is not a homomorphism") from exc
    if not out.abelian_image:
        raise InternalConsistencyError("psi_n does not have abelian image")
    return out


def product_swap_map(alpha: GroupMap, beta: GroupMap) -> GroupMap:
    """psi(g1, g2) = (beta(g2), alpha(g1)) on the direct product G1 x G2."""
    if not (alpha.abelian_image and beta.abelian_image):
        raise PreconditionError("both inputs must be abelian maps")
    G1, G2 = alpha.domain, alpha.codomain
    if beta.domain is not G2 or beta.codomain is not G1:
        if beta.domain.order != G2.order or beta.codomain.order != G1.order or \
                not np.array_equal(beta.domain.mul, G2.mul) or \
                not np.array_equal(beta.codomain.mul, G1.mul):
            raise PreconditionError("alpha and beta domains/codomains do not pair up")
    G = groups.direct_product(G1, G2)
    n1 = G1.order
    idx = np.arange(G.order)
    g1, g2 = idx % n1, idx // n1
    img = beta.image_of[g2] + n1 * alpha.image_of[g1]
    out = GroupMap(G, G, img, provenance="product_swap")
    if not out.abelian_image:
        raise InternalConsistencyError("product-swap map lost the abelian image")
    return out


def cyclic_chain_map(maps: list[GroupMap]) -> GroupMap:
    """psi on prod G_i sending coordinate i-1 through alpha_{i-1} into slot i."""
    n = len(maps)
    if n < 2:
        raise PreconditionError("need at least two maps in the chain")
    for i, m in enumerate(maps):
        nxt = maps[(i + 1) % n]
        if m.codomain.order != nxt.domain.order or \
                not np.array_equal(m.codomain.mul, nxt.domain.mul):
            raise PreconditionError("codomain/domain chain does not close cyclically")
        if not m.abelian_image:
            raise PreconditionError("chain entries must be abelian maps")
    factors = [m.domain for m in maps]
    G = groups.direct_product(*factors)
    orders = [f.order for f in factors]
    weights = list(itertools.accumulate([1] + orders[:-1], lambda a, b: a * b))
    img = np.zeros(G.order, dtype=np.int64)
    for idx in range(G.order):
        rem = idx
        coords = []
        for o in orders:
            coords.append(rem % o)
            rem //= o
        out = 0
        for i in range(n):
            out += weights[i] * int(maps[i - 1].image_of[coords[i - 1]])
        img[idx] = out
    psi = GroupMap(G, G, img, provenance="cyclic_chain")
    if not psi.abelian_image:
        raise InternalConsistencyError("cyclic chain map lost the abelian image")
    return psi


def left_regular_map(A: FiniteGroup, *, cap: int = LEFT_REGULAR_CAP) -> GroupMap:
    """a |-> left translation by a, as an abelian map A -> Sym(A)."""
    if not A.is_abelian():
        raise PreconditionError("left_regular_map requires an abelian group")
    if A.order > cap:
        raise PreconditionError(f"left regular embedding capped at order {cap}")
    S = groups.symmetric(A.order)
    index = {p: i for i, p in enumerate(groups.symmetric_perms(A.order))}
    img = np.array([index[tuple(int(x) for x in A.mul[a])] for a in range(A.order)],
                   dtype=np.int64)
    out = GroupMap(A, S, img, provenance="left_regular")
    if len(set(img.tolist())) != A.order:
        raise InternalConsistencyError("left regular representation not injective")
    if not out.abelian_image:
        raise InternalConsistencyError("left regular image not abelian")
    return out
