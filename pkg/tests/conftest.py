import numpy as np
import pytest

from skewbracoid import groups

_Q8_NAMES = ("e", "-e", "i", "-i", "j", "-j", "k", "-k")
_Q8_AXIS = {("e", "e"): ("+", "e"), ("e", "i"): ("+", "i"),
            ("e", "j"): ("+", "j"), ("e", "k"): ("+", "k"),
            ("i", "e"): ("+", "i"), ("i", "i"): ("-", "e"),
            ("i", "j"): ("+", "k"), ("i", "k"): ("-", "j"),
            ("j", "e"): ("+", "j"), ("j", "i"): ("-", "k"),
            ("j", "j"): ("-", "e"), ("j", "k"): ("+", "i"),
            ("k", "e"): ("+", "k"), ("k", "i"): ("+", "j"),
            ("k", "j"): ("-", "i"), ("k", "k"): ("-", "e")}


def quaternion_group() -> groups.FiniteGroup:
    """The quaternion group of order 8, from its sign/axis multiplication."""
    def mul(a: int, b: int) -> int:
        na, nb = _Q8_NAMES[a], _Q8_NAMES[b]
        sa, xa = ("-" if na.startswith("-") else "+"), na.lstrip("-")
        sb, xb = ("-" if nb.startswith("-") else "+"), nb.lstrip("-")
        s, x = _Q8_AXIS[(xa, xb)]
        neg = (sa == "-") ^ (sb == "-") ^ (s == "-")
        return _Q8_NAMES.index(("-" + x) if neg else x)

    table = [[mul(a, b) for b in range(8)] for a in range(8)]
    return groups.from_table(table, _Q8_NAMES, generators=[2, 4])


@pytest.fixture
def q8():
    return quaternion_group()


def brute_force_subgroups(G: groups.FiniteGroup) -> list[tuple[int, ...]]:
    """All subgroups by testing every subset; usable only for tiny groups."""
    import itertools

    out = []
    rest = [g for g in range(G.order) if g != 0]
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            members = (0,) + extra
            mset = set(members)
            closed = all(int(G.mul[a, b]) in mset for a in members for b in members)
            if closed and all(int(G.inv[a]) in mset for a in members):
                out.append(tuple(sorted(members)))
    return out
