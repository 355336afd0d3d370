"""Subsets containing the identity and their orbits under left translation."""
from __future__ import annotations

from dataclasses import dataclass

from .group_core import DEFAULT_CAP, FiniteGroup, Subgroup, bits, check_cap, popcount


def e_subsets(G: FiniteGroup, cap: int = DEFAULT_CAP) -> list[int]:
    """Masks of all subsets containing the identity, ascending."""
    check_cap(G, cap, "subset enumeration")
    return [(m << 1) | 1 for m in range(1 << (G.order - 1))]


def translate(G: FiniteGroup, g: int, X: int) -> int:
    return G.translate(g, X)


def isotropy(G: FiniteGroup, X: int) -> Subgroup:
    mask = 0
    for g in bits(X):
        # g X = X forces g = g·e in X
        if G.translate(g, X) == X:
            mask |= 1 << g
    return Subgroup(G, mask)


@dataclass(frozen=True)
class OrbitTable:
    group: FiniteGroup
    reps: tuple[int, ...]
    # member -> (position of its rep in ``reps``, g with member = g·rep)
    orbit_index: dict[int, tuple[int, int]]
    isotropy: dict[int, Subgroup]
    # rep X -> (g_1 = e, g_2, ...) with X the disjoint union of G_X g_i^{-1}
    transversal: dict[int, tuple[int, ...]]

    def rep_of(self, X: int) -> int:
        return self.reps[self.orbit_index[X][0]]

    def translator(self, X: int) -> int:
        return self.orbit_index[X][1]

    def orbit(self, X: int) -> tuple[int, ...]:
        """Members ``g_i·rep`` in transversal order."""
        rep = self.rep_of(X)
        G = self.group
        return tuple(G.translate(g, rep) for g in self.transversal[rep])

    def equivalent(self, X: int, Y: int) -> bool:
        return self.orbit_index[X][0] == self.orbit_index[Y][0]

    def to_dict(self) -> dict:
        return {
            "order": self.group.order,
            "reps": list(self.reps),
            "orbit_index": [[X, pos, g] for X, (pos, g) in sorted(self.orbit_index.items())],
            "isotropy": [self.isotropy[X].members for X in self.reps],
            "transversal": [list(self.transversal[X]) for X in self.reps],
        }

    @classmethod
    def from_dict(cls, G: FiniteGroup, data: dict) -> "OrbitTable":
        if data["order"] != G.order:
            raise ValueError("orbit table belongs to a group of different order")
        reps = tuple(data["reps"])
        return cls(
            group=G,
            reps=reps,
            orbit_index={X: (pos, g) for X, pos, g in data["orbit_index"]},
            isotropy={X: Subgroup(G, m) for X, m in zip(reps, data["isotropy"])},
            transversal={X: tuple(t) for X, t in zip(reps, data["transversal"])},
        )


def _transversal(G: FiniteGroup, X: int, stab: Subgroup) -> tuple[int, ...]:
    covered = 0
    out = []
    for g in range(G.order):
        g_inv = G.inv(g)
        if not X >> g_inv & 1 or covered >> g_inv & 1:
            continue
        out.append(g)
        for s in stab.elements:
            covered |= 1 << G.mul(s, g_inv)
    return tuple(out)


def _build(G: FiniteGroup, cap: int) -> OrbitTable:
    reps = []
    index: dict[int, tuple[int, int]] = {}
    stabs = {}
    trans = {}
    for X in e_subsets(G, cap):
        if X in index:
            continue
        pos = len(reps)
        reps.append(X)
        for g in bits(X):
            g = G.inv(g)
            Y = G.translate(g, X)
            if Y not in index:
                index[Y] = (pos, g)
        stabs[X] = isotropy(G, X)
        trans[X] = _transversal(G, X, stabs[X])
    return OrbitTable(G, tuple(reps), index, stabs, trans)


_cache: dict[int, tuple[FiniteGroup, OrbitTable]] = {}


def fundamental_domain(G: FiniteGroup, cap: int = DEFAULT_CAP) -> OrbitTable:
    """Orbit representatives (smallest mask per orbit), isotropy and transversals."""
    hit = _cache.get(id(G))
    if hit is not None and hit[0] is G:
        return hit[1]
    table = _build(G, cap)
    _cache[id(G)] = (G, table)
    return table


def preload(table: OrbitTable) -> None:
    """Seed the memo with a table restored from disk."""
    _cache[id(table.group)] = (table.group, table)


def orbit_size(G: FiniteGroup, X: int) -> int:
    return popcount(X) // isotropy(G, X).order
