"""Finite groups as Cayley tables over integer indices.

Every element is an index ``0..n-1`` with the identity pinned at 0, and any
subset of a group fits in a single Python int used as a bitmask.  Abelian
groups additionally get an explicit prime-power decomposition and, for a
subgroup, a generating set adapted to it (computed with a Smith normal form).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64
DEFAULT_CAP = 16


class GroupError(ValueError):
    pass


class NotAbelianError(GroupError):
    pass


class NoAdaptedBasis(GroupError):
    """Raised when no generating set of G is aligned with the subgroup."""


class CapExceeded(ValueError):
    def __init__(self, what: str, size: int, cap: int):
        super().__init__(
            f"{what}: group order {size} exceeds the cap of {cap} "
            f"(raise it with --cap N, at most {MAX_ORDER})"
        )
        self.size = size
        self.cap = cap


def check_cap(G: "FiniteGroup", cap: int, what: str) -> None:
    if G.order > cap:
        raise CapExceeded(what, G.order, cap)


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    cayley: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    label: str = "G"
    names: tuple[str, ...] = ()
    identity: int = field(default=0, init=False)
    _translations: dict = field(default_factory=dict, init=False, repr=False)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def prod(self, elements: Iterable[int]) -> int:
        return reduce(self.mul, elements, 0)

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        result = 0
        for _ in range(k % self.element_order(a)):
            result = self.cayley[result][a]
        return result

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.cayley[x][a]
            k += 1
        return k

    def name(self, a: int) -> str:
        return self.names[a] if self.names else ("e" if a == 0 else str(a))

    def format_set(self, mask: int) -> str:
        return "{" + ",".join(self.name(a) for a in bits(mask)) + "}"

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def is_abelian(self) -> bool:
        return all(
            self.cayley[a][b] == self.cayley[b][a]
            for a in range(self.order)
            for b in range(a)
        )

    def translate(self, g: int, mask: int) -> int:
        """Bitmask of the left translate ``g·X``."""
        key = (g, mask)
        cached = self._translations.get(key)
        if cached is not None:
            return cached
        row = self.cayley[g]
        out = 0
        for h in bits(mask):
            out |= 1 << row[h]
        self._translations[key] = out
        return out

    def conjugate(self, g: int, h: int) -> int:
        """``g h g^{-1}``."""
        return self.cayley[self.cayley[g][h]][self.inverse[g]]

    def generate(self, gens: Iterable[int]) -> int:
        """Bitmask of the subgroup generated by ``gens``."""
        gens = list(gens)
        mask = 1
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.cayley[x][s]
                    if not mask >> y & 1:
                        mask |= 1 << y
                        nxt.append(y)
            frontier = nxt
        return mask


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: int

    @property
    def order(self) -> int:
        return popcount(self.members)

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(bits(self.members))

    def __contains__(self, g: int) -> bool:
        return bool(self.members >> g & 1)

    def __repr__(self) -> str:
        return f"Subgroup({self.parent.format_set(self.members)} <= {self.parent.label})"

    @cached_property
    def as_group(self) -> FiniteGroup:
        """The subgroup as a standalone group; element i is ``self.elements[i]``."""
        elems = self.elements
        index = {g: i for i, g in enumerate(elems)}
        P = self.parent
        table = [[index[P.cayley[a][b]] for b in elems] for a in elems]
        names = tuple(P.name(g) for g in elems)
        label = f"{P.label}{P.format_set(self.members)}"
        return from_cayley(table, label=label, names=names, check_associative=False)

    def embed(self, i: int) -> int:
        """Parent index of element ``i`` of :attr:`as_group`."""
        return self.elements[i]


@dataclass(frozen=True)
class GroupMorphism:
    source: FiniteGroup
    target: FiniteGroup
    map: tuple[int, ...]

    def __post_init__(self):
        S, T, f = self.source, self.target, self.map
        if len(f) != S.order or f[0] != 0:
            raise GroupError("morphism must send identity to identity")
        for x in range(S.order):
            for y in range(S.order):
                if f[S.cayley[x][y]] != T.cayley[f[x]][f[y]]:
                    raise GroupError(f"not a homomorphism at ({x},{y})")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def preimage(self, mask: int) -> int:
        out = 0
        for x, fx in enumerate(self.map):
            if mask >> fx & 1:
                out |= 1 << x
        return out

    def image(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            out |= 1 << self.map[x]
        return out

    @property
    def is_surjective(self) -> bool:
        return self.image(self.source.full_mask) == self.target.full_mask


@dataclass(frozen=True)
class AbelianDecomposition:
    """Prime-power cyclic factors ``(p, n, generator)`` with ``generator`` of order p**n."""

    group: FiniteGroup
    components: tuple[tuple[int, int, int], ...]

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(a for _, _, a in self.components)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(p**n for p, n, _ in self.components)

    def element(self, exponents: Sequence[int]) -> int:
        G = self.group
        return G.prod(G.power(a, t) for a, t in zip(self.generators, exponents))

    @cached_property
    def coordinates(self) -> dict[int, tuple[int, ...]]:
        """Map element -> exponent vector; raises if the expression is not unique."""
        coords: dict[int, tuple[int, ...]] = {}
        for ts in itertools.product(*(range(q) for q in self.orders)):
            x = self.element(ts)
            if x in coords:
                raise GroupError(f"generators {self.generators} are not independent")
            coords[x] = ts
        if len(coords) != self.group.order:
            raise GroupError(f"generators {self.generators} do not generate the group")
        return coords


def from_cayley(
    table: Sequence[Sequence[int]],
    label: str = "G",
    names: Sequence[str] = (),
    check_associative: bool = True,
) -> FiniteGroup:
    """Validate a Cayley table (identity at index 0) and build the group."""
    n = len(table)
    if n < 1 or n > MAX_ORDER:
        raise GroupError(f"order {n} outside 1..{MAX_ORDER}")
    rows = tuple(tuple(int(v) for v in row) for row in table)
    full = set(range(n))
    for i, row in enumerate(rows):
        if len(row) != n:
            raise GroupError(f"row {i} has length {len(row)}, expected {n}")
        if set(row) != full:
            raise GroupError(f"not a Latin square: row {i}")
    for j in range(n):
        if {rows[i][j] for i in range(n)} != full:
            raise GroupError(f"not a Latin square: column {j}")
    if any(rows[0][x] != x or rows[x][0] != x for x in range(n)):
        raise GroupError("no identity at index 0")
    if check_associative:
        for i in range(n):
            ri = rows[i]
            for j in range(n):
                rij = rows[ri[j]]
                rj = rows[j]
                for k in range(n):
                    if rij[k] != ri[rj[k]]:
                        raise GroupError(f"not associative at ({i},{j},{k})")
    inverse = tuple(row.index(0) for row in rows)
    if names and len(names) != n:
        raise GroupError("names must match the order")
    return FiniteGroup(order=n, cayley=rows, inverse=inverse, label=label, names=tuple(names))


def _power_name(gen: str, k: int) -> str:
    if k == 0:
        return "e"
    return gen if k == 1 else f"{gen}^{k}"


def make_cyclic(n: int) -> FiniteGroup:
    if not 1 <= n <= MAX_ORDER:
        raise GroupError(f"cyclic order {n} outside 1..{MAX_ORDER}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = [_power_name("a", i) for i in range(n)]
    return from_cayley(table, label=f"Z{n}", names=names, check_associative=False)


def make_direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Element ``(g, h)`` gets index ``g*|H| + h``."""
    n, m = G.order, H.order
    if n * m > MAX_ORDER:
        raise GroupError(f"product order {n * m} exceeds {MAX_ORDER}")
    table = [
        [G.cayley[a // m][b // m] * m + H.cayley[a % m][b % m] for b in range(n * m)]
        for a in range(n * m)
    ]
    names = ["e" if i == 0 else f"({G.name(i // m)},{H.name(i % m)})" for i in range(n * m)]
    return from_cayley(table, label=f"{G.label}x{H.label}", names=names, check_associative=False)


def _from_permutations(perms: Sequence[tuple[int, ...]], label: str) -> FiniteGroup:
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    table = [[index[tuple(p[x] for x in q)] for q in perms] for p in perms]
    names = ["e"] + ["".join(str(v + 1) for v in p) for p in perms[1:]]
    return from_cayley(table, label=label, names=names)


def make_symmetric(n: int) -> FiniteGroup:
    """S_n on permutations in lexicographic order (identity first), composition right-to-left."""
    if n < 1 or _factorial(n) > MAX_ORDER:
        raise GroupError(f"S{n} has order above {MAX_ORDER}")
    perms = list(itertools.permutations(range(n)))
    return _from_permutations(perms, f"S{n}")


def _factorial(n: int) -> int:
    return reduce(lambda a, b: a * b, range(1, n + 1), 1)


def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: ``r^i s^j`` at index ``i + n*j``."""
    if n < 1 or 2 * n > MAX_ORDER:
        raise GroupError(f"dihedral order {2 * n} outside 2..{MAX_ORDER}")

    def mul(a, b):
        i, j = a % n, a // n
        k, l = b % n, b // n
        return ((i + (-k if j else k)) % n) + n * ((j + l) % 2)

    table = [[mul(a, b) for b in range(2 * n)] for a in range(2 * n)]
    names = [
        _power_name("r", a % n) if a < n else (_power_name("r", a % n) + "s").lstrip("e")
        for a in range(2 * n)
    ]
    return from_cayley(table, label=f"D{n}", names=names)


def make_dicyclic(n: int) -> FiniteGroup:
    """Dicyclic group of order 4n (quaternion group Q8 for n = 2): ``a^i x^j``, ``x^2 = a^n``."""
    if n < 1 or 4 * n > MAX_ORDER:
        raise GroupError(f"dicyclic order {4 * n} outside 4..{MAX_ORDER}")
    m = 2 * n

    def mul(u, v):
        i, j = u % m, u // m
        k, l = v % m, v // m
        if j == 0:
            return (i + k) % m + m * l
        # x a^k = a^{-k} x ; x x = a^n
        if l == 0:
            return (i - k) % m + m
        return (i - k + n) % m

    table = [[mul(u, v) for v in range(2 * m)] for u in range(2 * m)]
    names = [
        _power_name("a", u % m) if u < m else (_power_name("a", u % m) + "x").lstrip("e")
        for u in range(2 * m)
    ]
    return from_cayley(table, label=f"Dic{n}", names=names)


def subgroups(G: FiniteGroup, cap: int = DEFAULT_CAP) -> list[Subgroup]:
    """All subgroups, sorted by (order, bitmask)."""
    check_cap(G, cap, "subgroup enumeration")
    found = {G.generate([g]) for g in range(G.order)}
    frontier = set(found)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(found):
                j = a | b
                if j in found or j in new:
                    continue
                j = G.generate(bits(j))
                if j not in found:
                    new.add(j)
        found |= new
        frontier = new
    return [Subgroup(G, m) for m in sorted(found, key=lambda m: (popcount(m), m))]


def subgroup_from_generators(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    gens = list(gens)
    for g in gens:
        if not 0 <= g < G.order:
            raise GroupError(f"element index {g} outside 0..{G.order - 1}")
    return Subgroup(G, G.generate(gens))


def is_subgroup(G: FiniteGroup, mask: int) -> bool:
    if not mask & 1:
        return False
    elems = list(bits(mask))
    return all(mask >> G.cayley[a][G.inverse[b]] & 1 for a in elems for b in elems)


# ---------------------------------------------------------------------------
# Smith normal form over the integers


def smith_normal_form(A: Sequence[Sequence[int]]):
    """Return ``(D, U, V, V_inv)`` with ``U A V = D`` diagonal, d_i | d_{i+1}, d_i >= 0.

    ``U`` and ``V`` are unimodular; ``V_inv`` is tracked alongside so that the
    rows of ``V_inv`` give the new basis of the column lattice.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, row)) for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    Vi = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(src, dst, k):  # row_dst += k * row_src
        D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, k):  # col_dst += k * col_src
        for row in D:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]
        Vi[src] = [a - k * b for a, b in zip(Vi[src], Vi[dst])]

    t = 0
    while t < min(m, n):
        nonzero = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = D[t][t]
            done = True
            for i in range(t + 1, m):
                q = D[i][t] // p
                if q:
                    add_row(t, i, -q)
                if D[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = D[t][j] // p
                if q:
                    add_col(t, j, -q)
                if D[t][j]:
                    done = False
            if done:
                # divisibility condition for the rest of the block
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                add_row(bad[0], t, 1)
                continue
            nonzero = [(abs(D[i][t]), i, t) for i in range(t, m) if D[i][t]]
            nonzero += [(abs(D[t][j]), t, j) for j in range(t, n) if D[t][j]]
            _, i, j = min(nonzero)
            swap_rows(t, i)
            swap_cols(t, j)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return D, U, V, Vi


# ---------------------------------------------------------------------------
# Abelian structure


def _prime_powers(d: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while d > 1:
        if d % p == 0:
            e = 0
            while d % p == 0:
                d //= p
                e += 1
            out.append((p, e))
        p += 1
    return out


def _presentation(G: FiniteGroup) -> tuple[list[int], list[list[int]]]:
    """Greedy generators and a triangular basis of their relation lattice."""
    gens: list[int] = []
    relations: list[list[int]] = []
    coords = {0: ()}
    for x in range(1, G.order):
        if x in coords:
            continue
        k = len(gens)
        m, y = 1, x
        while y not in coords:
            y = G.mul(y, x)
            m += 1
        c = coords[y]
        relations.append([-ci for ci in c] + [0] * (k - len(c)) + [m])
        new = {}
        for z, cz in coords.items():
            w = z
            for i in range(m):
                new[w] = cz + (0,) * (k - len(cz)) + (i,)
                w = G.mul(w, x)
        coords = new
        gens.append(x)
    for r in relations:
        r.extend([0] * (len(gens) - len(r)))
    return gens, relations


def _combine(G: FiniteGroup, gens: Sequence[int], exps: Sequence[int]) -> int:
    return G.prod(G.power(g, e) for g, e in zip(gens, exps))


def elementary_decomposition(G: FiniteGroup) -> AbelianDecomposition:
    """Split an abelian group into cyclic factors of prime-power order."""
    if not G.is_abelian:
        raise NotAbelianError(f"{G.label} is not abelian")
    if G.order == 1:
        return AbelianDecomposition(G, ())
    gens, rel = _presentation(G)
    D, _, _, Vi = smith_normal_form(rel)
    comps = []
    for i, row in enumerate(Vi):
        d = D[i][i]
        if d == 1:
            continue
        b = _combine(G, gens, row)
        for p, e in _prime_powers(d):
            comps.append((p, e, G.power(b, d // p**e)))
    comps.sort(key=lambda c: (c[0], c[1], c[2]))
    dec = AbelianDecomposition(G, tuple(comps))
    dec.coordinates  # validates
    return dec


def _p_part_mask(G: FiniteGroup, mask: int, p: int) -> int:
    out = 0
    for x in bits(mask):
        o = G.element_order(x)
        while o % p == 0:
            o //= p
        if o == 1:
            out |= 1 << x
    return out


def _adapted_p(G: FiniteGroup, comps, h_mask: int) -> list[tuple[int, int]]:
    """Adapted (generator, divisor) pairs for one primary component."""
    gens = [a for _, _, a in comps]
    orders = [p**n for p, n, _ in comps]
    sub = AbelianDecomposition(G, tuple(comps))
    coords = {}
    for ts in itertools.product(*(range(q) for q in orders)):
        coords[sub.element(ts)] = ts
    k = len(gens)
    rows = [list(coords[x]) for x in bits(h_mask) if x]
    rows += [[q if i == j else 0 for j in range(k)] for i, q in enumerate(orders)]
    D, _, _, Vi = smith_normal_form(rows)
    basis = [_combine(G, gens, Vi[i]) for i in range(k)]
    divs = [D[i][i] for i in range(k)]
    pairs = [(b, d) for b, d in zip(basis, divs) if b != 0]
    p_mask = G.generate(gens)
    total = 1
    for b, _ in pairs:
        total *= G.element_order(b)
    if (
        total == popcount(p_mask)
        and all(G.element_order(b) % d == 0 for b, d in pairs)
        and G.generate(G.power(b, d) for b, d in pairs) == h_mask
    ):
        return pairs
    return _search_adapted(G, orders, p_mask, h_mask)


def _search_adapted(G, orders, p_mask, h_mask) -> list[tuple[int, int]]:
    orders = sorted(orders, reverse=True)
    by_order: dict[int, list[int]] = {}
    for x in bits(p_mask):
        by_order.setdefault(G.element_order(x), []).append(x)
    h_order = popcount(h_mask)

    def rec(chosen, span):
        i = len(chosen)
        if i == len(orders):
            inter = [popcount(G.generate([b]) & h_mask) for b in chosen]
            prod = 1
            for v in inter:
                prod *= v
            if prod == h_order:
                return [(b, o // v) for b, o, v in zip(chosen, orders, inter)]
            return None
        for x in by_order.get(orders[i], []):
            cyc = G.generate([x])
            if cyc & span != 1:
                continue
            res = rec(chosen + [x], G.generate(list(bits(span)) + [x]))
            if res is not None:
                return res
        return None

    res = rec([], 1)
    if res is None:
        raise NoAdaptedBasis(
            f"no generating set of {G.label} is aligned with {G.format_set(h_mask)}"
        )
    return res


def adapted_basis(G: FiniteGroup, H: Subgroup) -> tuple[AbelianDecomposition, tuple[int, ...]]:
    """Generators ``a_i`` of G and divisors ``d_i`` with ``H = <a_i^{d_i}>``.

    Raises :class:`NoAdaptedBasis` for the (rare) subgroups that admit no
    aligned basis, e.g. ``<(2,1)>`` in ``Z8 x Z2``.
    """
    if not G.is_abelian:
        raise NotAbelianError(f"{G.label} is not abelian")
    if H.parent is not G or not is_subgroup(G, H.members):
        raise GroupError("H is not a subgroup of G")
    dec = elementary_decomposition(G)
    comps, divs = [], []
    for p in sorted({c[0] for c in dec.components}):
        pc = [c for c in dec.components if c[0] == p]
        for b, d in _adapted_p(G, pc, _p_part_mask(G, H.members, p)):
            n = 0
            o = G.element_order(b)
            while o > 1:
                o //= p
                n += 1
            comps.append((p, n, b))
            divs.append(d)
    new = AbelianDecomposition(G, tuple(comps))
    new.coordinates
    return new, tuple(divs)
