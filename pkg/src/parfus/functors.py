"""Label-level forms of the two embedding functors.

Christmas Tree: a kH-module V goes to ``M_H ⊗ V``, the module living on the
single subset H (whose isotropy is H itself).

Matryoshka: for abelian G and H <= G, pick a surjection ``phi: G -> H``;
a simple ``(X, chi)`` over H goes to ``(phi^{-1}(X), chi∘phi)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .characters import character_table, tensor_multiplicities
from .fusion import canonicalize_label, fuse
from .group_core import (
    FiniteGroup,
    GroupMorphism,
    NoAdaptedBasis,
    NotAbelianError,
    Subgroup,
    adapted_basis,
    elementary_decomposition,
    subgroups,
)
from .report import Report
from .rep_theory import SimpleLabel, simple_labels
from .subsets import fundamental_domain, isotropy


@dataclass
class FunctorReport:
    name: str
    pairs: int = 0
    label_map: list[tuple[SimpleLabel, SimpleLabel]] = field(default_factory=list)
    injective: bool = True
    monoidal_failures: list[dict] = field(default_factory=list)
    checks: Report | None = None

    @property
    def passed(self) -> bool:
        extra = self.checks is None or self.checks.passed
        return self.injective and not self.monoidal_failures and extra

    def to_json(self) -> dict:
        return {
            "functor": self.name,
            "status": "pass" if self.passed else "fail",
            "pairs": self.pairs,
            "injective": self.injective,
            "label_map": [{"source": s.to_json(), "target": t.to_json()} for s, t in self.label_map],
            "monoidal_failures": self.monoidal_failures,
            "checks": self.checks.to_json() if self.checks is not None else [],
        }


def _finish(report: FunctorReport) -> FunctorReport:
    targets = [t for _, t in report.label_map]
    report.injective = len(set(targets)) == len(targets)
    return report


# ---------------------------------------------------------------------------
# Christmas Tree


def christmas_label(G: FiniteGroup, H: Subgroup, alpha: int) -> SimpleLabel:
    """Image of the irreducible ``alpha`` of H."""
    table = character_table(H)
    if not 0 <= alpha < table.size:
        raise ValueError(f"character index {alpha} out of range for a group of order {H.order}")
    # the subset H has isotropy exactly H, so the character index carries over
    return canonicalize_label(G, H.members, alpha)


def christmas_verify(G: FiniteGroup, H: Subgroup) -> FunctorReport:
    rep = FunctorReport(f"christmas {G.label} <- {G.format_set(H.members)}")
    checks = Report(rep.name)
    table = character_table(H)
    image = {a: christmas_label(G, H, a) for a in range(table.size)}
    rep.label_map = [(SimpleLabel(H.members, a, table.degrees[a]), image[a]) for a in range(table.size)]

    c = checks.check("isotropy of the subset H is H")
    c.case(isotropy(G, H.members).members == H.members)

    c = checks.check("image lives on a one-point orbit with dim = degree")
    T = fundamental_domain(G, G.order)
    for a, lab in image.items():
        c.case(len(T.transversal[lab.X]) == 1 and lab.dim == table.degrees[a], alpha=a)

    for a, b in itertools.product(range(table.size), repeat=2):
        rep.pairs += 1
        want = sorted((image[g], m) for g, m in tensor_multiplicities(table, a, b))
        got = sorted(fuse(G, image[a], image[b]))
        if want != got:
            rep.monoidal_failures.append({"alpha": a, "beta": b})
    rep.checks = checks
    return _finish(rep)


# ---------------------------------------------------------------------------
# Matryoshka


def _local_index(H: Subgroup) -> dict[int, int]:
    return {g: i for i, g in enumerate(H.elements)}


def _invariant_surjection(G: FiniteGroup, H: Subgroup) -> tuple[int, ...]:
    """Surjection G -> H matching cyclic factors prime by prime, largest first."""
    Hg = H.as_group
    dg = elementary_decomposition(G)
    dh = elementary_decomposition(Hg)
    images: dict[int, int] = {}
    for p in sorted({c[0] for c in dg.components}):
        gs = sorted((c for c in dg.components if c[0] == p), key=lambda c: (-c[1], c[2]))
        hs = sorted((c for c in dh.components if c[0] == p), key=lambda c: (-c[1], c[2]))
        if len(hs) > len(gs) or any(h[1] > g[1] for g, h in zip(gs, hs)):
            raise NoAdaptedBasis("H is not a quotient of G")
        for i, (_, _, a) in enumerate(gs):
            images[a] = hs[i][2] if i < len(hs) else 0
    out = []
    coords = dg.coordinates
    for x in range(G.order):
        ts = coords[x]
        out.append(Hg.prod(Hg.power(images[a], t) for a, t in zip(dg.generators, ts)))
    return tuple(out)


def matryoshka_phi(G: FiniteGroup, H: Subgroup) -> GroupMorphism:
    """Surjection ``G -> H`` (target indices are those of ``H.as_group``).

    Built from an adapted basis as ``a_i^t -> a_i^(t d_i)``; when no adapted
    basis exists, falls back to matching the cyclic factors of G and H.
    """
    if not G.is_abelian:
        raise NotAbelianError(f"{G.label} is not abelian")
    local = _local_index(H)
    try:
        dec, divs = adapted_basis(G, H)
    except NoAdaptedBasis:
        table = _invariant_surjection(G, H)
    else:
        coords = dec.coordinates
        table = tuple(
            local[dec.element([t * d for t, d in zip(coords[x], divs)])] for x in range(G.order)
        )
    phi = GroupMorphism(G, H.as_group, table)
    if not phi.is_surjective:
        raise AssertionError("constructed map is not onto H")
    return phi


def _h_source_labels(H: Subgroup) -> list[SimpleLabel]:
    return simple_labels(H.as_group, H.as_group.order)


def matryoshka_label(G: FiniteGroup, H: Subgroup, source: SimpleLabel, phi: GroupMorphism | None = None) -> SimpleLabel:
    """Image of a simple ``k_par H`` label (indices local to ``H.as_group``)."""
    if not G.is_abelian:
        raise NotAbelianError(f"{G.label} is not abelian")
    phi = phi or matryoshka_phi(G, H)
    Hg = H.as_group
    TH = fundamental_domain(Hg, Hg.order)
    src_table = character_table(TH.isotropy[source.X])
    Y = phi.preimage(source.X)
    L = isotropy(G, Y)
    dst = character_table(L)
    values = {l: src_table.value(source.alpha, phi(l)) for l in L.elements}
    return canonicalize_label(G, Y, dst.find(values))


def _union_form(G: FiniteGroup, phi: GroupMorphism, X: int) -> int:
    """``⋃ y·ker(phi)`` over one preimage y of each element of X."""
    kernel = phi.preimage(1)
    section: dict[int, int] = {}
    for y in range(G.order):
        section.setdefault(phi(y), y)
    out = 0
    for x in range(phi.target.order):
        if X >> x & 1:
            out |= G.translate(section[x], kernel)
    return out


def matryoshka_verify(G: FiniteGroup, H: Subgroup, module_level: bool = False) -> FunctorReport:
    """Injectivity, dimension and fusion preservation of the label map.

    With ``module_level`` the traces of every arrow on image and source
    modules are compared as well (slow beyond order 8).
    """
    phi = matryoshka_phi(G, H)
    Hg = H.as_group
    rep = FunctorReport(f"matryoshka {G.label} <- {G.format_set(H.members)}")
    checks = Report(rep.name)
    sources = _h_source_labels(H)
    image = {s: matryoshka_label(G, H, s, phi) for s in sources}
    rep.label_map = [(s, image[s]) for s in sources]
    TH = fundamental_domain(Hg, Hg.order)

    c = checks.check("phi is a surjective homomorphism")
    c.case(phi.is_surjective)

    c = checks.check("preimage equals union of kernel cosets")
    for X in TH.reps:
        c.case(phi.preimage(X) == _union_form(G, phi, X), X=X)

    c = checks.check("isotropy of preimage is preimage of isotropy")
    for X in TH.reps:
        Y = phi.preimage(X)
        c.case(isotropy(G, Y).members == phi.preimage(TH.isotropy[X].members), X=X)

    c = checks.check("dimension preserved")
    for s in sources:
        c.case(image[s].dim == s.dim, **s.to_json())

    c = checks.check("eps supports match along phi")
    for X in TH.reps:
        Y = phi.preimage(X)
        for y in range(G.order):
            moved = Hg.translate(phi(y), X)
            if not moved & 1:
                continue
            ok = phi.preimage(moved) == G.translate(y, Y)
            ok = ok and all(bool(G.translate(y, Y) >> g & 1) == bool(moved >> phi(g) & 1) for g in range(G.order))
            c.case(ok, X=X, y=y)

    if module_level:
        _trace_check(G, phi, sources, image, checks)

    for a, b in itertools.product(sources, repeat=2):
        rep.pairs += 1
        want = sorted((image[lab], m) for lab, m in fuse(Hg, a, b))
        got = sorted(fuse(G, image[a], image[b]))
        if want != got:
            rep.monoidal_failures.append({"a": a.to_json(), "b": b.to_json()})
    rep.checks = checks
    return _finish(rep)


def _trace(G: FiniteGroup, lab: SimpleLabel, g: int, Z: int) -> complex:
    """Trace of the arrow (g, Z) on the simple module ``lab`` (abelian isotropy)."""
    T = fundamental_domain(G, G.order)
    if T.rep_of(Z) != lab.X or G.translate(g, Z) != Z:
        return 0j
    return character_table(T.isotropy[lab.X]).value(lab.alpha, g)


def _trace_check(G, phi, sources, image, checks: Report) -> None:
    """The pullback of ``(X, chi)`` along phi sends (g, Z) to (phi(g), W) when ``Z = phi^{-1}(W)``."""
    Hg = phi.target
    pre = {phi.preimage(W): W for W in range(1, 1 << Hg.order) if W & 1}
    c = checks.check("arrow traces agree on image and pulled-back module")
    for s in sources:
        for Z in range(1, 1 << G.order, 2):
            W = pre.get(Z)
            for g in range(G.order):
                if not Z >> G.inv(g) & 1:
                    continue
                src = _trace(Hg, s, phi(g), W) if W is not None else 0j
                c.case(abs(src - _trace(G, image[s], g, Z)) < 1e-9, g=g, Z=Z, **s.to_json())


def matryoshka_all(G: FiniteGroup, module_level: bool = False) -> list[FunctorReport]:
    return [matryoshka_verify(G, H, module_level) for H in subgroups(G)]


def _compose(outer: dict, inner: dict) -> dict:
    return {s: outer[t] for s, t in inner.items()}


def coherence_report(G: FiniteGroup) -> Report:
    """Compare M(G,H)∘M(H,K) with M(G,K) on labels for every chain K <= H <= G.

    This is an observation, not a theorem: different surjections may give
    different (equally valid) label maps.
    """
    rep = Report(f"matryoshka coherence {G.label}")
    c = rep.check("M(G,H) M(H,K) = M(G,K) on labels")
    for H in subgroups(G):
        Hg = H.as_group
        phi_gh = matryoshka_phi(G, H)
        outer = {s: matryoshka_label(G, H, s, phi_gh) for s in _h_source_labels(H)}
        for Kl in subgroups(Hg):
            K_in_G = Subgroup(G, sum(1 << H.embed(i) for i in Kl.elements))
            inner_phi = matryoshka_phi(Hg, Kl)
            inner = {s: matryoshka_label(Hg, Kl, s, inner_phi) for s in _h_source_labels(Kl)}
            direct_phi = matryoshka_phi(G, K_in_G)
            # K.as_group and Kl.as_group list the same elements in the same order
            direct = {s: matryoshka_label(G, K_in_G, s, direct_phi) for s in _h_source_labels(K_in_G)}
            composed = _compose(outer, inner)
            c.case(composed == direct, H=H.members, K=K_in_G.members)
    return rep
