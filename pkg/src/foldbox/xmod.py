"""Crossed modules, their morphisms and homotopies, and 2-groups.

Actions are stored as full tables ``action[(g, a)] = ᵍa``.  A 2-group built
from a crossed module names the 2-cell ``(a, g)`` as ``"(a,g)"``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import product

from .algebra import TwoFunctorUnderI, functor_M
from .dblcat import DoubleCategory, DoubleFunctor, VerticalTransformation, h_embed, horizontal_two_category, validate_double
from .fincat import (FinGroup, TwoCategory, TwoFunctor, group_homs, group_to_one_object_groupoid,
                     one_object_groupoid_to_group, two_category_axioms, two_category_structural, validate_structure)
from .folding import Folding, validate_fold
from .iso import Relational
from .report import Collector, InvalidInput, ValidationReport, run_checks


@dataclass(frozen=True)
class CrossedModule:
    H: FinGroup
    G: FinGroup
    boundary: dict[str, str]
    action: dict[tuple[str, str], str]

    def relational(self) -> Relational:
        r = Relational({"H": list(self.H.elements), "G": list(self.G.elements)})
        for name, grp in (("H", self.H), ("G", self.G)):
            r.op(f"unit{name}", (), name, {(): grp.unit})
            r.op(f"mul{name}", (name, name), name, grp.mul)
            r.op(f"inv{name}", (name,), name, grp.inv)
        r.op("boundary", ("H",), "G", self.boundary)
        r.op("action", ("G", "H"), "H", self.action)
        return r


@dataclass(frozen=True)
class XModMorphism:
    src: CrossedModule
    tgt: CrossedModule
    p: dict[str, str]
    q: dict[str, str]


@dataclass(frozen=True)
class Homotopy:
    src: XModMorphism
    tgt: XModMorphism
    nu: dict[str, str]


@dataclass(frozen=True)
class TwoGroup:
    cat: TwoCategory
    inv1: dict[str, str]
    inv2_h: dict[str, str]
    inv2_v: dict[str, str]

    @property
    def unit(self) -> str:
        (obj,) = self.cat.objects
        return self.cat.id1[obj]

    def relational(self) -> Relational:
        r = self.cat.relational()
        r.op("inv1", ("c1",), "c1", self.inv1)
        r.op("inv2_h", ("c2",), "c2", self.inv2_h)
        r.op("inv2_v", ("c2",), "c2", self.inv2_v)
        return r


@dataclass(frozen=True)
class ConjugationTwoCell:
    src: XModMorphism
    tgt: XModMorphism
    w: str


@dataclass(frozen=True)
class XModUnderGroup:
    """A crossed module with a group I mapped into its base G by P."""

    I: FinGroup
    xm: CrossedModule
    P: dict[str, str]

    def relational(self) -> Relational:
        r = self.xm.relational()
        r.sorts["I"] = list(self.I.elements)
        r.op("unitI", (), "I", {(): self.I.unit})
        r.op("mulI", ("I", "I"), "I", self.I.mul)
        r.op("invI", ("I",), "I", self.I.inv)
        r.op("P", ("I",), "G", self.P)
        return r


# construction helpers


def conjugation_xmod(G: FinGroup, normal: list[str]) -> CrossedModule:
    """Inclusion of a normal subgroup with the conjugation action."""
    els = [x for x in G.elements if x in set(normal)]
    H = FinGroup(tuple(els), G.unit, {(a, b): G.mul[(a, b)] for a in els for b in els}, {a: G.inv[a] for a in els})
    action = {(g, a): G.m(g, a, G.inv[g]) for g in G.elements for a in els}
    return CrossedModule(H, G, {a: a for a in els}, action)


def subgroup_inclusion_xmod(H: FinGroup, G: FinGroup, embedding: dict[str, str]) -> CrossedModule:
    """H embedded into an abelian G, acted on trivially."""
    return CrossedModule(H, G, dict(embedding), {(g, a): a for g in G.elements for a in H.elements})


def trivial_boundary_xmod(H: FinGroup, G: FinGroup, action: dict[tuple[str, str], str]) -> CrossedModule:
    return CrossedModule(H, G, {a: G.unit for a in H.elements}, dict(action))


def identity_morphism(m: CrossedModule) -> XModMorphism:
    return XModMorphism(m, m, {a: a for a in m.H.elements}, {g: g for g in m.G.elements})


def compose_morphisms(second: XModMorphism, first: XModMorphism) -> XModMorphism:
    return XModMorphism(first.src, second.tgt, {a: second.p[first.p[a]] for a in first.p},
                        {g: second.q[first.q[g]] for g in first.q})


def xmod_morphisms(src: CrossedModule, tgt: CrossedModule) -> list[XModMorphism]:
    """Every morphism of crossed modules src → tgt, by brute force over group homomorphisms."""
    out = []
    qs = group_homs(src.G, tgt.G)
    for p in group_homs(src.H, tgt.H):
        for q in qs:
            m = XModMorphism(src, tgt, p, q)
            if _morphism_ok(m):
                out.append(m)
    return out


def _morphism_ok(m: XModMorphism) -> bool:
    S, T = m.src, m.tgt
    if any(m.q[S.boundary[a]] != T.boundary[m.p[a]] for a in S.H.elements):
        return False
    return all(m.p[S.action[(g, a)]] == T.action[(m.q[g], m.p[a])] for g in S.G.elements for a in S.H.elements)


def homotopies_between(m1: XModMorphism, m2: XModMorphism) -> list[Homotopy]:
    """Every homotopy m1 ⇒ m2, pruning each ν(f) by the boundary equation first."""
    T = m1.tgt
    G, H2 = m1.src.G, T.H
    choices = []
    for f in G.elements:
        need = T.G.mul[(m2.q[f], T.G.inv[m1.q[f]])]
        choices.append([h for h in H2.elements if T.boundary[h] == need])
    out = []
    for combo in product(*choices):
        h = Homotopy(m1, m2, dict(zip(G.elements, combo)))
        if validate_xmod("homotopy", h, limit=1).ok:
            out.append(h)
    return out


def compose_homotopies_vertical(nu1: Homotopy, nu2: Homotopy) -> Homotopy:
    """f ↦ ν2(f)ν1(f)."""
    if nu1.tgt != nu2.src:
        raise InvalidInput("homotopies are not vertically composable")
    mul = nu1.src.tgt.H.mul
    return Homotopy(nu1.src, nu2.tgt, {f: mul[(nu2.nu[f], nu1.nu[f])] for f in nu1.nu})


def compose_homotopies_horizontal(nu1: Homotopy, nu2: Homotopy) -> Homotopy:
    """ν1: (p1,q1) ⇒ (p1',q1') then ν2: (p2,q2) ⇒ (p2',q2'); f ↦ ν2(q1'(f))·p2(ν1(f))."""
    if nu1.src.tgt != nu2.src.src:
        raise InvalidInput("homotopies are not horizontally composable")
    mul = nu2.src.tgt.H.mul
    q1p, p2 = nu1.tgt.q, nu2.src.p
    nu = {f: mul[(nu2.nu[q1p[f]], p2[nu1.nu[f]])] for f in nu1.nu}
    return Homotopy(compose_morphisms(nu2.src, nu1.src), compose_morphisms(nu2.tgt, nu1.tgt), nu)


# validation


def _xmod_checks(col: Collector, m: CrossedModule) -> None:
    col.merge(validate_structure("group", m.H), "H:")
    col.merge(validate_structure("group", m.G), "G:")
    if col.has_errors:
        return
    H, G = m.H, m.G
    for a in H.elements:
        if m.boundary.get(a) not in G.elements:
            col.error("NON_TOTAL_TABLE", ("boundary", a))
    for g in G.elements:
        for a in H.elements:
            if m.action.get((g, a)) not in H.elements:
                col.error("NON_TOTAL_TABLE", ("action", g, a))
    for k in m.boundary:
        if k not in H.elements:
            col.error("DANGLING_REFERENCE", ("boundary", k))
    for g, a in m.action:
        if g not in G.elements or a not in H.elements:
            col.error("DANGLING_REFERENCE", ("action", g, a))
    if col.has_errors:
        return
    d, act = m.boundary, m.action
    for a in H.elements:
        for b in H.elements:
            if d[H.mul[(a, b)]] != G.mul[(d[a], d[b])]:
                col.violation("BOUNDARY_HOM", (a, b))
    for a in H.elements:
        if act[(G.unit, a)] != a:
            col.violation("ACTION_UNIT", (a,))
    for g in G.elements:
        for h in G.elements:
            gh = G.mul[(g, h)]
            for a in H.elements:
                if act[(g, act[(h, a)])] != act[(gh, a)]:
                    col.violation("ACTION_COMPOSE", (g, h, a))
    for g in G.elements:
        for a in H.elements:
            for b in H.elements:
                if act[(g, H.mul[(a, b)])] != H.mul[(act[(g, a)], act[(g, b)])]:
                    col.violation("ACTION_AUTO", (g, a, b))
    for g in G.elements:
        for a in H.elements:
            if d[act[(g, a)]] != G.m(g, d[a], G.inv[g]):
                col.violation("CM1", (g, a))
    for b in H.elements:
        for a in H.elements:
            if act[(d[b], a)] != H.m(b, a, H.inv[b]):
                col.violation("CM2", (b, a))


def _morphism_checks(col: Collector, m: XModMorphism) -> None:
    S, T = m.src, m.tgt
    col.merge(validate_xmod("crossed_module", S), "src:")
    col.merge(validate_xmod("crossed_module", T), "tgt:")
    if col.has_errors or col.report.violations:
        return
    for a in S.H.elements:
        if m.p.get(a) not in T.H.elements:
            col.error("NON_TOTAL_TABLE", ("p", a))
    for g in S.G.elements:
        if m.q.get(g) not in T.G.elements:
            col.error("NON_TOTAL_TABLE", ("q", g))
    if col.has_errors:
        return
    for a in S.H.elements:
        for b in S.H.elements:
            if m.p[S.H.mul[(a, b)]] != T.H.mul[(m.p[a], m.p[b])]:
                col.violation("P_HOM", (a, b))
    for g in S.G.elements:
        for h in S.G.elements:
            if m.q[S.G.mul[(g, h)]] != T.G.mul[(m.q[g], m.q[h])]:
                col.violation("Q_HOM", (g, h))
    for a in S.H.elements:
        if m.q[S.boundary[a]] != T.boundary[m.p[a]]:
            col.violation("BOUNDARY_COMMUTE", (a,))
    for g in S.G.elements:
        for a in S.H.elements:
            if m.p[S.action[(g, a)]] != T.action[(m.q[g], m.p[a])]:
                col.violation("EQUIVARIANCE", (g, a))


def _homotopy_checks(col: Collector, h: Homotopy) -> None:
    m1, m2 = h.src, h.tgt
    if m1.src != m2.src or m1.tgt != m2.tgt:
        col.error("PARALLEL_MISMATCH", ("src", "tgt"), "morphisms are not parallel")
        return
    col.merge(validate_xmod("xmod_morphism", m1), "src:")
    col.merge(validate_xmod("xmod_morphism", m2), "tgt:")
    if col.has_errors or col.report.violations:
        return
    S, T = m1.src, m1.tgt
    for f in S.G.elements:
        if h.nu.get(f) not in T.H.elements:
            col.error("NON_TOTAL_TABLE", ("nu", f))
    if col.has_errors:
        return
    nu, G, H2, G2 = h.nu, S.G, T.H, T.G
    for f in G.elements:
        if G2.mul[(T.boundary[nu[f]], m1.q[f])] != m2.q[f]:
            col.violation("HOMOTOPY_BOUNDARY", (f,))
    for a in S.H.elements:
        for f in G.elements:
            g = G.mul[(S.boundary[a], f)]
            if H2.mul[(m2.p[a], nu[f])] != H2.mul[(nu[g], m1.p[a])]:
                col.violation("HOMOTOPY_NATURAL", (a, f, g))
    for g in G.elements:
        for f in G.elements:
            if H2.mul[(nu[g], T.action[(m1.q[g], nu[f])])] != nu[G.mul[(g, f)]]:
                col.violation("DERIVATION_RULE", (g, f))


def _two_group_checks(col: Collector, t: TwoGroup) -> None:
    c = t.cat
    if len(c.objects) != 1:
        col.error("NOT_ONE_OBJECT", tuple(c.objects))
        return
    two_category_structural(col, c)
    for name, table, keys in (("inv1", t.inv1, c.one_cells), ("inv2_h", t.inv2_h, c.two_cells), ("inv2_v", t.inv2_v, c.two_cells)):
        for k in keys:
            if table.get(k) not in keys:
                col.error("NON_TOTAL_TABLE", (name, k))
    if col.has_errors:
        return
    two_category_axioms(col, c)
    e = t.unit
    for g in c.one_cells:
        gi = t.inv1[g]
        if c.comp1[(g, gi)] != e or c.comp1[(gi, g)] != e:
            col.violation("INV1", (g, gi))
    ie = c.id2[e]
    for a, (f, g) in c.two_cells.items():
        ah = t.inv2_h[a]
        if c.hcomp.get((a, ah)) != ie or c.hcomp.get((ah, a)) != ie:
            col.violation("INV2_H", (a, ah))
        av = t.inv2_v[a]
        if c.vcomp.get((av, a)) != c.id2[f] or c.vcomp.get((a, av)) != c.id2[g]:
            col.violation("INV2_V", (a, av))


def _conjugation_checks(col: Collector, w: ConjugationTwoCell) -> None:
    m1, m2 = w.src, w.tgt
    if m1.src != m2.src or m1.tgt != m2.tgt:
        col.error("PARALLEL_MISMATCH", ("src", "tgt"))
        return
    T = m1.tgt
    if w.w not in T.G.elements:
        col.error("DANGLING_REFERENCE", ("w", w.w))
        return
    winv = T.G.inv[w.w]
    for g in m1.src.G.elements:
        if T.G.m(w.w, m1.q[g], winv) != m2.q[g]:
            col.violation("CONJ_Q", (g,))
    for a in m1.src.H.elements:
        if T.action[(w.w, m1.p[a])] != m2.p[a]:
            col.violation("CONJ_P", (a,))


def _under_group_checks(col: Collector, u: XModUnderGroup) -> None:
    col.merge(validate_structure("group", u.I), "I:")
    col.merge(run_checks("crossed_module", None, lambda c: _xmod_checks(c, u.xm)))
    if col.has_errors:
        return
    for j in u.I.elements:
        if u.P.get(j) not in u.xm.G.elements:
            col.error("NON_TOTAL_TABLE", ("P", j))
    if col.has_errors:
        return
    I, G = u.I, u.xm.G
    for a in I.elements:
        for b in I.elements:
            if u.P[I.mul[(a, b)]] != G.mul[(u.P[a], u.P[b])]:
                col.violation("P_HOM", (a, b))


def validate_xmod(kind: str, s, limit: int | None = None) -> ValidationReport:
    checks = {
        "crossed_module": _xmod_checks,
        "xmod_morphism": _morphism_checks,
        "homotopy": _homotopy_checks,
        "two_group": _two_group_checks,
        "conjugation_two_cell": _conjugation_checks,
        "xmod_under_group": _under_group_checks,
    }
    if kind not in checks:
        raise InvalidInput(f"unknown kind {kind!r}")
    return run_checks(kind, limit, lambda col: checks[kind](col, s))


# crossed modules and 2-groups


def cell_name(a: str, g: str) -> str:
    return f"({a},{g})"


def two_group_from_xmod(m: CrossedModule) -> TwoGroup:
    """2-cells H⋊G: (a, g): g ⇒ ∂(a)g; horizontal composition is the semidirect product."""
    validate_xmod("crossed_module", m).require()
    H, G, d, act = m.H, m.G, m.boundary, m.action
    one = {g: ("*", "*") for g in G.elements}
    cells = {cell_name(a, g): (g, G.mul[(d[a], g)]) for a in H.elements for g in G.elements}
    vcomp = {}
    for a1 in H.elements:
        for g1 in G.elements:
            mid = G.mul[(d[a1], g1)]
            for a2 in H.elements:
                vcomp[(cell_name(a2, mid), cell_name(a1, g1))] = cell_name(H.mul[(a2, a1)], g1)
    hcomp = {}
    for a2, g2, a1, g1 in product(H.elements, G.elements, H.elements, G.elements):
        hcomp[(cell_name(a2, g2), cell_name(a1, g1))] = cell_name(H.mul[(a2, act[(g2, a1)])], G.mul[(g2, g1)])
    cat = TwoCategory(("*",), one, cells, {(g, f): G.mul[(g, f)] for g in G.elements for f in G.elements},
                      {"*": G.unit}, vcomp, hcomp, {g: cell_name(H.unit, g) for g in G.elements})
    inv_h = {cell_name(a, g): cell_name(act[(G.inv[g], H.inv[a])], G.inv[g]) for a in H.elements for g in G.elements}
    inv_v = {cell_name(a, g): cell_name(H.inv[a], G.mul[(d[a], g)]) for a in H.elements for g in G.elements}
    return TwoGroup(cat, dict(G.inv), inv_h, inv_v)


def xmod_from_two_group(t: TwoGroup) -> CrossedModule:
    """G = 1-cells, H = 2-cells out of the unit, ∂ = target, ᵍa = i_g ∘ a ∘ i_{g⁻¹}."""
    validate_xmod("two_group", t).require()
    c, e = t.cat, t.unit
    G = FinGroup(tuple(c.one_cells), e, {(g, f): c.comp1[(g, f)] for g in c.one_cells for f in c.one_cells}, dict(t.inv1))
    hs = [x for x, (s, _) in c.two_cells.items() if s == e]
    H = FinGroup(tuple(hs), c.id2[e], {(a, b): c.hcomp[(a, b)] for a in hs for b in hs}, {a: t.inv2_h[a] for a in hs})
    boundary = {a: c.two_cells[a][1] for a in hs}
    action = {(g, a): c.hcomp[(c.hcomp[(c.id2[g], a)], c.id2[t.inv1[g]])] for g in c.one_cells for a in hs}
    return CrossedModule(H, G, boundary, action)


def xmod_roundtrip_witness(m: CrossedModule) -> dict[str, dict[str, str]]:
    """Explicit iso m → xmod_from_two_group(two_group_from_xmod(m)): a ↦ (a, e)."""
    return {"H": {a: cell_name(a, m.G.unit) for a in m.H.elements}, "G": {g: g for g in m.G.elements}}


def two_group_roundtrip_witness(t: TwoGroup) -> dict[str, dict[str, str]]:
    """Explicit iso t → two_group_from_xmod(xmod_from_two_group(t)): γ: g1 ⇒ g2 ↦ (γ∘i_{g1⁻¹}, g1)."""
    c = t.cat
    cells = {x: cell_name(c.hcomp[(x, c.id2[t.inv1[g1]])], g1) for x, (g1, _) in c.two_cells.items()}
    return {"obj": {"*": "*"}, "c1": {g: g for g in c.one_cells}, "c2": cells}


def two_functor_from_morphism(m: XModMorphism, src: TwoGroup | None = None, tgt: TwoGroup | None = None) -> TwoFunctor:
    """q on 1-cells and (p, q) on 2-cells."""
    src = src or two_group_from_xmod(m.src)
    tgt = tgt or two_group_from_xmod(m.tgt)
    two = {cell_name(a, g): cell_name(m.p[a], m.q[g]) for a in m.src.H.elements for g in m.src.G.elements}
    return TwoFunctor(src.cat, tgt.cat, {"*": "*"}, dict(m.q), two)


# homotopies as 2-cells of 2-groups


def nu_to_sigma(h: Homotopy) -> dict[str, str]:
    """σ^g = (ν(g), q1(g))."""
    return {g: cell_name(h.nu[g], h.src.q[g]) for g in h.src.src.G.elements}


def sigma_to_nu(sigma: dict[str, str], m1: XModMorphism, m2: XModMorphism) -> Homotopy:
    """ν(g) = σ^g ∘ i_{(F1 g)⁻¹}, read back as an element of H′."""
    tgt = two_group_from_xmod(m1.tgt)
    c = tgt.cat
    decode = {cell_name(a, g): a for a in m1.tgt.H.elements for g in m1.tgt.G.elements}
    nu = {}
    for g, s in sigma.items():
        if s not in c.two_cells:
            raise InvalidInput(f"component for {g} is not a 2-cell", (g, s))
        cell = c.hcomp[(s, c.id2[tgt.inv1[m1.q[g]]])]
        if c.two_cells[cell][0] != tgt.unit:
            raise InvalidInput("component does not start at F1(g)", (g, s))
        nu[g] = decode[cell]
    return Homotopy(m1, m2, nu)


def sigma_as_vertical_transformation(sigma: dict[str, str], m1: XModMorphism, m2: XModMorphism) -> VerticalTransformation:
    """σ as a vertical transformation between the induced functors of ℍ𝒞 → ℍ𝒞′ (trivial object components)."""
    src, tgt = two_group_from_xmod(m1.src), two_group_from_xmod(m1.tgt)
    D, E = h_embed(src.cat), h_embed(tgt.cat)

    def lift(F: TwoFunctor) -> DoubleFunctor:
        return DoubleFunctor(D, E, dict(F.obj_map), dict(F.one_map), {"1v(*)": "1v(*)"}, dict(F.two_map))

    F1, F2 = lift(two_functor_from_morphism(m1, src, tgt)), lift(two_functor_from_morphism(m2, src, tgt))
    return VerticalTransformation(F1, F2, {"*": "1v(*)"}, dict(sigma))


def validate_sigma(sigma: dict[str, str], m1: XModMorphism, m2: XModMorphism) -> ValidationReport:
    vt = sigma_as_vertical_transformation(sigma, m1, m2)
    rep = validate_double("double_functor", vt.src)
    rep.extend(validate_double("double_functor", vt.tgt))
    rep.extend(validate_double("vertical_transformation", vt))
    return rep


def homotopy_transform(direction: str, item, context=None):
    """nu_to_sigma: Homotopy -> component map; sigma_to_nu: component map with context (m1, m2) -> Homotopy."""
    if direction == "nu_to_sigma":
        validate_xmod("homotopy", item).require()
        return nu_to_sigma(item)
    if direction == "sigma_to_nu":
        m1, m2 = context
        validate_sigma(item, m1, m2).require()
        h = sigma_to_nu(item, m1, m2)
        validate_xmod("homotopy", h).require()
        return h
    raise InvalidInput(f"unknown direction {direction!r}")


# crossed modules under I


def check_under_I(h: Homotopy, P: dict[str, str]) -> ValidationReport:
    """ν(P(j)) = e and σ^{P(j)} = i_{P′(j)}, evaluated separately; they must agree."""
    col = Collector("under_I")
    T = h.src.tgt
    sigma = nu_to_sigma(h)
    for j, pj in P.items():
        nu_ok = h.nu[pj] == T.H.unit
        sigma_ok = sigma[pj] == cell_name(T.H.unit, h.src.q[pj])
        if not nu_ok:
            col.violation("UNDER_I_NU", (j, pj, h.nu[pj]))
        if not sigma_ok:
            col.violation("UNDER_I_SIGMA", (j, pj, sigma[pj]))
        if nu_ok != sigma_ok:
            col.violation("UNDER_I_MISMATCH", (j,))
    return col.report


# double groups with folding


class NotADoubleGroup(InvalidInput):
    tag = "NOT_A_DOUBLE_GROUP"


def _square_inverses(d: DoubleCategory) -> None:
    sq = d.squares
    by_left, by_top = defaultdict(list), defaultdict(list)
    for s, b in sq.items():
        by_left[b.left].append(s)
        by_top[b.top].append(s)
    for s, b in sq.items():
        h_ok = any(d.hcomp_sq.get((s, t)) == d.h_id_sq[b.left] and d.hcomp_sq.get((t, s)) == d.h_id_sq[b.right]
                   for t in by_left[b.right])
        v_ok = any(d.vcomp_sq.get((s, t)) == d.v_id_sq[b.top] and d.vcomp_sq.get((t, s)) == d.v_id_sq[b.bottom]
                   for t in by_top[b.bottom])
        if not (h_ok and v_ok):
            raise NotADoubleGroup(f"square {s} has no {'horizontal' if not h_ok else 'vertical'} inverse", (s,))


def two_group_of(c: TwoCategory) -> TwoGroup:
    """Attach inverse tables to a one-object 2-category, or raise NotADoubleGroup."""
    if len(c.objects) != 1:
        raise NotADoubleGroup("expected exactly one object")
    e = c.id1[c.objects[0]]
    inv1 = {}
    for g in c.one_cells:
        hits = [h for h in c.one_cells if c.comp1[(g, h)] == e and c.comp1[(h, g)] == e]
        if not hits:
            raise NotADoubleGroup(f"1-cell {g} is not invertible", (g,))
        inv1[g] = hits[0]
    ie = c.id2[e]
    inv_h, inv_v = {}, {}
    for a, (f, g) in c.two_cells.items():
        hs = [b for b in c.two_cells if c.hcomp.get((a, b)) == ie and c.hcomp.get((b, a)) == ie]
        vs = [b for b in c.cells_between(g, f) if c.vcomp.get((b, a)) == c.id2[f] and c.vcomp.get((a, b)) == c.id2[g]]
        if not hs or not vs:
            raise NotADoubleGroup(f"2-cell {a} is not invertible", (a,))
        inv_h[a], inv_v[a] = hs[0], vs[0]
    return TwoGroup(c, inv1, inv_h, inv_v)


def from_xmod_under_group(u: XModUnderGroup) -> tuple[DoubleCategory, Folding]:
    """The double group with folding whose squares are the 2-cells P(k)f ⇒ gP(j) of the associated 2-group."""
    validate_xmod("xmod_under_group", u).require()
    t = two_group_from_xmod(u.xm)
    base = group_to_one_object_groupoid(u.I).as_category()
    return functor_M(TwoFunctorUnderI(base, t.cat, dict(u.P)))


def to_xmod_under_group(d: DoubleCategory, fold: Folding) -> XModUnderGroup:
    """I is the group of vertical morphisms, the crossed module comes from the horizontal 2-group, P is the holonomy."""
    validate_double("double_category", d).require()
    validate_fold("folding", fold).require()
    if len(d.objects) != 1:
        raise NotADoubleGroup("expected exactly one object")
    try:
        I = one_object_groupoid_to_group(d.vertical_category())
    except InvalidInput as e:
        raise NotADoubleGroup(f"vertical morphisms do not form a group: {e}") from None
    _square_inverses(d)
    t = two_group_of(horizontal_two_category(d))
    return XModUnderGroup(I, xmod_from_two_group(t), dict(fold.holonomy.bar))


def double_group_convert(direction: str, s):
    if direction == "from_xmod_under_group":
        return from_xmod_under_group(s)
    if direction == "to_xmod_under_group":
        d, fold = s
        return to_xmod_under_group(d, fold)
    raise InvalidInput(f"unknown direction {direction!r}")
