"""Strict I-categories and their comparison with 2-functors under I and foldings.

An I-category is stored with global tables: hom-category objects and
morphisms carry ids that are unique across all pairs (A, B), so composition
``comp_obj[(g, f)] = g∘f`` and ``comp_mor[(β, α)]`` need no pair index.
Transition functors ``X_{j,k}`` are keyed by the pair of I-morphisms.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .dblcat import Boundary, DoubleCategory, horizontal_two_category, quintet_like, validate_double
from .fincat import FinCategory, FinGroupoid, Functor, NatTransform, TwoCategory, validate_structure
from .folding import Folding, Holonomy, quintet_folding, validate_fold
from .iso import Relational, check_witness
from .report import Collector, InvalidInput, ValidationReport, run_checks


class DefiningExpressionsDisagree(InvalidInput):
    tag = "DEFINING_EXPRESSIONS_DISAGREE"


class PreconditionViolated(InvalidInput):
    tag = "PRECONDITION_VIOLATED"


@dataclass(frozen=True)
class Transition:
    obj_map: dict[str, str]
    mor_map: dict[str, str]


@dataclass(frozen=True)
class ICatAlgebra:
    base: FinCategory
    hom: dict[tuple[str, str], FinCategory]
    transition: dict[tuple[str, str], Transition]
    comp_obj: dict[tuple[str, str], str]
    comp_mor: dict[tuple[str, str], str]
    unit: dict[str, str]

    @cached_property
    def pair_of_obj(self) -> dict[str, tuple[str, str]]:
        return {f: ab for ab, c in self.hom.items() for f in c.objects}

    @cached_property
    def pair_of_mor(self) -> dict[str, tuple[str, str]]:
        return {m: ab for ab, c in self.hom.items() for m in c.morphisms}

    def cell(self, m: str) -> tuple[str, str]:
        return self.hom[self.pair_of_mor[m]].morphisms[m]

    def ident(self, f: str) -> str:
        return self.hom[self.pair_of_obj[f]].identity[f]

    def vcomp(self, b: str, a: str) -> str:
        return self.hom[self.pair_of_mor[a]].comp[(b, a)]

    def two_category(self) -> TwoCategory:
        one = dict(self.pair_of_obj)
        two = {m: self.cell(m) for m in self.pair_of_mor}
        vcomp, id2 = {}, {}
        for c in self.hom.values():
            vcomp.update(c.comp)
            id2.update(c.identity)
        return TwoCategory(self.base.objects, one, two, dict(self.comp_obj), dict(self.unit),
                           vcomp, dict(self.comp_mor), id2)

    def relational(self) -> Relational:
        r = Relational({"iobj": list(self.base.objects), "imor": list(self.base.morphisms),
                        "x1": list(self.pair_of_obj), "x2": list(self.pair_of_mor)})
        i = self.base
        r.op("isrc", ("imor",), "iobj", {m: st[0] for m, st in i.morphisms.items()})
        r.op("itgt", ("imor",), "iobj", {m: st[1] for m, st in i.morphisms.items()})
        r.op("iid", ("iobj",), "imor", i.identity)
        r.op("icomp", ("imor", "imor"), "imor", i.comp)
        r.op("x1src", ("x1",), "iobj", {f: ab[0] for f, ab in self.pair_of_obj.items()})
        r.op("x1tgt", ("x1",), "iobj", {f: ab[1] for f, ab in self.pair_of_obj.items()})
        r.op("x2src", ("x2",), "x1", {m: self.cell(m)[0] for m in self.pair_of_mor})
        r.op("x2tgt", ("x2",), "x1", {m: self.cell(m)[1] for m in self.pair_of_mor})
        r.op("x2id", ("x1",), "x2", {f: self.ident(f) for f in self.pair_of_obj})
        vcomp = {}
        for c in self.hom.values():
            vcomp.update(c.comp)
        r.op("x2vcomp", ("x2", "x2"), "x2", vcomp)
        r.op("comp_obj", ("x1", "x1"), "x1", self.comp_obj)
        r.op("comp_mor", ("x2", "x2"), "x2", self.comp_mor)
        r.op("unit", ("iobj",), "x1", self.unit)
        r.op("trans_obj", ("imor", "imor", "x1"), "x1",
             {(j, k, f): g for (j, k), t in self.transition.items() for f, g in t.obj_map.items()})
        r.op("trans_mor", ("imor", "imor", "x2"), "x2",
             {(j, k, a): b for (j, k), t in self.transition.items() for a, b in t.mor_map.items()})
        return r


@dataclass(frozen=True)
class AlgebraMorphism:
    src: ICatAlgebra
    tgt: ICatAlgebra
    obj_map: dict[str, str]
    mor_map: dict[str, str]


@dataclass(frozen=True)
class AlgebraTwoCell:
    src: AlgebraMorphism
    tgt: AlgebraMorphism
    components: dict[str, str]


@dataclass(frozen=True)
class TwoFunctorUnderI:
    base: FinCategory
    target: TwoCategory
    P: dict[str, str]


# validation


def _algebra_structural(col: Collector, x: ICatAlgebra) -> None:
    col.merge(validate_structure("category", x.base), "I:")
    if col.has_errors:
        return
    objs = x.base.objects
    for a in objs:
        for b in objs:
            if (a, b) not in x.hom:
                col.error("NON_TOTAL_TABLE", ("hom", a, b))
    for key in x.hom:
        if key[0] not in objs or key[1] not in objs:
            col.error("DANGLING_REFERENCE", ("hom", *key))
    seen: dict[str, tuple] = {}
    for key, c in x.hom.items():
        for ident in list(c.objects) + list(c.morphisms):
            if ident in seen and seen[ident] != key:
                col.error("DUPLICATE_ID", (ident, key, seen[ident]))
            seen[ident] = key
    if col.has_errors:
        return
    for key, c in x.hom.items():
        rep = validate_structure("category", c)
        for e in rep.errors + rep.violations:
            col.error("HOM_CATEGORY", (key, e.tag, *e.where))
    if col.has_errors:
        return
    I = x.base
    for j, (a, c) in I.morphisms.items():
        for k, (b, d) in I.morphisms.items():
            t = x.transition.get((j, k))
            if t is None:
                col.error("NON_TOTAL_TABLE", ("transition", j, k))
                continue
            for f in x.hom[(a, b)].objects:
                if t.obj_map.get(f) not in x.hom[(c, d)].objects:
                    col.error("NON_TOTAL_TABLE", ("transition", j, k, f))
            for m in x.hom[(a, b)].morphisms:
                if t.mor_map.get(m) not in x.hom[(c, d)].morphisms:
                    col.error("NON_TOTAL_TABLE", ("transition", j, k, m))
    for a in objs:
        if x.unit.get(a) not in x.hom[(a, a)].objects:
            col.error("NON_TOTAL_TABLE", ("unit", a))
    for a, b, c in product(objs, repeat=3):
        for g in x.hom[(b, c)].objects:
            for f in x.hom[(a, b)].objects:
                if x.comp_obj.get((g, f)) not in x.hom[(a, c)].objects:
                    col.error("NON_TOTAL_TABLE", ("comp_obj", g, f))
        for be in x.hom[(b, c)].morphisms:
            for al in x.hom[(a, b)].morphisms:
                if x.comp_mor.get((be, al)) not in x.hom[(a, c)].morphisms:
                    col.error("NON_TOTAL_TABLE", ("comp_mor", be, al))


def _algebra_axioms(col: Collector, x: ICatAlgebra, strict_assoc: bool = True) -> None:
    I, T, co, cm = x.base, x.transition, x.comp_obj, x.comp_mor
    for (j, k), t in T.items():
        (a, c), (b, d) = I.morphisms[j], I.morphisms[k]
        src, tgt = x.hom[(a, b)], x.hom[(c, d)]
        rep = validate_structure("functor", Functor(src, tgt, t.obj_map, t.mor_map))
        for v in rep.violations:
            col.violation("TRANSITION_FUNCTOR", (j, k, v.tag, *v.where))
    if col.report.violations:
        return
    for a in I.objects:
        for b in I.objects:
            t = T[(I.identity[a], I.identity[b])]
            c = x.hom[(a, b)]
            if any(t.obj_map[f] != f for f in c.objects) or any(t.mor_map[m] != m for m in c.morphisms):
                col.violation("TWO_FUNCTOR_UNIT", (a, b))
    pairs = list(I.composable_pairs())
    for j2, j1 in pairs:
        for k2, k1 in pairs:
            first, second = T[(j1, k1)], T[(j2, k2)]
            both = T[(I.comp[(j2, j1)], I.comp[(k2, k1)])]
            for f, g in first.obj_map.items():
                if both.obj_map[f] != second.obj_map[g]:
                    col.violation("TWO_FUNCTOR_COMP", ((j2, k2), (j1, k1), f))
            for m, n in first.mor_map.items():
                if both.mor_map[m] != second.mor_map[n]:
                    col.violation("TWO_FUNCTOR_COMP", ((j2, k2), (j1, k1), m))
    # ∘ is a functor on each product of hom-categories
    for a, b, c in product(I.objects, repeat=3):
        H1, H2, H3 = x.hom[(a, b)], x.hom[(b, c)], x.hom[(a, c)]
        for g in H2.objects:
            for f in H1.objects:
                if cm[(H2.identity[g], H1.identity[f])] != H3.identity[co[(g, f)]]:
                    col.violation("COMP_FUNCTOR", ("identity", g, f))
        for be, (g1, g2) in H2.morphisms.items():
            for al, (f1, f2) in H1.morphisms.items():
                if H3.morphisms[cm[(be, al)]] != (co[(g1, f1)], co[(g2, f2)]):
                    col.violation("COMP_FUNCTOR", ("boundary", be, al))
    if col.report.violations:
        return
    for a, b, c in product(I.objects, repeat=3):
        H1, H2, H3 = x.hom[(a, b)], x.hom[(b, c)], x.hom[(a, c)]
        for b2, b1 in H2.composable_pairs():
            for a2, a1 in H1.composable_pairs():
                lhs = H3.comp[(cm[(b2, a2)], cm[(b1, a1)])]
                if lhs != cm[(H2.comp[(b2, b1)], H1.comp[(a2, a1)])]:
                    col.violation("COMP_FUNCTOR", ("interchange", b2, b1, a2, a1))
    if col.report.violations:
        return
    # strict 2-naturality of ∘ and of the units
    for j, (a, a2) in I.morphisms.items():
        for k, (b, b2) in I.morphisms.items():
            tjk = T[(j, k)]
            for l, (c, c2) in I.morphisms.items():
                tkl, tjl = T[(k, l)], T[(j, l)]
                for g in x.hom[(b, c)].objects:
                    for f in x.hom[(a, b)].objects:
                        if tjl.obj_map[co[(g, f)]] != co[(tkl.obj_map[g], tjk.obj_map[f])]:
                            col.violation("TWO_NATURALITY", (j, k, l, g, f))
                for be in x.hom[(b, c)].morphisms:
                    for al in x.hom[(a, b)].morphisms:
                        if tjl.mor_map[cm[(be, al)]] != cm[(tkl.mor_map[be], tjk.mor_map[al])]:
                            col.violation("TWO_NATURALITY", (j, k, l, be, al))
        if T[(j, j)].obj_map[x.unit[a]] != x.unit[a2]:
            col.violation("UNIT_NATURALITY", (j,))
    for a, b, c, d in product(I.objects, repeat=4) if strict_assoc else ():
        for h in x.hom[(c, d)].objects:
            for g in x.hom[(b, c)].objects:
                for f in x.hom[(a, b)].objects:
                    if co[(co[(h, g)], f)] != co[(h, co[(g, f)])]:
                        col.violation("ASSOC_CIRC", (h, g, f))
        for h in x.hom[(c, d)].morphisms:
            for g in x.hom[(b, c)].morphisms:
                for f in x.hom[(a, b)].morphisms:
                    if cm[(cm[(h, g)], f)] != cm[(h, cm[(g, f)])]:
                        col.violation("ASSOC_CIRC", (h, g, f))
    for a in I.objects:
        for b in I.objects:
            ua, ub = x.unit[a], x.unit[b]
            ia, ib = x.ident(ua), x.ident(ub)
            for f in x.hom[(a, b)].objects:
                if co[(ub, f)] != f or co[(f, ua)] != f:
                    col.violation("UNIT_TRIANGLE", (f,))
            for m in x.hom[(a, b)].morphisms:
                if cm[(ib, m)] != m or cm[(m, ia)] != m:
                    col.violation("UNIT_TRIANGLE", (m,))


def _algebra_morphism_checks(col: Collector, F: AlgebraMorphism) -> None:
    X, Y = F.src, F.tgt
    if X.base != Y.base:
        col.error("PARALLEL_MISMATCH", ("base",), "algebras over different categories")
        return
    for f, ab in X.pair_of_obj.items():
        if F.obj_map.get(f) not in Y.hom[ab].objects:
            col.error("NON_TOTAL_TABLE", ("obj_map", f))
    for m, ab in X.pair_of_mor.items():
        if F.mor_map.get(m) not in Y.hom[ab].morphisms:
            col.error("NON_TOTAL_TABLE", ("mor_map", m))
    if col.has_errors:
        return
    for ab, c in X.hom.items():
        rep = validate_structure("functor", Functor(c, Y.hom[ab], {f: F.obj_map[f] for f in c.objects},
                                                    {m: F.mor_map[m] for m in c.morphisms}))
        for v in rep.violations:
            col.violation("AM_FUNCTOR", (ab, v.tag, *v.where))
    for key, t in X.transition.items():
        u = Y.transition[key]
        for f, g in t.obj_map.items():
            if F.obj_map[g] != u.obj_map[F.obj_map[f]]:
                col.violation("TWO_NATURALITY", (*key, f))
        for m, n in t.mor_map.items():
            if F.mor_map[n] != u.mor_map[F.mor_map[m]]:
                col.violation("TWO_NATURALITY", (*key, m))
    for (g, f), gf in X.comp_obj.items():
        if Y.comp_obj[(F.obj_map[g], F.obj_map[f])] != F.obj_map[gf]:
            col.violation("COMPAT_COMP", (g, f))
    for (b, a), ba in X.comp_mor.items():
        if Y.comp_mor[(F.mor_map[b], F.mor_map[a])] != F.mor_map[ba]:
            col.violation("COMPAT_COMP", (b, a))
    for a, u in X.unit.items():
        if F.obj_map[u] != Y.unit[a]:
            col.violation("COMPAT_UNIT", (a,))


def _two_cell_precondition_checks(col: Collector, s: AlgebraTwoCell) -> None:
    F, G = s.src, s.tgt
    if F.src != G.src or F.tgt != G.tgt:
        col.error("PARALLEL_MISMATCH", ("src", "tgt"))
        return
    X, Y = F.src, F.tgt
    sig = s.components
    for f, ab in X.pair_of_obj.items():
        if sig.get(f) not in Y.hom[ab].morphisms:
            col.error("NON_TOTAL_TABLE", ("components", f))
    if col.has_errors:
        return
    for ab, c in X.hom.items():
        ff = Functor(c, Y.hom[ab], {f: F.obj_map[f] for f in c.objects}, {m: F.mor_map[m] for m in c.morphisms})
        gg = Functor(c, Y.hom[ab], {f: G.obj_map[f] for f in c.objects}, {m: G.mor_map[m] for m in c.morphisms})
        rep = validate_structure("nat_transform", NatTransform(ff, gg, {f: sig[f] for f in c.objects}))
        for v in rep.errors + rep.violations:
            col.violation(v.tag, (ab, *v.where))
    if col.report.violations:
        return
    for (g, f), gf in X.comp_obj.items():
        if Y.comp_mor[(sig[g], sig[f])] != sig[gf]:
            col.violation("COMPAT_COMP", (g, f))
    for a, u in X.unit.items():
        if sig[u] != Y.ident(Y.unit[a]):
            col.violation("COMPAT_UNIT", (a,))


def _modification_checks(col: Collector, s: AlgebraTwoCell) -> None:
    X, Y = s.src.src, s.src.tgt
    sig = s.components
    for key, t in X.transition.items():
        u = Y.transition[key]
        for f, g in t.obj_map.items():
            if u.mor_map[sig[f]] != sig[g]:
                col.violation("MODIFICATION", (*key, f))


def _under_i_checks(col: Collector, z: TwoFunctorUnderI) -> None:
    col.merge(validate_structure("category", z.base), "I:")
    col.merge(validate_structure("two_category", z.target), "C:")
    if col.has_errors:
        return
    if tuple(z.base.objects) != tuple(z.target.objects):
        col.error("OBJECT_MISMATCH", (), "the 2-category must have the objects of I")
        return
    for j in z.base.morphisms:
        if z.P.get(j) not in z.target.one_cells:
            col.error("NON_TOTAL_TABLE", ("P", j))
    if col.has_errors:
        return
    I, C, P = z.base, z.target, z.P
    for j, st in I.morphisms.items():
        if C.one_cells[P[j]] != st:
            col.violation("P_BOUNDARY", (j,))
    for a in I.objects:
        if P[I.identity[a]] != C.id1[a]:
            col.violation("P_UNIT", (a,))
    for (k, j), kj in I.comp.items():
        if C.comp1.get((P[k], P[j])) != P[kj]:
            col.violation("P_COMP", (k, j))


def validate_algebra(kind: str, s, limit: int | None = None) -> ValidationReport:
    if kind == "icat_algebra":
        return run_checks(kind, limit, lambda c: _algebra_structural(c, s), lambda c: _algebra_axioms(c, s))
    if kind == "algebra_morphism":
        return run_checks(kind, limit, lambda c: _algebra_morphism_checks(c, s))
    if kind == "algebra_two_cell":
        return run_checks(kind, limit, lambda c: _two_cell_precondition_checks(c, s),
                          lambda c: _modification_checks(c, s))
    if kind == "two_functor_under_i":
        return run_checks(kind, limit, lambda c: _under_i_checks(c, s))
    raise InvalidInput(f"unknown kind {kind!r}")


# the holonomy 2-functor and the modification condition


def _inverses(I: FinCategory) -> dict[str, str]:
    if isinstance(I, FinGroupoid) and I.inv is not None:
        return dict(I.inv)
    return I.inverse_table()


def associated_P(x: ICatAlgebra) -> TwoFunctorUnderI:
    """P(j) = X_{1,j}(1_A), checked against X_{j⁻¹,1}(1_C)."""
    inv = _inverses(x.base)
    validate_algebra("icat_algebra", x).require()
    I = x.base
    P = {}
    for j, (a, c) in I.morphisms.items():
        one = x.transition[(I.identity[a], j)].obj_map[x.unit[a]]
        other = x.transition[(inv[j], I.identity[c])].obj_map[x.unit[c]]
        if one != other:
            raise DefiningExpressionsDisagree(f"P({j}) is {one} one way and {other} the other", (j,))
        P[j] = one
    return TwoFunctorUnderI(I, x.two_category(), P)


functor_K = associated_P


def check_modification_equiv(sigma: AlgebraTwoCell) -> dict:
    """Evaluate the modification condition and σ^{P(j)} = i_{P′(j)} separately."""
    pre = run_checks("algebra_two_cell", None, lambda c: _two_cell_precondition_checks(c, sigma))
    if not pre.ok:
        raise PreconditionViolated("component family is not natural or not compatible", report=pre)
    X, Y = sigma.src.src, sigma.src.tgt
    mod = run_checks("modification", None, lambda c: _modification_checks(c, sigma))
    P, Pp = associated_P(X).P, associated_P(Y).P
    failing = [j for j in X.base.morphisms if sigma.components[P[j]] != Y.ident(Pp[j])]
    return {
        "cond_i": mod.ok,
        "cond_ii": not failing,
        "cond_i_witness": [v.where for v in mod.violations[:3]],
        "cond_ii_witness": failing[:3],
    }


def two_cell_candidates(F: AlgebraMorphism, G: AlgebraMorphism) -> list[AlgebraTwoCell]:
    """Every component family F ⇒ G satisfying the natural/composition/unit preconditions."""
    X, Y = F.src, F.tgt
    by_pair: dict[tuple[str, str], list[str]] = defaultdict(list)
    for ab, c in Y.hom.items():
        for m, st in c.morphisms.items():
            by_pair[st].append(m)
    keys = sorted(X.pair_of_obj)
    choices = [by_pair[(F.obj_map[f], G.obj_map[f])] for f in keys]
    out = []
    for combo in product(*choices):
        s = AlgebraTwoCell(F, G, dict(zip(keys, combo)))
        if run_checks("algebra_two_cell", 1, lambda c: _two_cell_precondition_checks(c, s)).ok:
            out.append(s)
    return out


# constructions between 𝒳, 𝒴 and 𝒵


def reconstruct_X(z: TwoFunctorUnderI) -> ICatAlgebra:
    """X_{A,B} = Mor(A, B); X_{j,k}(f) = P(k)∘f∘P(j⁻¹), and the same whiskering on 2-cells."""
    inv = _inverses(z.base)
    validate_algebra("two_functor_under_i", z).require()
    I, C, P = z.base, z.target, z.P
    one_by, two_by = defaultdict(dict), defaultdict(dict)
    for f, st in C.one_cells.items():
        one_by[st][f] = st
    for a, (f, _) in C.two_cells.items():
        two_by[C.one_cells[f]][a] = C.two_cells[a]
    hom = {}
    for a in I.objects:
        for b in I.objects:
            objs = sorted(one_by[(a, b)])
            mors = two_by[(a, b)]
            comp = {(y, x): yx for (y, x), yx in C.vcomp.items() if x in mors}
            hom[(a, b)] = FinCategory(tuple(objs), dict(mors), {f: C.id2[f] for f in objs}, comp)
    transition = {}
    for j, (a, c) in I.morphisms.items():
        pj = P[inv[j]]
        for k, (b, d) in I.morphisms.items():
            pk = P[k]
            obj_map = {f: C.comp1[(pk, C.comp1[(f, pj)])] for f in hom[(a, b)].objects}
            mor_map = {m: C.hcomp[(C.id2[pk], C.hcomp[(m, C.id2[pj])])] for m in hom[(a, b)].morphisms}
            transition[(j, k)] = Transition(obj_map, mor_map)
    return ICatAlgebra(I, hom, transition, dict(C.comp1), dict(C.hcomp), dict(C.id1))


def functor_M(z: TwoFunctorUnderI) -> tuple[DoubleCategory, Folding]:
    """Squares (f, j, k, g) are 2-cells P(k)∘f ⇒ g∘P(j); the folding sends a square to its 2-cell."""
    validate_algebra("two_functor_under_i", z).require()
    I = z.base
    vcomp_mor = {(j, k): kj for (k, j), kj in I.comp.items()}
    d = quintet_like(z.target, dict(I.morphisms), dict(z.P), vcomp_mor, dict(I.identity), "q")
    return d, quintet_folding(z.target, d, z.P, "q")


def functor_L(d: DoubleCategory, fold: Folding) -> TwoFunctorUnderI:
    """Vertical category, horizontal 2-category and the holonomy."""
    if fold.base != d:
        raise InvalidInput("folding does not live on this double category")
    validate_fold("folding", fold).require()
    return TwoFunctorUnderI(d.vertical_category(), horizontal_two_category(d), dict(fold.holonomy.bar))


def functor_J(x: ICatAlgebra) -> tuple[DoubleCategory, Folding]:
    """Squares (f, j, k, g) are morphisms X_{1,k}(f) → X_{j⁻¹,1}(g) of X_{A,D}.

    Built from the transition functors directly; it agrees with M∘K.
    """
    inv = _inverses(x.base)
    z = associated_P(x)
    I, T, P = x.base, x.transition, z.P
    ids = I.identity
    v_ids = set(ids.values())
    hmor = dict(x.pair_of_obj)
    h_between = defaultdict(list)
    for f, st in hmor.items():
        h_between[st].append(f)
    v_from = defaultdict(list)
    for j, (a, _) in I.morphisms.items():
        v_from[a].append(j)
    arrows = defaultdict(list)
    for m in x.pair_of_mor:
        arrows[x.cell(m)].append(m)

    def whisker_after(k, f):  # P(k)∘f
        return T[(ids[hmor[f][0]], k)].obj_map[f]

    def whisker_before(g, j):  # g∘P(j)
        return T[(inv[j], ids[hmor[g][1]])].obj_map[g]

    squares, sid, cell_of = {}, {}, {}
    for f, (a, b) in hmor.items():
        for j in v_from[a]:
            for k in v_from[b]:
                for g in h_between[(I.morphisms[j][1], I.morphisms[k][1])]:
                    for m in arrows[(whisker_after(k, f), whisker_before(g, j))]:
                        name = m if (j in v_ids and k in v_ids) else f"q({f},{j},{k},{g},{m})"
                        squares[name] = Boundary(f, g, j, k)
                        sid[(f, j, k, g, m)] = name
                        cell_of[name] = m
    by_left, by_top = defaultdict(list), defaultdict(list)
    for s, bd in squares.items():
        by_left[bd.left].append(s)
        by_top[bd.top].append(s)
    cm, co = x.comp_mor, x.comp_obj
    hcomp_sq, vcomp_sq = {}, {}
    for s, A in squares.items():
        al = cell_of[s]
        for t in by_left[A.right]:
            B, be = squares[t], cell_of[t]
            # l̄ f2 f1 ⇒ g2 k̄ f1 ⇒ g2 g1 j̄
            m = x.vcomp(cm[(x.ident(B.bottom), al)], cm[(be, x.ident(A.top))])
            hcomp_sq[(s, t)] = sid[(co[(B.top, A.top)], A.left, B.right, co[(B.bottom, A.bottom)], m)]
        for t in by_top[A.bottom]:
            B, be = squares[t], cell_of[t]
            j1, k2 = A.left, B.right
            c1 = x.vcomp(T[(inv[j1], ids[I.morphisms[B.left][1]])].mor_map[be],
                         T[(ids[I.morphisms[A.left][0]], k2)].mor_map[al])
            vcomp_sq[(s, t)] = sid[(A.top, I.comp[(B.left, A.left)], I.comp[(B.right, A.right)], B.bottom, c1)]
    h_id_sq = {j: sid[(x.unit[a], j, j, x.unit[c], x.ident(P[j]))] for j, (a, c) in I.morphisms.items()}
    v_id_sq = {f: sid[(f, ids[a], ids[b], f, x.ident(f))] for f, (a, b) in hmor.items()}
    d = DoubleCategory(I.objects, hmor, dict(I.morphisms), squares, {(f, g): gf for (g, f), gf in co.items()},
                       {(j, k): kj for (k, j), kj in I.comp.items()}, hcomp_sq, vcomp_sq,
                       dict(x.unit), dict(ids), h_id_sq, v_id_sq)
    return d, Folding(Holonomy(d, dict(P)), dict(cell_of))


def yz_witness(d: DoubleCategory, fold: Folding, md: DoubleCategory) -> dict[str, dict[str, str]]:
    """Iso D → M(L(D)): identity on objects and edges, a square goes to the square carrying Λ of it."""
    v_ids = set(d.v_id_mor.values())
    sq = {}
    for s, b in d.squares.items():
        c = fold.lam[s]
        sq[s] = c if (b.left in v_ids and b.right in v_ids) else f"q({b.top},{b.left},{b.right},{b.bottom},{c})"
    ident = lambda xs: {v: v for v in xs}
    return {"obj": ident(d.objects), "h": ident(d.hmor), "v": ident(d.vmor), "sq": sq}


def check_yz(d: DoubleCategory, fold: Folding) -> bool:
    md, _ = functor_M(functor_L(d, fold))
    return check_witness(d, md, yz_witness(d, fold, md))


def algebra_witness(x: ICatAlgebra) -> dict[str, dict[str, str]]:
    """Identity maps; reconstruct_X(K(x)) shares every id with x."""
    ident = lambda xs: {v: v for v in xs}
    return {"iobj": ident(x.base.objects), "imor": ident(x.base.morphisms),
            "x1": ident(x.pair_of_obj), "x2": ident(x.pair_of_mor)}


def morphism_from_two_functor(x: ICatAlgebra, y: ICatAlgebra, one_map: dict[str, str],
                              two_map: dict[str, str]) -> AlgebraMorphism:
    return AlgebraMorphism(x, y, dict(one_map), dict(two_map))


def double_and_folding_valid(d: DoubleCategory, fold: Folding) -> ValidationReport:
    rep = validate_double("double_category", d)
    rep.extend(validate_fold("folding", fold))
    return rep
