"""Pseudo double categories, pseudo I-categories and pseudo foldings, all with strict units.

Horizontal composition is associative only up to an associator square
``associator[(f, g, h)]`` from ``[[f g] h]`` to ``[f [g h]]`` (diagrammatic
order, identity vertical sides).  Non-strict examples come from
`transport_twist`, which relabels horizontal composites along invertible
witness squares.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, fields
from itertools import permutations, product

from .algebra import ICatAlgebra, _algebra_axioms, _algebra_structural
from .dblcat import DoubleCategory, _double_axioms, _double_structural
from .folding import Folding, Holonomy
from .report import Collector, InvalidInput, ValidationReport, run_checks


class NotInvertibleWitness(InvalidInput):
    tag = "NOT_INVERTIBLE_WITNESS"


class UnitNotFixed(InvalidInput):
    tag = "UNIT_NOT_FIXED"


@dataclass(frozen=True)
class PseudoDoubleCategory(DoubleCategory):
    associator: dict[tuple[str, str, str], str] = None
    left_unitor: dict[str, str] = None
    right_unitor: dict[str, str] = None

    def strict_part(self) -> DoubleCategory:
        return DoubleCategory(*(getattr(self, f.name) for f in fields(DoubleCategory)))


@dataclass(frozen=True)
class PseudoICat(ICatAlgebra):
    associator: dict[tuple[str, str, str], str] = None


@dataclass(frozen=True)
class PseudoFolding:
    holonomy: Holonomy
    lam: dict[str, str]

    @property
    def base(self) -> PseudoDoubleCategory:
        return self.holonomy.base


def composable_triples(d: DoubleCategory):
    out = defaultdict(list)
    for f, (a, _) in d.hmor.items():
        out[a].append(f)
    for f, (_, b) in d.hmor.items():
        for g in out[b]:
            for h in out[d.hmor[g][1]]:
                yield f, g, h


def strict_as_pseudo(d: DoubleCategory) -> PseudoDoubleCategory:
    """Identity associator and unitors."""
    assoc = {(f, g, h): d.v_id_sq[d.hm(f, g, h)] for f, g, h in composable_triples(d)}
    unitor = {f: d.v_id_sq[f] for f in d.hmor}
    return PseudoDoubleCategory(*(getattr(d, f.name) for f in fields(DoubleCategory)),
                                associator=assoc, left_unitor=unitor, right_unitor=dict(unitor))


def _vertical_inverse(d: DoubleCategory, s: str) -> str | None:
    b = d.squares[s]
    for t in d.by_boundary.get((b.bottom, b.right, b.left, b.top), ()):
        if d.vcomp_sq.get((s, t)) == d.v_id_sq[b.top] and d.vcomp_sq.get((t, s)) == d.v_id_sq[b.bottom]:
            return t
    return None


# validation


def _pseudo_double_checks(col: Collector, d: PseudoDoubleCategory) -> None:
    _double_structural(col, d, strict_hmor=False)
    if col.has_errors:
        return
    triples = list(composable_triples(d))
    for t in triples:
        if d.associator.get(t) not in d.squares:
            col.error("NON_TOTAL_TABLE", ("associator", *t))
    for name, table in (("left_unitor", d.left_unitor), ("right_unitor", d.right_unitor)):
        for f in d.hmor:
            if table.get(f) not in d.squares:
                col.error("NON_TOTAL_TABLE", (name, f))
    if col.has_errors:
        return
    hid = set(d.h_id_mor.values())
    for f, (a, b) in d.hmor.items():
        if d.hcomp_mor[(d.h_id_mor[a], f)] != f or d.hcomp_mor[(f, d.h_id_mor[b])] != f:
            col.violation("STRICT_UNIT", ("hmor", f))
        if d.left_unitor[f] != d.v_id_sq[f] or d.right_unitor[f] != d.v_id_sq[f]:
            col.violation("STRICT_UNIT", ("unitor", f))
    _double_axioms(col, d, strict_hmor=False, hsq_assoc=False)
    if col.report.violations:
        return
    A, sq = d.associator, d.squares
    vid = d.v_id_mor
    for (f, g, h) in triples:
        s = A[(f, g, h)]
        want = (d.hm(d.hm(f, g), h), d.hm(f, d.hm(g, h)), vid[d.hmor[f][0]], vid[d.hmor[h][1]])
        if sq[s] != want:
            col.violation("ASSOCIATOR_BOUNDARY", (f, g, h))
    if col.report.violations:
        return
    for (f, g, h) in triples:
        s = A[(f, g, h)]
        if (f in hid or g in hid or h in hid) and s != d.v_id_sq[sq[s].top]:
            col.violation("STRICT_UNIT", ("associator", f, g, h))
        if _vertical_inverse(d, s) is None:
            col.violation("ASSOCIATOR_INVERTIBLE", (f, g, h))
    out = defaultdict(list)
    for f, (a, _) in d.hmor.items():
        out[a].append(f)
    vs = d.v_id_sq
    for (f, g, h) in triples:
        for k in out[d.hmor[h][1]]:
            lhs = d.vc(A[(d.hm(f, g), h, k)], A[(f, g, d.hm(h, k))])
            rhs = d.vc(d.hc(A[(f, g, h)], vs[k]), A[(f, d.hm(g, h), k)], d.hc(vs[f], A[(g, h, k)]))
            if lhs != rhs:
                col.violation("PENTAGON", (f, g, h, k))
    by_left = defaultdict(list)
    for s, b in sq.items():
        by_left[b.left].append(s)
    for a, Ab in sq.items():
        for b in by_left[Ab.right]:
            Bb = sq[b]
            ab = d.hc(a, b)
            for c in by_left[Bb.right]:
                Cb = sq[c]
                lhs = d.vc(d.hc(ab, c), A[(Ab.bottom, Bb.bottom, Cb.bottom)])
                rhs = d.vc(A[(Ab.top, Bb.top, Cb.top)], d.hc(a, d.hc(b, c)))
                if lhs != rhs:
                    col.violation("ALPHA_NATURALITY", (a, b, c))


def _pseudo_icat_checks(col: Collector, x: PseudoICat) -> None:
    _algebra_structural(col, x)
    if col.has_errors:
        return
    I, co, cm = x.base, x.comp_obj, x.comp_mor
    triples = []
    for a, b, c, dd in product(I.objects, repeat=4):
        for h in x.hom[(c, dd)].objects:
            for g in x.hom[(b, c)].objects:
                for f in x.hom[(a, b)].objects:
                    triples.append((h, g, f))
    for t in triples:
        if x.associator.get(t) not in x.pair_of_mor:
            col.error("NON_TOTAL_TABLE", ("associator", *t))
    if col.has_errors:
        return
    _algebra_axioms(col, x, strict_assoc=False)
    if col.report.violations:
        return
    A = x.associator
    units = set(x.unit.values())
    for (h, g, f) in triples:
        if x.cell(A[(h, g, f)]) != (co[(co[(h, g)], f)], co[(h, co[(g, f)])]):
            col.violation("ASSOCIATOR_BOUNDARY", (h, g, f))
    if col.report.violations:
        return
    for (h, g, f) in triples:
        s = A[(h, g, f)]
        src, tgt = x.cell(s)
        if (h in units or g in units or f in units) and s != x.ident(src):
            col.violation("STRICT_UNIT", ("associator", h, g, f))
        c = x.hom[x.pair_of_mor[s]]
        if not any(c.comp.get((t, s)) == c.identity[src] and c.comp.get((s, t)) == c.identity[tgt] for t in c.hom(tgt, src)):
            col.violation("ASSOCIATOR_INVERTIBLE", (h, g, f))
    comp_pairs = defaultdict(list)
    for (h, g) in co:
        comp_pairs[g].append(h)
    for (h, g, f) in triples:
        for k in comp_pairs[h]:
            lhs = x.vcomp(A[(k, h, co[(g, f)])], A[(co[(k, h)], g, f)])
            rhs = x.vcomp(cm[(x.ident(k), A[(h, g, f)])],
                          x.vcomp(A[(k, co[(h, g)], f)], cm[(A[(k, h, g)], x.ident(f))]))
            if lhs != rhs:
                col.violation("PENTAGON", (k, h, g, f))
    mors_from = defaultdict(list)
    for m in x.pair_of_mor:
        mors_from[x.cell(m)[0]].append(m)
    for (h, g, f) in triples:
        for ga in mors_from[h]:
            for be in mors_from[g]:
                for al in mors_from[f]:
                    h2, g2, f2 = x.cell(ga)[1], x.cell(be)[1], x.cell(al)[1]
                    lhs = x.vcomp(A[(h2, g2, f2)], cm[(cm[(ga, be)], al)])
                    rhs = x.vcomp(cm[(ga, cm[(be, al)])], A[(h, g, f)])
                    if lhs != rhs:
                        col.violation("ALPHA_NATURALITY", (ga, be, al))
    T = x.transition
    for (h, g, f) in triples:
        a, b = x.pair_of_obj[f]
        c, dd = x.pair_of_obj[h]
        for j, m in product(I.morphisms, repeat=2):
            if I.morphisms[j][0] != a or I.morphisms[m][0] != dd:
                continue
            for k in I.morphisms:
                if I.morphisms[k][0] != b:
                    continue
                for l in I.morphisms:
                    if I.morphisms[l][0] != c:
                        continue
                    img = A[(T[(l, m)].obj_map[h], T[(k, l)].obj_map[g], T[(j, k)].obj_map[f])]
                    if T[(j, m)].mor_map[A[(h, g, f)]] != img:
                        col.violation("MODIFICATION", (j, k, l, m, h, g, f))


def _pseudo_folding_checks(col: Collector, pf: PseudoFolding) -> None:
    d, lam, bar = pf.base, pf.lam, pf.holonomy.bar
    for j in d.vmor:
        if bar.get(j) not in d.hmor:
            col.error("NON_TOTAL_TABLE", ("bar", j))
    for s in d.squares:
        if lam.get(s) not in d.squares:
            col.error("NON_TOTAL_TABLE", ("lambda", s))
    if col.has_errors:
        return
    for j, st in d.vmor.items():
        if d.hmor[bar[j]] != st:
            col.violation("HOLONOMY_BOUNDARY", (j,))
    for a in d.objects:
        if bar[d.v_id_mor[a]] != d.h_id_mor[a]:
            col.violation("HOLONOMY_UNIT", (a,))
    for (j, k), jk in d.vcomp_mor.items():
        if d.hcomp_mor[(bar[j], bar[k])] != bar[jk]:
            col.violation("HOLONOMY_COMP", (j, k))
    if col.report.violations:
        return
    A, sq, vs = d.associator, d.squares, d.v_id_sq
    inv = {}

    def Ainv(t):
        if t not in inv:
            inv[t] = _vertical_inverse(d, A[t])
        return inv[t]

    out = defaultdict(list)
    for f, (a, _) in d.hmor.items():
        out[a].append(f)
    for l in d.vmor:
        for f in out[d.vmor[l][1]]:
            for k in d.vmor:
                if d.vmor[k][0] == d.hmor[f][1]:
                    t = (bar[l], f, bar[k])
                    if A[t] != vs[sq[A[t]].top]:
                        col.violation("HOLONOMY_ALPHA_ID", (l, f, k))
    for s, b in sq.items():
        a, c = d.hmor[b.top][0], d.hmor[b.bottom][1]
        want = (d.hm(b.top, bar[b.right]), d.hm(bar[b.left], b.bottom), d.v_id_mor[a], d.v_id_mor[c])
        if sq[lam[s]] != want:
            col.violation("FOLD_BOUNDARY", (s,))
    if col.report.violations:
        return
    idx = d.by_boundary
    for f, j, k, g in d.boundaries():
        a, c = d.hmor[f][0], d.hmor[g][1]
        key = (d.hm(f, bar[k]), d.v_id_mor[a], d.v_id_mor[c], d.hm(bar[j], g))
        if sorted(lam[s] for s in idx.get((f, j, k, g), ())) != sorted(idx.get(key, ())):
            col.violation("FOLD_BIJECTION", (f, j, k, g))
    for s in sq:
        if d.trivially_sided(s) and lam[s] != s:
            col.violation("FOLD_AX_I", (s,))
    for j, s in d.h_id_sq.items():
        if lam[s] != vs[bar[j]]:
            col.violation("FOLD_AX_IV", (j,))
    if col.report.violations:
        return
    for (x, y), xy in d.hcomp_sq.items():
        X, Y = sq[x], sq[y]
        f1, f2, g1, g2 = X.top, Y.top, X.bottom, Y.bottom
        jb, kb, lb = bar[X.left], bar[X.right], bar[Y.right]
        inv1 = Ainv((f1, kb, g2))
        if inv1 is None:
            col.violation("ASSOCIATOR_INVERTIBLE", (f1, kb, g2))
            continue
        want = d.vc(A[(f1, f2, lb)], d.hc(vs[f1], lam[y]), inv1, d.hc(lam[x], vs[g2]), A[(jb, g1, g2)])
        if lam[xy] != want:
            col.violation("FOLD_AX_II", (x, y))
    for (x, y), xy in d.vcomp_sq.items():
        X, Y = sq[x], sq[y]
        f, g, h = X.top, X.bottom, Y.bottom
        j1, j2, k1, k2 = bar[X.left], bar[Y.left], bar[X.right], bar[Y.right]
        i1, i2 = Ainv((f, k1, k2)), Ainv((j1, j2, h))
        if i1 is None or i2 is None:
            col.violation("ASSOCIATOR_INVERTIBLE", (x, y))
            continue
        want = d.vc(i1, d.hc(lam[x], vs[k2]), A[(j1, g, k2)], d.hc(vs[j1], lam[y]), i2)
        if lam[xy] != want:
            col.violation("FOLD_AX_III", (x, y))


def validate_pseudo(kind: str, s, limit: int | None = None) -> ValidationReport:
    checks = {
        "pseudo_double": _pseudo_double_checks,
        "pseudo_icat": _pseudo_icat_checks,
        "pseudo_folding": _pseudo_folding_checks,
    }
    if kind not in checks:
        raise InvalidInput(f"unknown kind {kind!r}")
    return run_checks(kind, limit, lambda col: checks[kind](col, s))


# transport of structure


def _check_relabel(d: DoubleCategory, relabel: dict[str, str], witness: dict[str, str]) -> None:
    hid = set(d.h_id_mor.values())
    if sorted(relabel) != sorted(d.hmor) or sorted(relabel.values()) != sorted(d.hmor):
        raise InvalidInput("relabel must be a bijection on horizontal morphisms")
    for f, g in relabel.items():
        if d.hmor[f] != d.hmor[g]:
            raise InvalidInput(f"relabel moves the endpoints of {f}", (f,))
        if f in hid and g != f:
            raise UnitNotFixed(f"relabel moves the identity {f}", (f,))
        w = witness.get(f)
        if w not in d.squares or d.squares[w] != (f, g, d.v_id_mor[d.hmor[f][0]], d.v_id_mor[d.hmor[f][1]]):
            raise NotInvertibleWitness(f"no witness square {f} ⇒ {g}", (f,))
        if f in hid and w != d.v_id_sq[f]:
            raise UnitNotFixed(f"the witness at the identity {f} is not an identity square", (f,))
        if _vertical_inverse(d, w) is None:
            raise NotInvertibleWitness(f"witness {w} has no vertical inverse", (f, w))


def transport_twist(d: DoubleCategory, relabel: dict[str, str], witness: dict[str, str]) -> PseudoDoubleCategory:
    """Redefine [f g] as relabel([f g]) for non-identity f, g, conjugating squares by the witnesses.

    ``witness[x]`` is an invertible square x ⇒ relabel(x) with identity sides.
    """
    _check_relabel(d, relabel, witness)
    hid = set(d.h_id_mor.values())
    vs = d.v_id_sq
    winv = {x: _vertical_inverse(d, w) for x, w in witness.items()}

    def twisted(a, b):
        return a not in hid and b not in hid

    hcomp_mor = {}
    for (a, b), ab in d.hcomp_mor.items():
        hcomp_mor[(a, b)] = relabel[ab] if twisted(a, b) else ab

    def u(a, b):
        return witness[d.hcomp_mor[(a, b)]] if twisted(a, b) else vs[d.hcomp_mor[(a, b)]]

    def u_inv(a, b):
        return winv[d.hcomp_mor[(a, b)]] if twisted(a, b) else vs[d.hcomp_mor[(a, b)]]

    sq = d.squares
    hcomp_sq = {}
    for (x, y), xy in d.hcomp_sq.items():
        X, Y = sq[x], sq[y]
        hcomp_sq[(x, y)] = d.vc(u_inv(X.top, Y.top), xy, u(X.bottom, Y.bottom))

    def hm2(a, b):
        return hcomp_mor[(a, b)]

    assoc = {}
    for f, g, h in composable_triples(d):
        fg, gh = hm2(f, g), hm2(g, h)
        assoc[(f, g, h)] = d.vc(u_inv(fg, h), d.hc(u_inv(f, g), vs[h]), d.hc(vs[f], u(g, h)), u(f, gh))
    unitor = {f: vs[f] for f in d.hmor}
    return PseudoDoubleCategory(d.objects, dict(d.hmor), dict(d.vmor), dict(sq), hcomp_mor, dict(d.vcomp_mor),
                                hcomp_sq, dict(d.vcomp_sq), dict(d.h_id_mor), dict(d.v_id_mor),
                                dict(d.h_id_sq), dict(vs), associator=assoc, left_unitor=unitor,
                                right_unitor=dict(unitor))


def twist_folding(fold: Folding, twisted: PseudoDoubleCategory, relabel: dict[str, str],
                  witness: dict[str, str]) -> PseudoFolding:
    """Carry a strict folding across transport_twist: Λ′(α) = u⁻¹(f, k̄) ; Λ(α) ; u(j̄, g)."""
    d, bar = fold.base, fold.holonomy.bar
    hid = set(d.h_id_mor.values())
    vs = d.v_id_sq
    winv = {x: _vertical_inverse(d, w) for x, w in witness.items()}

    def u(a, b, inverse=False):
        ab = d.hcomp_mor[(a, b)]
        if a in hid or b in hid:
            return vs[ab]
        return winv[ab] if inverse else witness[ab]

    lam = {}
    for s, b in d.squares.items():
        lam[s] = d.vc(u(b.top, bar[b.right], True), fold.lam[s], u(bar[b.left], b.bottom))
    return PseudoFolding(Holonomy(twisted, dict(bar)), lam)


def admissible_relabelings(d: DoubleCategory, limit: int = 50) -> tuple[list[tuple[dict, dict]], str]:
    """Non-identity relabelings with invertible witnesses, plus an explanation when there are none."""
    hid = set(d.h_id_mor.values())
    classes = defaultdict(list)
    for f, st in d.hmor.items():
        if f not in hid:
            classes[st].append(f)
    trivial_by = {}
    for s, b in d.squares.items():
        if d.trivially_sided(s) and _vertical_inverse(d, s) is not None:
            trivial_by.setdefault((b.top, b.bottom), s)
    found = []
    keys = sorted(classes)
    for perms in product(*(permutations(classes[k]) for k in keys)):
        relabel = {f: f for f in hid}
        for k, p in zip(keys, perms):
            relabel.update(zip(classes[k], p))
        if all(relabel[f] == f for f in relabel):
            continue
        witness = {}
        for f, g in relabel.items():
            w = d.v_id_sq[f] if f == g else trivial_by.get((f, g))
            if w is None:
                break
            witness[f] = w
        else:
            found.append((relabel, witness))
            if len(found) >= limit:
                break
    if found:
        return found, f"{len(found)} admissible relabelings"
    if not any(len(v) > 1 for v in classes.values()):
        return [], "no two non-identity horizontal morphisms share endpoints"
    return [], "no invertible square with identity sides joins distinct parallel horizontal morphisms"


# pseudo I-categories


def strict_icat_as_pseudo(x: ICatAlgebra) -> PseudoICat:
    co = x.comp_obj
    assoc = {}
    for (h, g), hg in co.items():
        for (g2, f), gf in co.items():
            if g2 == g:
                assoc[(h, g, f)] = x.ident(co[(hg, f)])
    return PseudoICat(x.base, x.hom, x.transition, x.comp_obj, x.comp_mor, x.unit, associator=assoc)


def twist_icat(x: ICatAlgebra, relabel: dict[str, str], witness: dict[str, str]) -> PseudoICat:
    """The I-category analogue of transport_twist: g∘′f = relabel(g∘f) off the units.

    Transition functors are kept; the result is a valid pseudo I-category when
    relabel and witnesses commute with them (always so for trivial I).
    """
    units = set(x.unit.values())
    for f, g in relabel.items():
        if f in units and g != f:
            raise UnitNotFixed(f"relabel moves the unit {f}", (f,))
        if x.cell(witness[f]) != (f, g):
            raise NotInvertibleWitness(f"witness for {f} has the wrong boundary", (f,))
    winv = {}
    for f, w in witness.items():
        c = x.hom[x.pair_of_obj[f]]
        g = relabel[f]
        hits = [t for t in c.hom(g, f) if c.comp.get((t, w)) == c.identity[f] and c.comp.get((w, t)) == c.identity[g]]
        if not hits:
            raise NotInvertibleWitness(f"witness {w} is not invertible", (f, w))
        winv[f] = hits[0]
    co, cm = x.comp_obj, x.comp_mor

    def tw(g, f):
        return g not in units and f not in units

    comp_obj = {(g, f): relabel[gf] if tw(g, f) else gf for (g, f), gf in co.items()}

    def u(g, f):
        return witness[co[(g, f)]] if tw(g, f) else x.ident(co[(g, f)])

    def u_inv(g, f):
        return winv[co[(g, f)]] if tw(g, f) else x.ident(co[(g, f)])

    comp_mor = {}
    for (b, a), ba in cm.items():
        (g1, g2), (f1, f2) = x.cell(b), x.cell(a)
        comp_mor[(b, a)] = x.vcomp(u(g2, f2), x.vcomp(ba, u_inv(g1, f1)))
    assoc = {}
    for (h, g), _ in co.items():
        for (g2, f), _ in co.items():
            if g2 != g:
                continue
            hg, gf = comp_obj[(h, g)], comp_obj[(g, f)]
            # (h∘′g)∘′f ⇒ (h∘g)∘f = h∘(g∘f) ⇒ h∘′(g∘′f)
            s1 = u_inv(hg, f)
            s2 = cm[(u_inv(h, g), x.ident(f))]
            s3 = cm[(x.ident(h), u(g, f))]
            s4 = u(h, gf)
            assoc[(h, g, f)] = x.vcomp(s4, x.vcomp(s3, x.vcomp(s2, s1)))
    return PseudoICat(x.base, x.hom, x.transition, comp_obj, comp_mor, x.unit, associator=assoc)
