"""Finite strict double categories.

Square and morphism composition tables are keyed in diagrammatic order:
``hcomp_sq[(a, b)]`` is ``a`` beside ``b`` (``a`` on the left), ``vcomp_sq[(a, b)]``
is ``a`` stacked over ``b``, ``hcomp_mor[(f1, f2)]`` is ``f2∘f1`` and
``vcomp_mor[(j1, j2)]`` is ``j2∘j1``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .fincat import FinCategory, TwoCategory, _Canonical, _check_category_axioms, _check_category_tables, validate_structure
from .iso import Relational
from .report import Collector, FoldboxError, InvalidInput, ValidationReport, check_caps, run_checks


class Boundary(NamedTuple):
    top: str
    bottom: str
    left: str
    right: str


class BoundaryMismatch(FoldboxError):
    tag = "BOUNDARY_MISMATCH"


class InterchangeFailure(FoldboxError):
    tag = "INTERCHANGE"


@dataclass(frozen=True)
class DoubleCategory(_Canonical):
    objects: tuple[str, ...]
    hmor: dict[str, tuple[str, str]]
    vmor: dict[str, tuple[str, str]]
    squares: dict[str, Boundary]
    hcomp_mor: dict[tuple[str, str], str]
    vcomp_mor: dict[tuple[str, str], str]
    hcomp_sq: dict[tuple[str, str], str]
    vcomp_sq: dict[tuple[str, str], str]
    h_id_mor: dict[str, str]
    v_id_mor: dict[str, str]
    h_id_sq: dict[str, str]
    v_id_sq: dict[str, str]

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "squares", {s: Boundary(*b) for s, b in self.squares.items()})

    # composition helpers

    def hc(self, *sqs: str) -> str:
        out = sqs[0]
        for s in sqs[1:]:
            out = self.hcomp_sq[(out, s)]
        return out

    def vc(self, *sqs: str) -> str:
        out = sqs[0]
        for s in sqs[1:]:
            out = self.vcomp_sq[(out, s)]
        return out

    def hm(self, *fs: str) -> str:
        out = fs[0]
        for f in fs[1:]:
            out = self.hcomp_mor[(out, f)]
        return out

    def vm(self, *js: str) -> str:
        out = js[0]
        for j in js[1:]:
            out = self.vcomp_mor[(out, j)]
        return out

    def corner(self, a: str) -> str:
        """The identity square i_A."""
        return self.v_id_sq[self.h_id_mor[a]]

    def is_v_identity(self, j: str) -> bool:
        return self.v_id_mor.get(self.vmor[j][0]) == j

    def is_h_identity(self, f: str) -> bool:
        return self.h_id_mor.get(self.hmor[f][0]) == f

    def trivially_sided(self, s: str) -> bool:
        b = self.squares[s]
        return self.is_v_identity(b.left) and self.is_v_identity(b.right)

    @cached_property
    def by_boundary(self) -> dict[tuple[str, str, str, str], list[str]]:
        """(top, left, right, bottom) -> squares with that boundary."""
        idx = defaultdict(list)
        for s, b in self.squares.items():
            idx[(b.top, b.left, b.right, b.bottom)].append(s)
        return idx

    def boundaries(self):
        """Every compatible boundary (f, j, k, g), whether or not it has squares."""
        h_from, v_from = defaultdict(list), defaultdict(list)
        h_between = defaultdict(list)
        for f, (a, b) in self.hmor.items():
            h_from[a].append(f)
            h_between[(a, b)].append(f)
        for j, (a, _) in self.vmor.items():
            v_from[a].append(j)
        for f, (a, b) in self.hmor.items():
            for j in v_from[a]:
                for k in v_from[b]:
                    for g in h_between[(self.vmor[j][1], self.vmor[k][1])]:
                        yield f, j, k, g

    def horizontal_category(self) -> FinCategory:
        return FinCategory(self.objects, dict(self.hmor), dict(self.h_id_mor),
                           {(g, f): fg for (f, g), fg in self.hcomp_mor.items()})

    def vertical_category(self) -> FinCategory:
        return FinCategory(self.objects, dict(self.vmor), dict(self.v_id_mor),
                           {(k, j): jk for (j, k), jk in self.vcomp_mor.items()})

    def edge_symmetric(self) -> bool:
        return self.hmor == self.vmor and self.hcomp_mor == self.vcomp_mor and self.h_id_mor == self.v_id_mor

    def relational(self) -> Relational:
        r = Relational({"obj": list(self.objects), "h": list(self.hmor), "v": list(self.vmor), "sq": list(self.squares)})
        r.op("h_src", ("h",), "obj", {f: st[0] for f, st in self.hmor.items()})
        r.op("h_tgt", ("h",), "obj", {f: st[1] for f, st in self.hmor.items()})
        r.op("v_src", ("v",), "obj", {f: st[0] for f, st in self.vmor.items()})
        r.op("v_tgt", ("v",), "obj", {f: st[1] for f, st in self.vmor.items()})
        for i, side in enumerate(("top", "bottom")):
            r.op(side, ("sq",), "h", {s: b[i] for s, b in self.squares.items()})
        for i, side in enumerate(("left", "right")):
            r.op(side, ("sq",), "v", {s: b[i + 2] for s, b in self.squares.items()})
        r.op("hcomp_mor", ("h", "h"), "h", self.hcomp_mor)
        r.op("vcomp_mor", ("v", "v"), "v", self.vcomp_mor)
        r.op("hcomp_sq", ("sq", "sq"), "sq", self.hcomp_sq)
        r.op("vcomp_sq", ("sq", "sq"), "sq", self.vcomp_sq)
        r.op("h_id_mor", ("obj",), "h", self.h_id_mor)
        r.op("v_id_mor", ("obj",), "v", self.v_id_mor)
        r.op("h_id_sq", ("v",), "sq", self.h_id_sq)
        r.op("v_id_sq", ("h",), "sq", self.v_id_sq)
        return r


@dataclass(frozen=True)
class DoubleFunctor:
    src: DoubleCategory
    tgt: DoubleCategory
    obj_map: dict[str, str]
    hmor_map: dict[str, str]
    vmor_map: dict[str, str]
    sq_map: dict[str, str]


def identity_double_functor(d: DoubleCategory) -> DoubleFunctor:
    ident = lambda xs: {x: x for x in xs}
    return DoubleFunctor(d, d, ident(d.objects), ident(d.hmor), ident(d.vmor), ident(d.squares))


@dataclass(frozen=True)
class VerticalTransformation:
    src: DoubleFunctor
    tgt: DoubleFunctor
    comp_obj: dict[str, str]
    comp_hmor: dict[str, str]


@dataclass(frozen=True)
class HorizontalTransformation:
    src: DoubleFunctor
    tgt: DoubleFunctor
    comp_obj: dict[str, str]
    comp_vmor: dict[str, str]


# validation of double categories


def _double_structural(col: Collector, d: DoubleCategory, cap=None, strict_hmor: bool = True) -> None:
    check_caps(col, len(d.objects), {"hmor": len(d.hmor), "vmor": len(d.vmor)}, cap)
    if strict_hmor:
        hcat = d.horizontal_category()
        _check_category_tables(col, hcat.objects, hcat.morphisms, hcat.identity, hcat.comp, "h ")
    else:
        _check_category_tables(col, d.objects, d.hmor, d.h_id_mor,
                               {(g, f): fg for (f, g), fg in d.hcomp_mor.items()}, "h ")
    vcat = d.vertical_category()
    _check_category_tables(col, vcat.objects, vcat.morphisms, vcat.identity, vcat.comp, "v ")
    if col.has_errors:
        return
    for s, b in d.squares.items():
        if b.top not in d.hmor or b.bottom not in d.hmor or b.left not in d.vmor or b.right not in d.vmor:
            col.error("DANGLING_REFERENCE", ("square", s), "boundary names an unknown morphism")
    for j in d.vmor:
        if j not in d.h_id_sq:
            col.error("NON_TOTAL_TABLE", ("h_id_sq", j))
    for f in d.hmor:
        if f not in d.v_id_sq:
            col.error("NON_TOTAL_TABLE", ("v_id_sq", f))
    for table, keys in ((d.h_id_sq, d.vmor), (d.v_id_sq, d.hmor)):
        for k, s in table.items():
            if k not in keys or s not in d.squares:
                col.error("DANGLING_REFERENCE", ("identity square", k, s))
    if col.has_errors:
        return
    by_left, by_top = defaultdict(list), defaultdict(list)
    for s, b in d.squares.items():
        by_left[b.left].append(s)
        by_top[b.top].append(s)
    for a, b in d.squares.items():
        for c in by_left[b.right]:
            if (a, c) not in d.hcomp_sq:
                col.error("NON_TOTAL_TABLE", ("hcomp_sq", a, c))
        for c in by_top[b.bottom]:
            if (a, c) not in d.vcomp_sq:
                col.error("NON_TOTAL_TABLE", ("vcomp_sq", a, c))
    for name, table, side in (("hcomp_sq", d.hcomp_sq, (3, 2)), ("vcomp_sq", d.vcomp_sq, (1, 0))):
        for (a, c), ac in table.items():
            if a not in d.squares or c not in d.squares or ac not in d.squares:
                col.error("DANGLING_REFERENCE", (name, a, c, ac))
            elif d.squares[a][side[0]] != d.squares[c][side[1]]:
                col.error("UNDEFINED_COMPOSITE", (name, a, c))


def _double_axioms(col: Collector, d: DoubleCategory, strict_hmor: bool = True, hsq_assoc: bool = True) -> None:
    if strict_hmor:
        hcat = d.horizontal_category()
        _check_category_axioms(col, hcat.objects, hcat.morphisms, hcat.identity, hcat.comp, "H_")
    vcat = d.vertical_category()
    _check_category_axioms(col, vcat.objects, vcat.morphisms, vcat.identity, vcat.comp, "V_")
    sq, hm, vm = d.squares, d.hmor, d.vmor
    for s, b in sq.items():
        f, g, j, k = b.top, b.bottom, b.left, b.right
        if not (hm[f][0] == vm[j][0] and hm[f][1] == vm[k][0] and vm[j][1] == hm[g][0] and vm[k][1] == hm[g][1]):
            col.violation("SQUARE_BOUNDARY", (s,), "corners do not match")
    for j, s in d.h_id_sq.items():
        a, c = vm[j]
        if sq[s] != (d.h_id_mor[a], d.h_id_mor[c], j, j):
            col.violation("ID_SQ_BOUNDARY", ("h", j, s))
    for f, s in d.v_id_sq.items():
        a, b = hm[f]
        if sq[s] != (f, f, d.v_id_mor[a], d.v_id_mor[b]):
            col.violation("ID_SQ_BOUNDARY", ("v", f, s))
    for (a, b), ab in d.hcomp_sq.items():
        A, B = sq[a], sq[b]
        want = (d.hcomp_mor[(A.top, B.top)], d.hcomp_mor[(A.bottom, B.bottom)], A.left, B.right)
        if sq[ab] != want:
            col.violation("HCOMP_BOUNDARY", (a, b, ab))
    for (a, b), ab in d.vcomp_sq.items():
        A, B = sq[a], sq[b]
        want = (A.top, B.bottom, d.vcomp_mor[(A.left, B.left)], d.vcomp_mor[(A.right, B.right)])
        if sq[ab] != want:
            col.violation("VCOMP_BOUNDARY", (a, b, ab))
    if col.report.violations:
        return
    for s, b in sq.items():
        if d.hcomp_sq[(d.h_id_sq[b.left], s)] != s or d.hcomp_sq[(s, d.h_id_sq[b.right])] != s:
            col.violation("HSQ_UNIT", (s,))
        if d.vcomp_sq[(d.v_id_sq[b.top], s)] != s or d.vcomp_sq[(s, d.v_id_sq[b.bottom])] != s:
            col.violation("VSQ_UNIT", (s,))
    for (f1, f2), f12 in d.hcomp_mor.items():
        if d.hcomp_sq[(d.v_id_sq[f1], d.v_id_sq[f2])] != d.v_id_sq[f12]:
            col.violation("UNIT_COMPAT", ("h", f1, f2))
    for (j1, j2), j12 in d.vcomp_mor.items():
        if d.vcomp_sq[(d.h_id_sq[j1], d.h_id_sq[j2])] != d.h_id_sq[j12]:
            col.violation("UNIT_COMPAT", ("v", j1, j2))
    for a in d.objects:
        if d.h_id_sq[d.v_id_mor[a]] != d.v_id_sq[d.h_id_mor[a]]:
            col.violation("ID_SQ_CORNER", (a,))
    # integer-indexed adjacency: Hn[a][b] = [a b], Vn[a][b] = a over b
    names = list(sq)
    num = {s: i for i, s in enumerate(names)}
    Hn = [{} for _ in names]
    Vn = [{} for _ in names]
    for (a, b), ab in d.hcomp_sq.items():
        Hn[num[a]][num[b]] = num[ab]
    for (a, b), ab in d.vcomp_sq.items():
        Vn[num[a]][num[b]] = num[ab]
    by_top_left = defaultdict(list)
    for s, b in sq.items():
        by_top_left[(b.top, b.left)].append(num[s])
    for a in range(len(names)):
        Ha, Va = Hn[a], Vn[a]
        for b, ab in Ha.items():
            if hsq_assoc:
                Hab, Hb = Hn[ab], Hn[b]
                for c, bc in Hb.items():
                    if Hab[c] != Ha[bc]:
                        col.violation("HSQ_ASSOC", (names[a], names[b], names[c]))
        for b, ab in Va.items():
            Vab, Vb = Vn[ab], Vn[b]
            for c, bc in Vb.items():
                if Vab[c] != Va[bc]:
                    col.violation("VSQ_ASSOC", (names[a], names[b], names[c]))
    # interchange over every 2x2 block  [a b] over [c e]
    for a in range(len(names)):
        for b, ab in Hn[a].items():
            Vab, Vb = Vn[ab], Vn[b]
            bottom_b = sq[names[b]].bottom
            for c, ac in Vn[a].items():
                Hc, Hac = Hn[c], Hn[ac]
                for e in by_top_left[(bottom_b, sq[names[c]].right)]:
                    if Vab[Hc[e]] != Hac[Vb[e]]:
                        col.violation("INTERCHANGE", (names[a], names[b], names[c], names[e]))


def _double_functor_checks(col: Collector, F: DoubleFunctor) -> None:
    S, T = F.src, F.tgt
    for name, table, keys, vals in (("obj_map", F.obj_map, S.objects, T.objects), ("hmor_map", F.hmor_map, S.hmor, T.hmor),
                                    ("vmor_map", F.vmor_map, S.vmor, T.vmor), ("sq_map", F.sq_map, S.squares, T.squares)):
        for k in keys:
            if k not in table:
                col.error("NON_TOTAL_TABLE", (name, k))
            elif table[k] not in vals:
                col.error("DANGLING_REFERENCE", (name, k, table[k]))
    if col.has_errors:
        return
    om, hm, vm, sm = F.obj_map, F.hmor_map, F.vmor_map, F.sq_map
    for f, (a, b) in S.hmor.items():
        if T.hmor[hm[f]] != (om[a], om[b]):
            col.violation("DFUNCTOR_BOUNDARY", ("h", f))
    for j, (a, b) in S.vmor.items():
        if T.vmor[vm[j]] != (om[a], om[b]):
            col.violation("DFUNCTOR_BOUNDARY", ("v", j))
    for s, b in S.squares.items():
        if T.squares[sm[s]] != (hm[b.top], hm[b.bottom], vm[b.left], vm[b.right]):
            col.violation("DFUNCTOR_BOUNDARY", ("sq", s))
    for a in S.objects:
        if hm[S.h_id_mor[a]] != T.h_id_mor[om[a]] or vm[S.v_id_mor[a]] != T.v_id_mor[om[a]]:
            col.violation("DFUNCTOR_UNIT", (a,))
    for f, s in S.v_id_sq.items():
        if sm[s] != T.v_id_sq[hm[f]]:
            col.violation("DFUNCTOR_UNIT", ("v_id_sq", f))
    for j, s in S.h_id_sq.items():
        if sm[s] != T.h_id_sq[vm[j]]:
            col.violation("DFUNCTOR_UNIT", ("h_id_sq", j))
    for (x, y), xy in S.hcomp_mor.items():
        if T.hcomp_mor.get((hm[x], hm[y])) != hm[xy]:
            col.violation("DFUNCTOR_COMP", ("hmor", x, y))
    for (x, y), xy in S.vcomp_mor.items():
        if T.vcomp_mor.get((vm[x], vm[y])) != vm[xy]:
            col.violation("DFUNCTOR_COMP", ("vmor", x, y))
    for (x, y), xy in S.hcomp_sq.items():
        if T.hcomp_sq.get((sm[x], sm[y])) != sm[xy]:
            col.violation("DFUNCTOR_COMP", ("hcomp_sq", x, y))
    for (x, y), xy in S.vcomp_sq.items():
        if T.vcomp_sq.get((sm[x], sm[y])) != sm[xy]:
            col.violation("DFUNCTOR_COMP", ("vcomp_sq", x, y))


def _parallel(col: Collector, F: DoubleFunctor, G: DoubleFunctor) -> bool:
    if F.src != G.src or F.tgt != G.tgt:
        col.error("PARALLEL_MISMATCH", ("src", "tgt"), "double functors are not parallel")
        return False
    return True


def _vertical_transformation_checks(col: Collector, t: VerticalTransformation) -> None:
    F, G = t.src, t.tgt
    if not _parallel(col, F, G):
        return
    D, E = F.src, F.tgt
    for a in D.objects:
        if t.comp_obj.get(a) not in E.vmor:
            col.error("NON_TOTAL_TABLE", ("comp_obj", a))
    for f in D.hmor:
        if t.comp_hmor.get(f) not in E.squares:
            col.error("NON_TOTAL_TABLE", ("comp_hmor", f))
    if col.has_errors:
        return
    so, sh = t.comp_obj, t.comp_hmor
    for a in D.objects:
        if E.vmor[so[a]] != (F.obj_map[a], G.obj_map[a]):
            col.violation("VT_BOUNDARY", (a,))
    for f, (a, b) in D.hmor.items():
        if E.squares[sh[f]] != (F.hmor_map[f], G.hmor_map[f], so[a], so[b]):
            col.violation("VT_BOUNDARY", (f,))
    if col.report.violations:
        return
    for a in D.objects:
        if sh[D.h_id_mor[a]] != E.h_id_sq[so[a]]:
            col.violation("VT_UNIT", (a,))
    for (f, g), fg in D.hcomp_mor.items():
        if sh[fg] != E.hcomp_sq[(sh[f], sh[g])]:
            col.violation("VT_COMP", (f, g))
    for s, b in D.squares.items():
        if E.vcomp_sq[(F.sq_map[s], sh[b.bottom])] != E.vcomp_sq[(sh[b.top], G.sq_map[s])]:
            col.violation("EXCHANGE", (s,))


def _horizontal_transformation_checks(col: Collector, t: HorizontalTransformation) -> None:
    F, G = t.src, t.tgt
    if not _parallel(col, F, G):
        return
    D, E = F.src, F.tgt
    for a in D.objects:
        if t.comp_obj.get(a) not in E.hmor:
            col.error("NON_TOTAL_TABLE", ("comp_obj", a))
    for j in D.vmor:
        if t.comp_vmor.get(j) not in E.squares:
            col.error("NON_TOTAL_TABLE", ("comp_vmor", j))
    if col.has_errors:
        return
    to, tv = t.comp_obj, t.comp_vmor
    for a in D.objects:
        if E.hmor[to[a]] != (F.obj_map[a], G.obj_map[a]):
            col.violation("HT_BOUNDARY", (a,))
    for j, (a, c) in D.vmor.items():
        if E.squares[tv[j]] != (to[a], to[c], F.vmor_map[j], G.vmor_map[j]):
            col.violation("HT_BOUNDARY", (j,))
    if col.report.violations:
        return
    for a in D.objects:
        if tv[D.v_id_mor[a]] != E.v_id_sq[to[a]]:
            col.violation("HT_UNIT", (a,))
    for (j, k), jk in D.vcomp_mor.items():
        if tv[jk] != E.vcomp_sq[(tv[j], tv[k])]:
            col.violation("HT_COMP", (j, k))
    for s, b in D.squares.items():
        if E.hcomp_sq[(F.sq_map[s], tv[b.right])] != E.hcomp_sq[(tv[b.left], G.sq_map[s])]:
            col.violation("EXCHANGE", (s,))


def validate_double(kind: str, s, limit: int | None = None, cap: int | None = None) -> ValidationReport:
    if kind == "double_category":
        return run_checks(kind, limit, lambda col: _double_structural(col, s, cap), lambda col: _double_axioms(col, s))
    if kind == "double_functor":
        return run_checks(kind, limit, lambda col: _double_functor_checks(col, s))
    if kind == "vertical_transformation":
        return run_checks(kind, limit, lambda col: _vertical_transformation_checks(col, s))
    if kind == "horizontal_transformation":
        return run_checks(kind, limit, lambda col: _horizontal_transformation_checks(col, s))
    raise InvalidInput(f"unknown kind {kind!r}")


# extraction of 2-categories


def horizontal_two_category(d: DoubleCategory, direction: str = "horizontal") -> TwoCategory:
    """2-category of squares whose sides in the other direction are identities.

    ``direction="vertical"`` gives the vertical 2-category: 1-cells are the
    vertical morphisms and a square with identity top and bottom is a 2-cell
    from its left side to its right side.
    """
    if direction == "horizontal":
        cells = {s: (b.top, b.bottom) for s, b in d.squares.items()
                 if d.is_v_identity(b.left) and d.is_v_identity(b.right)}
        return TwoCategory(
            d.objects, dict(d.hmor), cells,
            {(g, f): fg for (f, g), fg in d.hcomp_mor.items()}, dict(d.h_id_mor),
            {(b, a): ab for (a, b), ab in d.vcomp_sq.items() if a in cells and b in cells},
            {(b, a): ab for (a, b), ab in d.hcomp_sq.items() if a in cells and b in cells},
            dict(d.v_id_sq))
    if direction == "vertical":
        cells = {s: (b.left, b.right) for s, b in d.squares.items()
                 if d.is_h_identity(b.top) and d.is_h_identity(b.bottom)}
        return TwoCategory(
            d.objects, dict(d.vmor), cells,
            {(k, j): jk for (j, k), jk in d.vcomp_mor.items()}, dict(d.v_id_mor),
            {(b, a): ab for (a, b), ab in d.hcomp_sq.items() if a in cells and b in cells},
            {(b, a): ab for (a, b), ab in d.vcomp_sq.items() if a in cells and b in cells},
            dict(d.h_id_sq))
    raise InvalidInput(f"unknown direction {direction!r}")


def vertical_two_category(d: DoubleCategory) -> TwoCategory:
    return horizontal_two_category(d, "vertical")


# generators


def quintet_like(c: TwoCategory, vmor: dict[str, tuple[str, str]], bar: dict[str, str],
                 vcomp_mor: dict[tuple[str, str], str], v_id_mor: dict[str, str], prefix: str) -> DoubleCategory:
    """Double category whose squares (f, j, k, g) are 2-cells bar(k)∘f ⇒ g∘bar(j) of `c`.

    Squares with identity vertical sides reuse the 2-cell id; the others are
    named ``prefix(f,j,k,g,cell)``.  Quintets, adjunction double categories and
    the double category of a 2-functor under I are all instances.
    """
    cells_by = c.two_cell_index()
    comp1, id2 = c.comp1, c.id2
    h_between = defaultdict(list)
    for f, st in c.one_cells.items():
        h_between[st].append(f)
    v_from = defaultdict(list)
    for j, (a, _) in vmor.items():
        v_from[a].append(j)
    v_ids = set(v_id_mor.values())
    squares, sid, cell_of = {}, {}, {}
    for f, (a, b) in c.one_cells.items():
        for j in v_from[a]:
            for k in v_from[b]:
                for g in h_between[(vmor[j][1], vmor[k][1])]:
                    for cell in cells_by.get((comp1[(bar[k], f)], comp1[(g, bar[j])]), ()):
                        name = cell if (j in v_ids and k in v_ids) else f"{prefix}({f},{j},{k},{g},{cell})"
                        squares[name] = Boundary(f, g, j, k)
                        sid[(f, j, k, g, cell)] = name
                        cell_of[name] = cell
    by_left, by_top = defaultdict(list), defaultdict(list)
    for s, b in squares.items():
        by_left[b.left].append(s)
        by_top[b.top].append(s)
    hcomp_sq, vcomp_sq = {}, {}
    for s, A in squares.items():
        a = cell_of[s]
        for t in by_left[A.right]:
            B, b = squares[t], cell_of[t]
            cell = c.vcomp[(c.hcomp[(id2[B.bottom], a)], c.hcomp[(b, id2[A.top])])]
            hcomp_sq[(s, t)] = sid[(comp1[(B.top, A.top)], A.left, B.right, comp1[(B.bottom, A.bottom)], cell)]
        for t in by_top[A.bottom]:
            B, b = squares[t], cell_of[t]
            cell = c.vcomp[(c.hcomp[(b, id2[bar[A.left]])], c.hcomp[(id2[bar[B.right]], a)])]
            vcomp_sq[(s, t)] = sid[(A.top, vcomp_mor[(A.left, B.left)], vcomp_mor[(A.right, B.right)], B.bottom, cell)]
    h_id_mor = dict(c.id1)
    h_id_sq = {}
    for j, (a, cc) in vmor.items():
        h_id_sq[j] = sid[(h_id_mor[a], j, j, h_id_mor[cc], id2[bar[j]])]
    v_id_sq = {}
    for f, (a, b) in c.one_cells.items():
        v_id_sq[f] = sid[(f, v_id_mor[a], v_id_mor[b], f, id2[f])]
    hcomp_mor = {(f, g): gf for (g, f), gf in comp1.items()}
    return DoubleCategory(c.objects, dict(c.one_cells), dict(vmor), squares, hcomp_mor, dict(vcomp_mor),
                          hcomp_sq, vcomp_sq, h_id_mor, dict(v_id_mor), h_id_sq, v_id_sq)


def quintets(c: TwoCategory) -> DoubleCategory:
    vcomp_mor = {(f, g): gf for (g, f), gf in c.comp1.items()}
    return quintet_like(c, dict(c.one_cells), {f: f for f in c.one_cells}, vcomp_mor, dict(c.id1), "q")


def commutative_squares(i: FinCategory) -> DoubleCategory:
    """Double category with one square s(f,j,k,g) per boundary with k∘f = g∘j."""
    mor, comp = i.morphisms, i.comp
    out = defaultdict(list)
    between = defaultdict(list)
    for m, (a, b) in mor.items():
        out[a].append(m)
        between[(a, b)].append(m)
    squares = {}
    for f, (a, b) in mor.items():
        for j in out[a]:
            for k in out[b]:
                kf = comp[(k, f)]
                for g in between[(mor[j][1], mor[k][1])]:
                    if comp[(g, j)] == kf:
                        squares[f"s({f},{j},{k},{g})"] = Boundary(f, g, j, k)
    name = lambda f, j, k, g: f"s({f},{j},{k},{g})"
    by_left, by_top = defaultdict(list), defaultdict(list)
    for s, b in squares.items():
        by_left[b.left].append(s)
        by_top[b.top].append(s)
    hcomp_sq, vcomp_sq = {}, {}
    for s, A in squares.items():
        for t in by_left[A.right]:
            B = squares[t]
            hcomp_sq[(s, t)] = name(comp[(B.top, A.top)], A.left, B.right, comp[(B.bottom, A.bottom)])
        for t in by_top[A.bottom]:
            B = squares[t]
            vcomp_sq[(s, t)] = name(A.top, comp[(B.left, A.left)], comp[(B.right, A.right)], B.bottom)
    ids = i.identity
    h_id_sq = {j: name(ids[a], j, j, ids[c]) for j, (a, c) in mor.items()}
    v_id_sq = {f: name(f, ids[a], ids[b], f) for f, (a, b) in mor.items()}
    flipped = {(f, g): gf for (g, f), gf in comp.items()}
    return DoubleCategory(i.objects, dict(mor), dict(mor), squares, flipped, dict(flipped),
                          hcomp_sq, vcomp_sq, dict(ids), dict(ids), h_id_sq, v_id_sq)


def h_embed(c: TwoCategory) -> DoubleCategory:
    """ℍ𝒞: only identity vertical morphisms, named 1v(A); squares are the 2-cells."""
    vid = {a: f"1v({a})" for a in c.objects}
    vmor = {m: (a, a) for a, m in vid.items()}
    squares = {x: Boundary(f, g, vid[c.one_cells[f][0]], vid[c.one_cells[f][1]]) for x, (f, g) in c.two_cells.items()}
    return DoubleCategory(
        c.objects, dict(c.one_cells), vmor, squares,
        {(f, g): gf for (g, f), gf in c.comp1.items()}, {(m, m): m for m in vmor},
        {(a, b): ba for (b, a), ba in c.hcomp.items()}, {(a, b): ba for (b, a), ba in c.vcomp.items()},
        dict(c.id1), vid, {vid[a]: c.id2[c.id1[a]] for a in c.objects}, dict(c.id2))


def v_embed(c: TwoCategory) -> DoubleCategory:
    """𝕍𝒞: only identity horizontal morphisms, named 1h(A); a 2-cell j ⇒ k is a square with left j, right k."""
    hid = {a: f"1h({a})" for a in c.objects}
    hmor = {m: (a, a) for a, m in hid.items()}
    squares = {x: Boundary(hid[c.one_cells[j][0]], hid[c.one_cells[j][1]], j, k) for x, (j, k) in c.two_cells.items()}
    return DoubleCategory(
        c.objects, hmor, dict(c.one_cells), squares,
        {(m, m): m for m in hmor}, {(f, g): gf for (g, f), gf in c.comp1.items()},
        {(a, b): ba for (b, a), ba in c.vcomp.items()}, {(a, b): ba for (b, a), ba in c.hcomp.items()},
        hid, dict(c.id1), dict(c.id2), {hid[a]: c.id2[c.id1[a]] for a in c.objects})


ADJUNCTION_HOM_CAP = 8


def adjunction_vmor(c: TwoCategory):
    """All adjunctions (j1 right adjoint, j2 left adjoint, unit, counit) by exhaustive search."""
    idx = c.two_cell_index()
    h_between = defaultdict(list)
    for f, st in c.one_cells.items():
        h_between[st].append(f)
    for st, fs in h_between.items():
        if len(fs) > ADJUNCTION_HOM_CAP:
            raise InvalidInput(f"hom {st} has {len(fs)} one-cells; adjunction search is capped at {ADJUNCTION_HOM_CAP}")
    comp1, hc, vc, id2 = c.comp1, c.hcomp, c.vcomp, c.id2
    found = {}
    for a in c.objects:
        for b in c.objects:
            for j1 in h_between[(a, b)]:
                for j2 in h_between[(b, a)]:
                    for eta in idx.get((c.id1[b], comp1[(j1, j2)]), ()):
                        for eps in idx.get((comp1[(j2, j1)], c.id1[a]), ()):
                            t1 = vc[(hc[(eps, id2[j2])], hc[(id2[j2], eta)])]
                            t2 = vc[(hc[(id2[j1], eps)], hc[(eta, id2[j1])])]
                            if t1 == id2[j2] and t2 == id2[j1]:
                                found[f"adj({j1},{j2},{eta},{eps})"] = (a, b, j1, j2, eta, eps)
    return found


def adjunctions(c: TwoCategory) -> DoubleCategory:
    """𝔸d𝒞: vertical morphisms are adjunctions pointing along the right adjoint; squares k1∘f ⇒ g∘j1."""
    adj = adjunction_vmor(c)
    key = {(j1, j2, eta, eps): name for name, (_, _, j1, j2, eta, eps) in adj.items()}
    vmor = {name: (a, b) for name, (a, b, *_) in adj.items()}
    bar = {name: rest[2] for name, rest in adj.items()}
    comp1, hc, vc, id2 = c.comp1, c.hcomp, c.vcomp, c.id2
    v_id_mor = {}
    for a in c.objects:
        i = c.id1[a]
        v_id_mor[a] = key[(i, i, id2[i], id2[i])]
    vcomp_mor = {}
    for n1, (a, b, j1, j2, eta, eps) in adj.items():
        for n2, (b2, e, k1, k2, eta2, eps2) in adj.items():
            if b2 != b:
                continue
            unit = vc[(hc[(hc[(id2[k1], eta)], id2[k2])], eta2)]
            counit = vc[(eps, hc[(hc[(id2[j2], eps2)], id2[j1])])]
            vcomp_mor[(n1, n2)] = key[(comp1[(k1, j1)], comp1[(j2, k2)], unit, counit)]
    return quintet_like(c, vmor, bar, vcomp_mor, v_id_mor, "a")


def generate(kind: str, base) -> DoubleCategory:
    if kind == "commutative_squares":
        if not isinstance(base, FinCategory):
            raise InvalidInput("commutative_squares needs a FinCategory")
        validate_structure("category", base).require()
        return commutative_squares(base)
    if not isinstance(base, TwoCategory):
        raise InvalidInput(f"{kind} needs a TwoCategory")
    validate_structure("two_category", base).require()
    if kind == "quintets":
        return quintets(base)
    if kind == "h_embed":
        return h_embed(base)
    if kind == "v_embed":
        return v_embed(base)
    if kind == "adjunctions":
        return adjunctions(base)
    raise InvalidInput(f"unknown generator {kind!r}")


# pasting


def grid_compose(d: DoubleCategory, grid: list[list[str]], debug: bool = False) -> str:
    """Composite of a rectangular grid of squares, rows first then stacking rows."""
    if not grid or not grid[0] or any(len(row) != len(grid[0]) for row in grid):
        raise BoundaryMismatch("grid must be a non-empty rectangle")
    sq = d.squares
    for r, row in enumerate(grid):
        for c, s in enumerate(row):
            if s not in sq:
                raise BoundaryMismatch(f"unknown square {s!r}", (r, c))
            if c + 1 < len(row) and sq[s].right != sq[row[c + 1]].left:
                raise BoundaryMismatch(f"right edge of ({r},{c}) does not match its neighbour", (r, c))
            if r + 1 < len(grid) and sq[s].bottom != sq[grid[r + 1][c]].top:
                raise BoundaryMismatch(f"bottom edge of ({r},{c}) does not match the cell below", (r, c))
    result = d.vc(*[d.hc(*row) for row in grid])
    if debug:
        cols = [d.vc(*[grid[r][c] for r in range(len(grid))]) for c in range(len(grid[0]))]
        other = d.hc(*cols)
        if other != result:
            raise InterchangeFailure(f"rows-first gives {result}, columns-first gives {other}")
    return result
