"""Finite categories, groupoids, groups, functors and strict 2-categories as tables.

Composition tables are keyed in applicative order: ``comp[(g, f)]`` is ``g∘f``
and is defined exactly when ``tgt f == src g``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, fields
from itertools import permutations, product
from typing import Callable, Iterable

from .iso import Relational
from .report import Collector, InvalidInput, ValidationReport, check_caps, run_checks


def canonical_tuple(items: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(items))


class _Canonical:
    """Mixin: variadic tuple fields (id sets) are stored sorted."""

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if f.type in ("tuple[str, ...]",) and isinstance(v, (tuple, list)):
                object.__setattr__(self, f.name, canonical_tuple(v))
            elif isinstance(v, list):
                object.__setattr__(self, f.name, tuple(v))


@dataclass(frozen=True)
class FinCategory(_Canonical):
    objects: tuple[str, ...]
    morphisms: dict[str, tuple[str, str]]
    identity: dict[str, str]
    comp: dict[tuple[str, str], str]

    def src(self, m: str) -> str:
        return self.morphisms[m][0]

    def tgt(self, m: str) -> str:
        return self.morphisms[m][1]

    def composable_pairs(self):
        out = self.outgoing()
        for f, (_, b) in self.morphisms.items():
            for g in out.get(b, ()):
                yield g, f

    def outgoing(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = defaultdict(list)
        for m, (a, _) in self.morphisms.items():
            out[a].append(m)
        return out

    def hom(self, a: str, b: str) -> list[str]:
        return sorted(m for m, st in self.morphisms.items() if st == (a, b))

    def compose(self, *ms: str) -> str:
        """compose(g, f) = g∘f; longer chains associate to the right."""
        result = ms[-1]
        for m in reversed(ms[:-1]):
            result = self.comp[(m, result)]
        return result

    def relational(self) -> Relational:
        r = Relational({"obj": list(self.objects), "mor": list(self.morphisms)})
        r.op("src", ("mor",), "obj", {m: st[0] for m, st in self.morphisms.items()})
        r.op("tgt", ("mor",), "obj", {m: st[1] for m, st in self.morphisms.items()})
        r.op("identity", ("obj",), "mor", self.identity)
        r.op("comp", ("mor", "mor"), "mor", self.comp)
        return r

    def inverse_table(self) -> dict[str, str]:
        """Inverse of every morphism, or NotAGroupoid."""
        inv = {}
        for f, (a, b) in self.morphisms.items():
            for g in self.hom(b, a):
                if self.comp[(g, f)] == self.identity[a] and self.comp[(f, g)] == self.identity[b]:
                    inv[f] = g
                    break
            else:
                raise NotAGroupoid(f"{f} has no inverse", (f,))
        return inv


class NotAGroupoid(InvalidInput):
    tag = "NOT_A_GROUPOID"


@dataclass(frozen=True)
class FinGroupoid(FinCategory):
    inv: dict[str, str] = None

    def relational(self) -> Relational:
        r = super().relational()
        r.op("inv", ("mor",), "mor", self.inv)
        return r

    def as_category(self) -> FinCategory:
        return FinCategory(self.objects, self.morphisms, self.identity, self.comp)

    @classmethod
    def from_category(cls, c: FinCategory) -> "FinGroupoid":
        return cls(c.objects, c.morphisms, c.identity, c.comp, c.inverse_table())


@dataclass(frozen=True)
class FinGroup(_Canonical):
    elements: tuple[str, ...]
    unit: str
    mul: dict[tuple[str, str], str]
    inv: dict[str, str]

    def __len__(self):
        return len(self.elements)

    def m(self, *xs: str) -> str:
        out = self.unit
        for x in xs:
            out = self.mul[(out, x)]
        return out

    @classmethod
    def from_operation(cls, elements: Iterable[str], op: Callable[[str, str], str]) -> "FinGroup":
        els = list(elements)
        mul = {(a, b): op(a, b) for a in els for b in els}
        unit = next(e for e in els if all(mul[(e, x)] == x == mul[(x, e)] for x in els))
        inv = {a: next(b for b in els if mul[(a, b)] == unit) for a in els}
        return cls(tuple(els), unit, mul, inv)

    def relational(self) -> Relational:
        r = Relational({"el": list(self.elements)})
        r.op("unit", (), "el", {(): self.unit})
        r.op("mul", ("el", "el"), "el", self.mul)
        r.op("inv", ("el",), "el", self.inv)
        return r

    def order(self, x: str) -> int:
        n, y = 1, x
        while y != self.unit:
            y, n = self.mul[(y, x)], n + 1
        return n


def cyclic_group(n: int) -> FinGroup:
    els = [str(i) for i in range(n)]
    return FinGroup.from_operation(els, lambda a, b: str((int(a) + int(b)) % n))


def symmetric_group(n: int) -> FinGroup:
    """Permutations of range(n) written as image strings, e.g. '102'; (ab)(i) = a(b(i))."""
    els = ["".join(map(str, p)) for p in permutations(range(n))]
    return FinGroup.from_operation(els, lambda a, b: "".join(a[int(b[i])] for i in range(n)))


def trivial_group() -> FinGroup:
    return cyclic_group(1)


GROUPS = {
    "C1": lambda: cyclic_group(1),
    "C2": lambda: cyclic_group(2),
    "C3": lambda: cyclic_group(3),
    "C4": lambda: cyclic_group(4),
    "C6": lambda: cyclic_group(6),
    "S3": lambda: symmetric_group(3),
}


def named_group(name: str) -> FinGroup:
    if name in GROUPS:
        return GROUPS[name]()
    if name[:1] == "C" and name[1:].isdigit():
        return cyclic_group(int(name[1:]))
    raise InvalidInput(f"unknown group {name!r}")


def group_hom(src: FinGroup, tgt: FinGroup, images: dict[str, str]) -> bool:
    return all(images[src.mul[(a, b)]] == tgt.mul[(images[a], images[b])] for a in src.elements for b in src.elements)


def group_homs(src: FinGroup, tgt: FinGroup) -> list[dict[str, str]]:
    """All homomorphisms by brute force; adequate at catalog sizes."""
    out = []
    others = [e for e in src.elements if e != src.unit]
    for imgs in product(tgt.elements, repeat=len(others)):
        m = dict(zip(others, imgs))
        m[src.unit] = tgt.unit
        if group_hom(src, tgt, m):
            out.append(m)
    return out


def group_to_one_object_groupoid(g: FinGroup) -> FinGroupoid:
    validate_structure("group", g).require()
    morphisms = {x: ("*", "*") for x in g.elements}
    return FinGroupoid(("*",), morphisms, {"*": g.unit}, dict(g.mul), dict(g.inv))


def one_object_groupoid_to_group(c: FinCategory) -> FinGroup:
    if len(c.objects) != 1:
        raise InvalidInput("expected exactly one object")
    (obj,) = c.objects
    inv = c.inv if isinstance(c, FinGroupoid) and c.inv is not None else c.inverse_table()
    return FinGroup(tuple(c.morphisms), c.identity[obj], dict(c.comp), dict(inv))


def discrete_category(objects: Iterable[str]) -> FinCategory:
    objs = list(objects)
    ids = {a: f"1_{a}" for a in objs}
    return FinCategory(tuple(objs), {m: (a, a) for a, m in ids.items()}, ids, {(m, m): m for m in ids.values()})


@dataclass(frozen=True)
class Functor:
    src: FinCategory
    tgt: FinCategory
    obj_map: dict[str, str]
    mor_map: dict[str, str]


def identity_functor(c: FinCategory) -> Functor:
    return Functor(c, c, {a: a for a in c.objects}, {m: m for m in c.morphisms})


def compose_functors(g: Functor, f: Functor) -> Functor:
    return Functor(f.src, g.tgt, {a: g.obj_map[b] for a, b in f.obj_map.items()},
                   {m: g.mor_map[n] for m, n in f.mor_map.items()})


@dataclass(frozen=True)
class NatTransform:
    src: Functor
    tgt: Functor
    components: dict[str, str]


@dataclass(frozen=True)
class TwoCategory(_Canonical):
    """Strict 2-category.

    ``vcomp[(b, a)]`` is the vertical composite doing ``a`` first;
    ``hcomp[(b, a)]`` is the horizontal composite ``b∘a`` (``a`` on the left in
    diagrams).  ``two_cells[c] = (source 1-cell, target 1-cell)``.
    """

    objects: tuple[str, ...]
    one_cells: dict[str, tuple[str, str]]
    two_cells: dict[str, tuple[str, str]]
    comp1: dict[tuple[str, str], str]
    id1: dict[str, str]
    vcomp: dict[tuple[str, str], str]
    hcomp: dict[tuple[str, str], str]
    id2: dict[str, str]

    def underlying(self) -> FinCategory:
        return FinCategory(self.objects, self.one_cells, self.id1, self.comp1)

    def relational(self) -> Relational:
        r = Relational({"obj": list(self.objects), "c1": list(self.one_cells), "c2": list(self.two_cells)})
        r.op("src1", ("c1",), "obj", {m: st[0] for m, st in self.one_cells.items()})
        r.op("tgt1", ("c1",), "obj", {m: st[1] for m, st in self.one_cells.items()})
        r.op("src2", ("c2",), "c1", {m: st[0] for m, st in self.two_cells.items()})
        r.op("tgt2", ("c2",), "c1", {m: st[1] for m, st in self.two_cells.items()})
        r.op("id1", ("obj",), "c1", self.id1)
        r.op("id2", ("c1",), "c2", self.id2)
        r.op("comp1", ("c1", "c1"), "c1", self.comp1)
        r.op("vcomp", ("c2", "c2"), "c2", self.vcomp)
        r.op("hcomp", ("c2", "c2"), "c2", self.hcomp)
        return r

    def cells_between(self, f: str, g: str) -> list[str]:
        return sorted(c for c, st in self.two_cells.items() if st == (f, g))

    def two_cell_index(self) -> dict[tuple[str, str], list[str]]:
        idx: dict[tuple[str, str], list[str]] = defaultdict(list)
        for c, st in self.two_cells.items():
            idx[st].append(c)
        return idx


def locally_discrete(c: FinCategory) -> TwoCategory:
    """A 1-category viewed as a 2-category with only identity 2-cells, named i(f)."""
    id2 = {f: f"i({f})" for f in c.morphisms}
    cells = {id2[f]: (f, f) for f in c.morphisms}
    vcomp = {(id2[f], id2[f]): id2[f] for f in c.morphisms}
    hcomp = {(id2[g], id2[f]): id2[gf] for (g, f), gf in c.comp.items()}
    return TwoCategory(c.objects, dict(c.morphisms), cells, dict(c.comp), dict(c.identity), vcomp, hcomp, id2)


@dataclass(frozen=True)
class TwoFunctor:
    src: TwoCategory
    tgt: TwoCategory
    obj_map: dict[str, str]
    one_map: dict[str, str]
    two_map: dict[str, str]


# validation


def _check_category_tables(col: Collector, objects, morphisms, identity, comp, label="") -> None:
    objs = set(objects)
    if len(objs) != len(tuple(objects)):
        col.error("DUPLICATE_ID", ("objects",), "repeated object id")
    for m, (a, b) in morphisms.items():
        for o in (a, b):
            if o not in objs:
                col.error("DANGLING_REFERENCE", (label + "morphism", m, o), "unknown object")
    for a in objs:
        if a not in identity:
            col.error("NON_TOTAL_TABLE", (label + "identity", a), "object without identity")
    for a, m in identity.items():
        if a not in objs:
            col.error("DANGLING_REFERENCE", (label + "identity", a), "unknown object")
        if m not in morphisms:
            col.error("DANGLING_REFERENCE", (label + "identity", a, m), "unknown morphism")
    if col.has_errors:
        return
    out = defaultdict(list)
    for m, (a, _) in morphisms.items():
        out[a].append(m)
    for f, (_, b) in morphisms.items():
        for g in out[b]:
            if (g, f) not in comp:
                col.error("NON_TOTAL_TABLE", (label + "comp", g, f), "composable pair without composite")
    for (g, f), gf in comp.items():
        if g not in morphisms or f not in morphisms:
            col.error("DANGLING_REFERENCE", (label + "comp", g, f), "unknown morphism")
        elif morphisms[f][1] != morphisms[g][0]:
            col.error("UNDEFINED_COMPOSITE", (label + "comp", g, f), "entry for a non-composable pair")
        if gf not in morphisms:
            col.error("DANGLING_REFERENCE", (label + "comp", g, f, gf), "unknown morphism")


def _check_category_axioms(col: Collector, objects, morphisms, identity, comp, label="") -> None:
    for a in objects:
        i = identity[a]
        if morphisms[i] != (a, a):
            col.violation(label + "IDENTITY_BOUNDARY", (a, i))
    for (g, f), gf in comp.items():
        if morphisms[gf] != (morphisms[f][0], morphisms[g][1]):
            col.violation(label + "COMP_BOUNDARY", (g, f, gf))
    for f, (a, b) in morphisms.items():
        if comp[(f, identity[a])] != f:
            col.violation(label + "UNIT_RIGHT", (f, identity[a]))
        if comp[(identity[b], f)] != f:
            col.violation(label + "UNIT_LEFT", (identity[b], f))
    out = defaultdict(list)
    for m, (a, _) in morphisms.items():
        out[a].append(m)
    for f, (_, b) in morphisms.items():
        for g in out[b]:
            gf = comp[(g, f)]
            for h in out[morphisms[g][1]]:
                if comp[(h, gf)] != comp[(comp[(h, g)], f)]:
                    col.violation(label + "ASSOCIATIVITY", (h, g, f))


def _category_report(c: FinCategory, col: Collector, cap=None) -> None:
    check_caps(col, len(c.objects), {"morphisms": len(c.morphisms)}, cap)


def _validate_category(c: FinCategory, limit=None, cap=None, kind="category") -> ValidationReport:
    def structural(col):
        _category_report(c, col, cap)
        _check_category_tables(col, c.objects, c.morphisms, c.identity, c.comp)

    def axioms(col):
        _check_category_axioms(col, c.objects, c.morphisms, c.identity, c.comp)

    phases = [structural, axioms]
    if kind == "groupoid":
        def inv_tables(col):
            if c.inv is None:
                col.error("NON_TOTAL_TABLE", ("inv",), "missing inverse table")
                return
            for f in c.morphisms:
                if f not in c.inv:
                    col.error("NON_TOTAL_TABLE", ("inv", f))
            for f, g in c.inv.items():
                if f not in c.morphisms or g not in c.morphisms:
                    col.error("DANGLING_REFERENCE", ("inv", f, g))

        def inv_axioms(col):
            for f, (a, b) in c.morphisms.items():
                g = c.inv[f]
                if c.morphisms[g] != (b, a):
                    col.violation("INVERSE_BOUNDARY", (f, g))
                    continue
                if c.comp[(g, f)] != c.identity[a] or c.comp[(f, g)] != c.identity[b]:
                    col.violation("INVERSE", (f, g))

        phases = [structural, inv_tables, axioms, inv_axioms]
    return run_checks(kind, limit, *phases)


def _validate_group(g: FinGroup, limit=None, cap=None) -> ValidationReport:
    els = set(g.elements)

    def structural(col):
        check_caps(col, 0, {"elements": len(g.elements)}, cap)
        if len(els) != len(g.elements):
            col.error("DUPLICATE_ID", ("elements",))
        if g.unit not in els:
            col.error("DANGLING_REFERENCE", ("unit", g.unit))
        for a in g.elements:
            if a not in g.inv:
                col.error("NON_TOTAL_TABLE", ("inv", a))
            for b in g.elements:
                if (a, b) not in g.mul:
                    col.error("NON_TOTAL_TABLE", ("mul", a, b))
        for (a, b), c in g.mul.items():
            if a not in els or b not in els or c not in els:
                col.error("DANGLING_REFERENCE", ("mul", a, b, c))
        for a, b in g.inv.items():
            if a not in els or b not in els:
                col.error("DANGLING_REFERENCE", ("inv", a, b))

    def axioms(col):
        e, mul = g.unit, g.mul
        for a in g.elements:
            if mul[(e, a)] != a or mul[(a, e)] != a:
                col.violation("UNIT", (a,))
            b = g.inv[a]
            if mul[(a, b)] != e or mul[(b, a)] != e:
                col.violation("INVERSE", (a, b))
        for a in g.elements:
            for b in g.elements:
                ab = mul[(a, b)]
                for c in g.elements:
                    if mul[(ab, c)] != mul[(a, mul[(b, c)])]:
                        col.violation("ASSOCIATIVITY", (a, b, c))

    return run_checks("group", limit, structural, axioms)


def _validate_functor(F: Functor, limit=None, cap=None) -> ValidationReport:
    S, T = F.src, F.tgt

    def structural(col):
        for a in S.objects:
            if a not in F.obj_map:
                col.error("NON_TOTAL_TABLE", ("obj_map", a))
            elif F.obj_map[a] not in T.objects:
                col.error("DANGLING_REFERENCE", ("obj_map", a, F.obj_map[a]))
        for m in S.morphisms:
            if m not in F.mor_map:
                col.error("NON_TOTAL_TABLE", ("mor_map", m))
            elif F.mor_map[m] not in T.morphisms:
                col.error("DANGLING_REFERENCE", ("mor_map", m, F.mor_map[m]))
        for k in F.obj_map:
            if k not in S.objects:
                col.error("DANGLING_REFERENCE", ("obj_map", k))
        for k in F.mor_map:
            if k not in S.morphisms:
                col.error("DANGLING_REFERENCE", ("mor_map", k))

    def axioms(col):
        om, mm = F.obj_map, F.mor_map
        for m, (a, b) in S.morphisms.items():
            if T.morphisms[mm[m]] != (om[a], om[b]):
                col.violation("FUNCTOR_BOUNDARY", (m, mm[m]))
        for a in S.objects:
            if mm[S.identity[a]] != T.identity[om[a]]:
                col.violation("FUNCTOR_IDENTITY", (a,))
        for (g, f), gf in S.comp.items():
            if T.comp.get((mm[g], mm[f])) != mm[gf]:
                col.violation("FUNCTOR_COMP", (g, f))

    return run_checks("functor", limit, structural, axioms)


def _validate_nat(n: NatTransform, limit=None, cap=None) -> ValidationReport:
    F, G = n.src, n.tgt

    def structural(col):
        if F.src != G.src or F.tgt != G.tgt:
            col.error("PARALLEL_MISMATCH", ("src", "tgt"), "functors are not parallel")
            return
        for a in F.src.objects:
            if a not in n.components:
                col.error("NON_TOTAL_TABLE", ("components", a))
            elif n.components[a] not in F.tgt.morphisms:
                col.error("DANGLING_REFERENCE", ("components", a, n.components[a]))

    def axioms(col):
        T = F.tgt
        for a in F.src.objects:
            if T.morphisms[n.components[a]] != (F.obj_map[a], G.obj_map[a]):
                col.violation("NAT_BOUNDARY", (a, n.components[a]))
        if col.report.violations:
            return
        for m, (a, b) in F.src.morphisms.items():
            lhs = T.comp[(G.mor_map[m], n.components[a])]
            rhs = T.comp[(n.components[b], F.mor_map[m])]
            if lhs != rhs:
                col.violation("NATURALITY", (m,))

    return run_checks("nat_transform", limit, structural, axioms)


def two_category_structural(col: Collector, t: TwoCategory) -> None:
    _check_category_tables(col, t.objects, t.one_cells, t.id1, t.comp1, "1-cell ")
    if col.has_errors:
        return
    cells = t.two_cells
    for c, (f, g) in cells.items():
        if f not in t.one_cells or g not in t.one_cells:
            col.error("DANGLING_REFERENCE", ("two_cell", c))
    for f in t.one_cells:
        if f not in t.id2:
            col.error("NON_TOTAL_TABLE", ("id2", f))
    for f, c in t.id2.items():
        if c not in cells or f not in t.one_cells:
            col.error("DANGLING_REFERENCE", ("id2", f, c))
    if col.has_errors:
        return
    by_src = defaultdict(list)
    for c, (f, _) in cells.items():
        by_src[f].append(c)
    for a, (_, g) in cells.items():
        for b in by_src[g]:
            if (b, a) not in t.vcomp:
                col.error("NON_TOTAL_TABLE", ("vcomp", b, a))
    for (b, a), ba in t.vcomp.items():
        if a not in cells or b not in cells or ba not in cells:
            col.error("DANGLING_REFERENCE", ("vcomp", b, a, ba))
        elif cells[a][1] != cells[b][0]:
            col.error("UNDEFINED_COMPOSITE", ("vcomp", b, a))
    by_obj = defaultdict(list)
    for c, (f, _) in cells.items():
        by_obj[t.one_cells[f][0]].append(c)
    for a, (f, _) in cells.items():
        for b in by_obj[t.one_cells[f][1]]:
            if (b, a) not in t.hcomp:
                col.error("NON_TOTAL_TABLE", ("hcomp", b, a))
    for (b, a), ba in t.hcomp.items():
        if a not in cells or b not in cells or ba not in cells:
            col.error("DANGLING_REFERENCE", ("hcomp", b, a, ba))
        elif t.one_cells[cells[a][0]][1] != t.one_cells[cells[b][0]][0]:
            col.error("UNDEFINED_COMPOSITE", ("hcomp", b, a))


def two_category_axioms(col: Collector, t: TwoCategory) -> None:
    _check_category_axioms(col, t.objects, t.one_cells, t.id1, t.comp1, "1-CELL_")
    cells, one = t.two_cells, t.one_cells
    for c, (f, g) in cells.items():
        if one[f] != one[g]:
            col.violation("TWO_CELL_BOUNDARY", (c, f, g))
    for f, c in t.id2.items():
        if cells[c] != (f, f):
            col.violation("ID2_BOUNDARY", (f, c))
    for (b, a), ba in t.vcomp.items():
        if cells[ba] != (cells[a][0], cells[b][1]):
            col.violation("VCOMP_BOUNDARY", (b, a, ba))
    for (b, a), ba in t.hcomp.items():
        want = (t.comp1[(cells[b][0], cells[a][0])], t.comp1[(cells[b][1], cells[a][1])])
        if cells[ba] != want:
            col.violation("HCOMP_BOUNDARY", (b, a, ba))
    if col.report.violations:
        return
    for c, (f, g) in cells.items():
        if t.vcomp[(c, t.id2[f])] != c or t.vcomp[(t.id2[g], c)] != c:
            col.violation("VCOMP_UNIT", (c,))
        a, b = one[f]
        if t.hcomp[(c, t.id2[t.id1[a]])] != c or t.hcomp[(t.id2[t.id1[b]], c)] != c:
            col.violation("HCOMP_UNIT", (c,))
    for (g, f), gf in t.comp1.items():
        if t.hcomp[(t.id2[g], t.id2[f])] != t.id2[gf]:
            col.violation("HCOMP_IDENTITY", (g, f))
    by_src = defaultdict(list)
    for c, (f, _) in cells.items():
        by_src[f].append(c)
    for a, (_, g) in cells.items():
        for b in by_src[g]:
            ba = t.vcomp[(b, a)]
            for c in by_src[cells[b][1]]:
                if t.vcomp[(c, ba)] != t.vcomp[(t.vcomp[(c, b)], a)]:
                    col.violation("VCOMP_ASSOC", (c, b, a))
    by_obj = defaultdict(list)
    for c, (f, _) in cells.items():
        by_obj[one[f][0]].append(c)
    for a, (f, _) in cells.items():
        for b in by_obj[one[f][1]]:
            ba = t.hcomp[(b, a)]
            for c in by_obj[one[cells[b][0]][1]]:
                if t.hcomp[(c, ba)] != t.hcomp[(t.hcomp[(c, b)], a)]:
                    col.violation("HCOMP_ASSOC", (c, b, a))
    # interchange: (b2·b1)∘(a2·a1) = (b2∘a2)·(b1∘a1)
    for a1, (_, fa) in cells.items():
        for a2 in by_src[fa]:
            a21 = t.vcomp[(a2, a1)]
            for b1 in by_obj[one[cells[a1][0]][1]]:
                b1a1 = t.hcomp[(b1, a1)]
                for b2 in by_src[cells[b1][1]]:
                    lhs = t.hcomp[(t.vcomp[(b2, b1)], a21)]
                    rhs = t.vcomp[(t.hcomp[(b2, a2)], b1a1)]
                    if lhs != rhs:
                        col.violation("INTERCHANGE", (b2, b1, a2, a1))


def _validate_two_category(t: TwoCategory, limit=None, cap=None) -> ValidationReport:
    def structural(col):
        check_caps(col, len(t.objects), {"one_cells": len(t.one_cells)}, cap)
        two_category_structural(col, t)

    return run_checks("two_category", limit, structural, lambda col: two_category_axioms(col, t))


def two_functor_checks(col: Collector, F: TwoFunctor) -> None:
    S, T = F.src, F.tgt
    for a in S.objects:
        if F.obj_map.get(a) not in T.objects:
            col.error("NON_TOTAL_TABLE", ("obj_map", a))
    for f in S.one_cells:
        if F.one_map.get(f) not in T.one_cells:
            col.error("NON_TOTAL_TABLE", ("one_map", f))
    for c in S.two_cells:
        if F.two_map.get(c) not in T.two_cells:
            col.error("NON_TOTAL_TABLE", ("two_map", c))
    if col.has_errors:
        return
    om, fm, cm = F.obj_map, F.one_map, F.two_map
    for f, (a, b) in S.one_cells.items():
        if T.one_cells[fm[f]] != (om[a], om[b]):
            col.violation("FUNCTOR_BOUNDARY", (f,))
    for c, (f, g) in S.two_cells.items():
        if T.two_cells[cm[c]] != (fm[f], fm[g]):
            col.violation("FUNCTOR_BOUNDARY", (c,))
    for a in S.objects:
        if fm[S.id1[a]] != T.id1[om[a]]:
            col.violation("FUNCTOR_IDENTITY", (a,))
    for f in S.one_cells:
        if cm[S.id2[f]] != T.id2[fm[f]]:
            col.violation("FUNCTOR_IDENTITY", (f,))
    for (g, f), gf in S.comp1.items():
        if T.comp1[(fm[g], fm[f])] != fm[gf]:
            col.violation("FUNCTOR_COMP", (g, f))
    for (b, a), ba in S.vcomp.items():
        if T.vcomp[(cm[b], cm[a])] != cm[ba]:
            col.violation("FUNCTOR_VCOMP", (b, a))
    for (b, a), ba in S.hcomp.items():
        if T.hcomp[(cm[b], cm[a])] != cm[ba]:
            col.violation("FUNCTOR_HCOMP", (b, a))


def validate_structure(kind: str, s, limit: int | None = None, cap: int | None = None) -> ValidationReport:
    """Validate a 1- or 2-categorical structure exhaustively.

    ``limit`` stops after that many findings (the report is then marked
    truncated); ``cap`` overrides the default size caps.
    """
    if kind == "category":
        return _validate_category(s, limit, cap)
    if kind == "groupoid":
        if not isinstance(s, FinGroupoid):
            raise InvalidInput("groupoid validation needs an inverse table")
        return _validate_category(s, limit, cap, "groupoid")
    if kind == "group":
        return _validate_group(s, limit, cap)
    if kind == "functor":
        return _validate_functor(s, limit, cap)
    if kind == "nat_transform":
        return _validate_nat(s, limit, cap)
    if kind == "two_category":
        return _validate_two_category(s, limit, cap)
    if kind == "two_functor":
        return run_checks("two_functor", limit, lambda col: two_functor_checks(col, s))
    raise InvalidInput(f"unknown kind {kind!r}")
