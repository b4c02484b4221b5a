"""Named example structures and a single validation entry point keyed by kind."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Any, Callable

from . import algebra, dblcat, fincat, folding, pseudo, xmod
from .fincat import FinCategory, cyclic_group, group_to_one_object_groupoid, symmetric_group, trivial_group
from .report import InvalidInput, ValidationReport


def _folded_double(fold, limit=None, cap=None) -> ValidationReport:
    r = dblcat.validate_double("double_category", fold.base, limit, cap)
    if not r.ok:
        return r
    return folding.validate_fold("folding", fold, limit)


VALIDATORS: dict[str, Callable[..., ValidationReport]] = {
    **{k: (lambda k: lambda s, limit=None, cap=None: fincat.validate_structure(k, s, limit, cap))(k)
       for k in ("category", "groupoid", "group", "functor", "nat_transform", "two_category", "two_functor")},
    **{k: (lambda k: lambda s, limit=None, cap=None: dblcat.validate_double(k, s, limit, cap))(k)
       for k in ("double_category", "double_functor", "vertical_transformation", "horizontal_transformation")},
    **{k: (lambda k: lambda s, limit=None, cap=None: folding.validate_fold(k, s, limit))(k)
       for k in ("holonomy", "folding", "connection_pair", "thin_structure", "folding_morphism")},
    **{k: (lambda k: lambda s, limit=None, cap=None: algebra.validate_algebra(k, s, limit))(k)
       for k in ("icat_algebra", "algebra_morphism", "algebra_two_cell", "two_functor_under_i")},
    **{k: (lambda k: lambda s, limit=None, cap=None: xmod.validate_xmod(k, s, limit))(k)
       for k in ("crossed_module", "xmod_morphism", "homotopy", "two_group", "conjugation_two_cell",
                 "xmod_under_group")},
    **{k: (lambda k: lambda s, limit=None, cap=None: pseudo.validate_pseudo(k, s, limit))(k)
       for k in ("pseudo_double", "pseudo_icat", "pseudo_folding")},
    "folded_double": _folded_double,
}


def _with_base(kind: str, base_of: Callable) -> Callable[..., ValidationReport]:
    def run(s, limit=None, cap=None):
        r = dblcat.validate_double("double_category", base_of(s), limit, cap)
        if not r.ok:
            return r
        return folding.validate_fold(kind, s, limit)
    return run


for _k, _base in (("holonomy", lambda s: s.base), ("folding", lambda s: s.base),
                  ("connection_pair", lambda s: s.base), ("thin_structure", lambda s: s.base),
                  ("folding_morphism", lambda s: s.src.base)):
    VALIDATORS[_k] = _with_base(_k, _base)


def validate(kind: str, s, limit: int | None = None, cap: int | None = None) -> ValidationReport:
    if kind not in VALIDATORS:
        raise InvalidInput(f"unknown kind {kind!r}")
    return VALIDATORS[kind](s, limit, cap)


@dataclass(frozen=True)
class Entry:
    name: str
    kind: str
    value: Any


# building blocks


def terminal_category() -> FinCategory:
    return FinCategory(("*",), {"1": ("*", "*")}, {"*": "1"}, {("1", "1"): "1"})


def bg(name: str):
    groups = {"C2": lambda: cyclic_group(2), "C3": lambda: cyclic_group(3), "C4": lambda: cyclic_group(4),
              "S3": lambda: symmetric_group(3), "1": trivial_group}
    return group_to_one_object_groupoid(groups[name]())


S3_ROTATIONS = ["012", "120", "201"]


@cache
def crossed_modules() -> dict[str, xmod.CrossedModule]:
    C2, C3, C4, S3 = cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group(3)
    inversion = {(g, a): (a if g == C2.unit else C3.inv[a]) for g in C2.elements for a in C3.elements}
    return {
        "c2_in_c4": xmod.subgroup_inclusion_xmod(C2, C4, {"0": "0", "1": "2"}),
        "c3_normal_s3": xmod.conjugation_xmod(S3, S3_ROTATIONS),
        "c3_c2_inversion": xmod.trivial_boundary_xmod(C3, C2, inversion),
    }


@cache
def two_groups() -> dict[str, xmod.TwoGroup]:
    return {k: xmod.two_group_from_xmod(m) for k, m in crossed_modules().items()}


@cache
def double_groups() -> dict[str, folding.Folding]:
    xm = crossed_modules()
    under = {
        "dg_c2_in_c4": xmod.XModUnderGroup(cyclic_group(4), xm["c2_in_c4"], {g: g for g in "0123"}),
        "dg_c3_c2_inversion": xmod.XModUnderGroup(cyclic_group(2), xm["c3_c2_inversion"], {"0": "0", "1": "1"}),
    }
    return {k: xmod.double_group_convert("from_xmod_under_group", u)[1] for k, u in under.items()}


@cache
def z_catalog() -> dict[str, algebra.TwoFunctorUnderI]:
    """Strict 2-functors out of groupoids, one per algebra in the catalog."""
    tg = two_groups()
    bc2, bc4, bs3 = bg("C2").as_category(), bg("C4").as_category(), bg("S3").as_category()
    ident = lambda c: {m: m for m in c.morphisms}
    return {
        "bc2_into_c2_in_c4": algebra.TwoFunctorUnderI(bc2, tg["c2_in_c4"].cat, {"0": "0", "1": "2"}),
        "bc4_into_c2_in_c4": algebra.TwoFunctorUnderI(bc4, tg["c2_in_c4"].cat, ident(bc4)),
        "bc2_locally_discrete": algebra.TwoFunctorUnderI(bc2, fincat.locally_discrete(bc2), ident(bc2)),
        "bs3_locally_discrete": algebra.TwoFunctorUnderI(bs3, fincat.locally_discrete(bs3), ident(bs3)),
        "bs3_into_c3_normal_s3": algebra.TwoFunctorUnderI(bs3, tg["c3_normal_s3"].cat, ident(bs3)),
    }


@cache
def y_catalog() -> dict[str, folding.Folding]:
    """Double categories with folding."""
    out = {f"square_{g}": folding.commutative_folding(dblcat.commutative_squares(bg(g).as_category()))
           for g in ("C2", "C3", "S3")}
    out.update(double_groups())
    c = two_groups()["c3_c2_inversion"].cat
    q = dblcat.quintets(c)
    out["quintets_c3_c2_inversion"] = folding.quintet_folding(c, q, {j: j for j in q.vmor})
    return out


def twist_example() -> tuple[dblcat.DoubleCategory, dict[str, str], dict[str, str]]:
    """Quintets of the C2 ⊂ C4 2-group, with the composites 1 and 3 swapped along 2-cells."""
    q = dblcat.quintets(two_groups()["c2_in_c4"].cat)
    relabel = {"0": "0", "1": "3", "2": "2", "3": "1"}
    witness = {"0": q.v_id_sq["0"], "1": "(1,1)", "2": q.v_id_sq["2"], "3": "(1,3)"}
    return q, relabel, witness


@cache
def catalog() -> tuple[Entry, ...]:
    tg = two_groups()
    small = xmod.two_group_from_xmod(xmod.trivial_boundary_xmod(cyclic_group(2), cyclic_group(2),
                                                                {(g, a): a for g in "01" for a in "01"}))
    entries = [
        Entry("terminal", "category", terminal_category()),
        Entry("BC2", "groupoid", bg("C2")),
        Entry("BS3", "groupoid", bg("S3")),
    ]
    for g in ("C2", "C3", "S3"):
        entries.append(Entry(f"square_{g}", "double_category", dblcat.commutative_squares(bg(g).as_category())))
    entries += [
        Entry("quintets_c2_c2_trivial", "double_category", dblcat.quintets(small.cat)),
        Entry("quintets_bs3_locally_discrete", "double_category",
              dblcat.quintets(fincat.locally_discrete(bg("S3").as_category()))),
        Entry("h_embed_c2_in_c4", "double_category", dblcat.h_embed(tg["c2_in_c4"].cat)),
        Entry("v_embed_c2_in_c4", "double_category", dblcat.v_embed(tg["c2_in_c4"].cat)),
    ]
    for k, m in crossed_modules().items():
        entries.append(Entry(k, "crossed_module", m))
    for k, f in double_groups().items():
        entries.append(Entry(k, "folded_double", f))
    return tuple(entries)


# generated families for the equivalence checks


def inversion_xmod(n: int) -> xmod.CrossedModule:
    """C_n → C2 with trivial boundary, the generator acting by inversion."""
    H, C2 = cyclic_group(n), cyclic_group(2)
    return xmod.trivial_boundary_xmod(H, C2, {(g, a): (a if g == C2.unit else H.inv[a])
                                              for g in C2.elements for a in H.elements})


def _algebra_morphism(x, y, m: xmod.XModMorphism) -> algebra.AlgebraMorphism:
    two = {xmod.cell_name(a, g): xmod.cell_name(m.p[a], m.q[g]) for a in m.src.H.elements for g in m.src.G.elements}
    return algebra.morphism_from_two_functor(x, y, dict(m.q), two)


def modification_candidates(orders=(2, 3, 4, 6)) -> list[algebra.AlgebraTwoCell]:
    """Component families between algebras over BC2 built from kernel-rich crossed modules.

    Each algebra is reconstruct_X of the 2-functor BC2 → 2-group sending the
    generator to the generator; morphisms come from crossed-module morphisms
    fixing C2, and every family passing the naturality, composition and unit
    preconditions is kept.
    """
    bc2 = bg("C2").as_category()
    ident = {"0": "0", "1": "1"}
    mods = [inversion_xmod(n) for n in orders]
    xs = [algebra.reconstruct_X(algebra.TwoFunctorUnderI(bc2, xmod.two_group_from_xmod(m).cat, ident))
          for m in mods]
    out = []
    for ms, x in zip(mods, xs):
        for mt, y in zip(mods, xs):
            fs = [_algebra_morphism(x, y, f) for f in xmod.xmod_morphisms(ms, mt) if f.q == ident]
            for F in fs:
                for G in fs:
                    out.extend(algebra.two_cell_candidates(F, G))
    return out


@cache
def homotopy_examples() -> tuple[xmod.Homotopy, ...]:
    """Every homotopy between morphisms among a few small crossed modules."""
    mods = [inversion_xmod(2), inversion_xmod(3), crossed_modules()["c2_in_c4"],
            xmod.conjugation_xmod(symmetric_group(3), S3_ROTATIONS)]
    out = []
    for ms in mods:
        for mt in mods:
            morphs = xmod.xmod_morphisms(ms, mt)
            for m1 in morphs:
                for m2 in morphs:
                    out.extend(xmod.homotopies_between(m1, m2))
    return tuple(out)
