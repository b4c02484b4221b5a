"""Holonomies, foldings, connection pairs and thin structures on strict double categories.

A folding turns a square with boundary (f, j, k, g) into a square with
identity vertical sides, top ``[f k̄]`` and bottom ``[j̄ g]``, where ``j ↦ j̄``
is the holonomy.  Horizontal juxtaposition ``[a b]`` is diagrammatic, as in
`dblcat`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import permutations, product

from .dblcat import Boundary, DoubleCategory, DoubleFunctor
from .fincat import TwoCategory
from .report import Collector, FoldboxError, InvalidInput, ValidationReport, run_checks


class MissingPreimage(InvalidInput):
    tag = "MISSING_PREIMAGE"


class NotEdgeSymmetric(InvalidInput):
    tag = "NOT_EDGE_SYMMETRIC"


class NontrivialHolonomy(InvalidInput):
    tag = "NONTRIVIAL_HOLONOMY"


class ShapeMismatch(FoldboxError):
    tag = "SHAPE_MISMATCH"


class SplitMismatch(FoldboxError):
    tag = "SPLIT_MISMATCH"


@dataclass(frozen=True)
class Holonomy:
    base: DoubleCategory
    bar: dict[str, str]


@dataclass(frozen=True)
class Folding:
    holonomy: Holonomy
    lam: dict[str, str]

    @property
    def base(self) -> DoubleCategory:
        return self.holonomy.base


@dataclass(frozen=True)
class ConnectionPair:
    holonomy: Holonomy
    gamma: dict[str, str]
    gamma_prime: dict[str, str]

    @property
    def base(self) -> DoubleCategory:
        return self.holonomy.base


@dataclass(frozen=True)
class ThinStructure:
    base: DoubleCategory
    theta: dict[tuple[str, str, str, str], str]


@dataclass(frozen=True)
class FoldingMorphism:
    src: Folding
    tgt: Folding
    theta: dict[str, str]


def identity_holonomy(d: DoubleCategory) -> Holonomy:
    if not d.edge_symmetric():
        raise NotEdgeSymmetric("identity holonomy needs shared horizontal and vertical edges")
    return Holonomy(d, {j: j for j in d.vmor})


def _folded_boundary(d: DoubleCategory, bar: dict[str, str], b: Boundary) -> Boundary:
    """(top [f k̄], bottom [j̄ g], identity sides) for a square with boundary b."""
    a = d.hmor[b.top][0]
    c = d.hmor[b.bottom][1]
    return Boundary(d.hm(b.top, bar[b.right]), d.hm(bar[b.left], b.bottom), d.v_id_mor[a], d.v_id_mor[c])


# validation


def _holonomy_checks(col: Collector, h: Holonomy) -> None:
    d = h.base
    for j in d.vmor:
        if h.bar.get(j) not in d.hmor:
            col.error("NON_TOTAL_TABLE", ("bar", j))
    for j in h.bar:
        if j not in d.vmor:
            col.error("DANGLING_REFERENCE", ("bar", j))
    if col.has_errors:
        return
    bar = h.bar
    for j, st in d.vmor.items():
        if d.hmor[bar[j]] != st:
            col.violation("HOLONOMY_BOUNDARY", (j, bar[j]))
    for a in d.objects:
        if bar[d.v_id_mor[a]] != d.h_id_mor[a]:
            col.violation("HOLONOMY_UNIT", (a,))
    for (j, k), jk in d.vcomp_mor.items():
        if d.hcomp_mor.get((bar[j], bar[k])) != bar[jk]:
            col.violation("HOLONOMY_COMP", (j, k))


def _folding_checks(col: Collector, f: Folding) -> None:
    d, lam = f.base, f.lam
    _holonomy_checks(col, f.holonomy)
    for s in d.squares:
        if lam.get(s) not in d.squares:
            col.error("NON_TOTAL_TABLE", ("lambda", s))
    for s in lam:
        if s not in d.squares:
            col.error("DANGLING_REFERENCE", ("lambda", s))
    if col.has_errors or col.report.violations:
        return
    bar, sq = f.holonomy.bar, d.squares
    bad = set()
    for s, b in sq.items():
        if sq[lam[s]] != _folded_boundary(d, bar, b):
            bad.add(s)
            col.violation("FOLD_BOUNDARY", (s, lam[s]))
    if bad:
        return
    idx = d.by_boundary
    for f_, j, k, g in d.boundaries():
        fb = _folded_boundary(d, bar, Boundary(f_, g, j, k))
        images = sorted(lam[s] for s in idx.get((f_, j, k, g), ()))
        wanted = sorted(idx.get((fb.top, fb.left, fb.right, fb.bottom), ()))
        if images != wanted:
            col.violation("FOLD_BIJECTION", (f_, j, k, g))
    for s in sq:
        if d.trivially_sided(s) and lam[s] != s:
            col.violation("FOLD_AX_I", (s, lam[s]))
    for (a, b), ab in d.hcomp_sq.items():
        A, B = sq[a], sq[b]
        want = d.vc(d.hc(d.v_id_sq[A.top], lam[b]), d.hc(lam[a], d.v_id_sq[B.bottom]))
        if lam[ab] != want:
            col.violation("FOLD_AX_II", (a, b))
    for (a, b), ab in d.vcomp_sq.items():
        A, B = sq[a], sq[b]
        want = d.vc(d.hc(lam[a], d.v_id_sq[bar[B.right]]), d.hc(d.v_id_sq[bar[A.left]], lam[b]))
        if lam[ab] != want:
            col.violation("FOLD_AX_III", (a, b))
    for j, s in d.h_id_sq.items():
        if lam[s] != d.v_id_sq[bar[j]]:
            col.violation("FOLD_AX_IV", (j,))


def _connection_checks(col: Collector, cp: ConnectionPair) -> None:
    d = cp.base
    _holonomy_checks(col, cp.holonomy)
    for name, table in (("gamma", cp.gamma), ("gamma_prime", cp.gamma_prime)):
        for j in d.vmor:
            if table.get(j) not in d.squares:
                col.error("NON_TOTAL_TABLE", (name, j))
    if col.has_errors or col.report.violations:
        return
    bar, sq, G, Gp = cp.holonomy.bar, d.squares, cp.gamma, cp.gamma_prime
    hid, vid = d.h_id_mor, d.v_id_mor
    for j, (a, c) in d.vmor.items():
        if sq[G[j]] != (bar[j], hid[c], j, vid[c]):
            col.violation("CP_BOUNDARY", ("gamma", j))
        if sq[Gp[j]] != (hid[a], bar[j], vid[a], j):
            col.violation("CP_BOUNDARY", ("gamma_prime", j))
    if col.report.violations:
        return
    for a in d.objects:
        if G[vid[a]] != d.corner(a) or Gp[vid[a]] != d.corner(a):
            col.violation("CP_IDENTITY", (a,))
    for (j1, j2), j12 in d.vcomp_mor.items():
        g = d.vc(d.hc(G[j1], d.v_id_sq[bar[j2]]), d.hc(d.h_id_sq[j2], G[j2]))
        if G[j12] != g:
            col.violation("TRANSPORT_LAW_GAMMA", (j1, j2))
        gp = d.vc(d.hc(Gp[j1], d.h_id_sq[j1]), d.hc(d.v_id_sq[bar[j1]], Gp[j2]))
        if Gp[j12] != gp:
            col.violation("TRANSPORT_LAW_GAMMA_PRIME", (j1, j2))
    for j in d.vmor:
        if d.hc(Gp[j], G[j]) != d.v_id_sq[bar[j]]:
            col.violation("CP_AX_III_H", (j,))
        if d.vc(Gp[j], G[j]) != d.h_id_sq[j]:
            col.violation("CP_AX_III_V", (j,))


def commutative_boundaries(d: DoubleCategory):
    """Boundaries (f, j, k, g) of an edge-symmetric double category with [f k] = [j g]."""
    for f, j, k, g in d.boundaries():
        if d.hcomp_mor[(f, k)] == d.hcomp_mor[(j, g)]:
            yield f, j, k, g


def _thin_checks(col: Collector, t: ThinStructure) -> None:
    d = t.base
    if not d.edge_symmetric():
        col.error("NOT_EDGE_SYMMETRIC", ())
        return
    th = t.theta
    comm = set(commutative_boundaries(d))
    for key, s in th.items():
        if tuple(key) not in comm:
            col.error("DANGLING_REFERENCE", ("theta", *key), "boundary does not commute")
        elif s not in d.squares:
            col.error("DANGLING_REFERENCE", ("theta", *key, s))
    if col.has_errors:
        return
    for key in sorted(comm):
        if key not in th:
            col.violation("THIN_UNIQUE", key, "commutative boundary without a thin filler")
    for (f, j, k, g), s in th.items():
        if d.squares[s] != (f, g, j, k):
            col.violation("THIN_BOUNDARY", (f, j, k, g, s))
    if col.report.violations:
        return
    hid, vid = d.h_id_mor, d.v_id_mor
    for f, (a, b) in d.hmor.items():
        if th[(f, vid[a], vid[b], f)] != d.v_id_sq[f]:
            col.violation("THIN_IDENTITY", ("v", f))
    for j, (a, c) in d.vmor.items():
        if th[(hid[a], j, j, hid[c])] != d.h_id_sq[j]:
            col.violation("THIN_IDENTITY", ("h", j))
    by_left, by_top = defaultdict(list), defaultdict(list)
    for key in th:
        by_left[key[1]].append(key)
        by_top[key[0]].append(key)
    for (f1, j, k, g1) in th:
        a = th[(f1, j, k, g1)]
        for (f2, _, l, g2) in by_left[k]:
            key = (d.hm(f1, f2), j, l, d.hm(g1, g2))
            if th[key] != d.hc(a, th[(f2, k, l, g2)]):
                col.violation("THIN_FUNCTOR_H", ((f1, j, k, g1), (f2, k, l, g2)))
        for (_, j2, k2, h) in by_top[g1]:
            key = (f1, d.vm(j, j2), d.vm(k, k2), h)
            if th[key] != d.vc(a, th[(g1, j2, k2, h)]):
                col.violation("THIN_FUNCTOR_V", ((f1, j, k, g1), (g1, j2, k2, h)))


def _folding_morphism_checks(col: Collector, m: FoldingMorphism) -> None:
    d = m.src.base
    if m.tgt.base != d:
        col.error("PARALLEL_MISMATCH", ("base",), "foldings live on different double categories")
        return
    for j in d.vmor:
        if m.theta.get(j) not in d.squares:
            col.error("NON_TOTAL_TABLE", ("theta", j))
    if col.has_errors:
        return
    b1, b2, th = m.src.holonomy.bar, m.tgt.holonomy.bar, m.theta
    l1, l2 = m.src.lam, m.tgt.lam
    for j, (a, c) in d.vmor.items():
        if d.squares[th[j]] != (b1[j], b2[j], d.v_id_mor[a], d.v_id_mor[c]):
            col.violation("FM_BOUNDARY", (j,))
    if col.report.violations:
        return
    for a in d.objects:
        if th[d.v_id_mor[a]] != d.corner(a):
            col.violation("FM_IDENTITY", (a,))
    for (j1, j2), j12 in d.vcomp_mor.items():
        if th[j12] != d.hc(th[j1], th[j2]):
            col.violation("FM_COMPOSITION", (j1, j2))
    for s, b in d.squares.items():
        lhs = d.vc(l1[s], d.hc(th[b.left], d.v_id_sq[b.bottom]))
        rhs = d.vc(d.hc(d.v_id_sq[b.top], th[b.right]), l2[s])
        if lhs != rhs:
            col.violation("FM_NATURALITY", (s,))


def validate_fold(kind: str, s, limit: int | None = None) -> ValidationReport:
    checks = {
        "holonomy": _holonomy_checks,
        "folding": _folding_checks,
        "connection_pair": _connection_checks,
        "thin_structure": _thin_checks,
        "folding_morphism": _folding_morphism_checks,
    }
    if kind not in checks:
        raise InvalidInput(f"unknown kind {kind!r}")
    return run_checks(kind, limit, lambda col: checks[kind](col, s))


# conversions


def folding_from_connection(cp: ConnectionPair) -> Folding:
    """Λ(α) = [Γ′(j) α Γ(k)]."""
    validate_fold("connection_pair", cp).require()
    d = cp.base
    lam = {s: d.hc(cp.gamma_prime[b.left], s, cp.gamma[b.right]) for s, b in d.squares.items()}
    return Folding(cp.holonomy, lam)


def _preimage(f: Folding, target: str, boundary: tuple[str, str, str, str]) -> str:
    hits = [s for s in f.base.by_boundary.get(boundary, ()) if f.lam[s] == target]
    if len(hits) != 1:
        raise MissingPreimage(f"{len(hits)} preimages of {target} at boundary {boundary}", boundary)
    return hits[0]


def connection_from_folding(f: Folding) -> ConnectionPair:
    """Γ(j) and Γ′(j) are the preimages of i^v_{j̄} at the two one-sided boundaries."""
    validate_fold("holonomy", f.holonomy).require()
    d, bar = f.base, f.holonomy.bar
    gamma, gamma_prime = {}, {}
    for j, (a, c) in d.vmor.items():
        target = d.v_id_sq[bar[j]]
        gamma[j] = _preimage(f, target, (bar[j], j, d.v_id_mor[c], d.h_id_mor[c]))
        gamma_prime[j] = _preimage(f, target, (d.h_id_mor[a], d.v_id_mor[a], j, bar[j]))
    return ConnectionPair(f.holonomy, gamma, gamma_prime)


def folding_iso(f1: Folding, f2: Folding) -> tuple[FoldingMorphism, FoldingMorphism]:
    """θj = Λ₂(Γ₁(j)) with inverse Λ₂(Γ′₁(j)); both stack equations are verified."""
    validate_fold("folding", f1).require()
    validate_fold("folding", f2).require()
    if f1.base != f2.base:
        raise InvalidInput("foldings live on different double categories")
    d = f1.base
    cp = connection_from_folding(f1)
    theta = {j: f2.lam[cp.gamma[j]] for j in d.vmor}
    inverse = {j: f2.lam[cp.gamma_prime[j]] for j in d.vmor}
    b1, b2 = f1.holonomy.bar, f2.holonomy.bar
    for j in d.vmor:
        if d.vc(theta[j], inverse[j]) != d.v_id_sq[b1[j]] or d.vc(inverse[j], theta[j]) != d.v_id_sq[b2[j]]:
            raise InvalidInput(f"θ is not invertible at {j}", (j,))
    fwd, back = FoldingMorphism(f1, f2, theta), FoldingMorphism(f2, f1, inverse)
    validate_fold("folding_morphism", fwd).require()
    validate_fold("folding_morphism", back).require()
    return fwd, back


def gauge_folding(f: Folding, theta: dict[str, str], inverse: dict[str, str]) -> Folding:
    """Second folding with the same holonomy, Λ′(α) = [i_f θ(k)⁻¹] ; Λ(α) ; [θ(j) i_g].

    θ(j) must be an invertible square j̄ ⇒ j̄ with identity sides, multiplicative
    in j; the result is then a folding isomorphic to f through θ.
    """
    d = f.base
    lam = {}
    for s, b in d.squares.items():
        lam[s] = d.vc(d.hc(d.v_id_sq[b.top], inverse[b.right]), f.lam[s], d.hc(theta[b.left], d.v_id_sq[b.bottom]))
    return Folding(f.holonomy, lam)


def gauge_twins(f: Folding, limit: int = 64) -> list[Folding]:
    """Foldings obtained from f by a non-trivial gauge θ, found by exhaustive search."""
    d, bar = f.base, f.holonomy.bar
    options = {}
    for j in sorted(d.vmor):
        a, b = d.hmor[bar[j]]
        opts = []
        for s in d.by_boundary.get((bar[j], d.v_id_mor[a], d.v_id_mor[b], bar[j]), ()):
            inv = [t for t in d.by_boundary[(bar[j], d.v_id_mor[a], d.v_id_mor[b], bar[j])]
                   if d.vcomp_sq.get((s, t)) == d.v_id_sq[bar[j]] == d.vcomp_sq.get((t, s))]
            if inv:
                opts.append((s, inv[0]))
        options[j] = opts
    keys = sorted(options)
    out = []
    for combo in product(*(options[j] for j in keys)):
        theta = {j: c[0] for j, c in zip(keys, combo)}
        if all(theta[j] == d.v_id_sq[bar[j]] for j in keys):
            continue
        if any(theta[jk] != d.hc(theta[j], theta[k]) for (j, k), jk in d.vcomp_mor.items()):
            continue
        g = gauge_folding(f, theta, {j: c[1] for j, c in zip(keys, combo)})
        if g.lam != f.lam and validate_fold("folding", g, limit=1).ok:
            out.append(g)
            if len(out) >= limit:
                break
    return out


def _require_thin_base(d: DoubleCategory, bar: dict[str, str] | None = None) -> None:
    if not d.edge_symmetric():
        raise NotEdgeSymmetric("thin structures need shared horizontal and vertical edges")
    if bar is not None and any(bar[j] != j for j in d.vmor):
        raise NontrivialHolonomy("thin structures need the identity holonomy")


def connection_to_thin(cp: ConnectionPair) -> ThinStructure:
    """Θ(f, j, k, g) = [i_f Γ′(k)] stacked over [Γ(j) i_g]."""
    d = cp.base
    _require_thin_base(d, cp.holonomy.bar)
    validate_fold("connection_pair", cp).require()
    G, Gp = cp.gamma, cp.gamma_prime
    theta = {}
    for f, j, k, g in commutative_boundaries(d):
        theta[(f, j, k, g)] = d.vc(d.hc(d.v_id_sq[f], Gp[k]), d.hc(G[j], d.v_id_sq[g]))
    return ThinStructure(d, theta)


def thin_to_connection(t: ThinStructure) -> ConnectionPair:
    """Γ(j) = Θ(j, j, 1, 1) and Γ′(j) = Θ(1, 1, j, j)."""
    d = t.base
    _require_thin_base(d)
    validate_fold("thin_structure", t).require()
    hid, vid = d.h_id_mor, d.v_id_mor
    gamma = {j: t.theta[(j, j, vid[c], hid[c])] for j, (a, c) in d.vmor.items()}
    gamma_prime = {j: t.theta[(hid[a], vid[a], j, j)] for j, (a, c) in d.vmor.items()}
    return ConnectionPair(identity_holonomy(d), gamma, gamma_prime)


def thin_convert(direction: str, s):
    if direction == "connection_to_thin":
        return connection_to_thin(s)
    if direction == "thin_to_connection":
        return thin_to_connection(s)
    raise InvalidInput(f"unknown direction {direction!r}")


# mixed composition


def mixed_compose(h: Holonomy, lhs: tuple[str, str], rhs: tuple[str, str]) -> tuple[str, str]:
    """Applicative composite lhs∘rhs of tagged cells ('h', f), ('v', j) or ('sq', α).

    A vertical morphism j acts through j̄ (or i^v_{j̄} next to a square); two
    vertical morphisms compose vertically.  Squares must have identity sides.
    """
    d, bar = h.base, h.bar
    kinds = {lhs[0], rhs[0]}
    if not kinds <= {"h", "v", "sq"}:
        raise ShapeMismatch(f"unknown tags {sorted(kinds)}")
    try:
        if kinds == {"v"}:
            return "v", d.vcomp_mor[(rhs[1], lhs[1])]
        if "sq" in kinds:
            def lift(x):
                tag, v = x
                if tag == "sq":
                    if not d.trivially_sided(v):
                        raise ShapeMismatch(f"square {v} has non-identity vertical sides")
                    return v
                return d.v_id_sq[bar[v] if tag == "v" else v]
            return "sq", d.hcomp_sq[(lift(rhs), lift(lhs))]
        down = lambda x: bar[x[1]] if x[0] == "v" else x[1]
        return "h", d.hcomp_mor[(down(rhs), down(lhs))]
    except KeyError as e:
        raise ShapeMismatch(f"{lhs} and {rhs} are not composable") from e


# the extended double category


def extend_with_holonomy(h: Holonomy) -> tuple[DoubleCategory, Holonomy, DoubleFunctor]:
    """Adjoin a horizontal copy ι(j) of each vertical morphism; the holonomy becomes j ↦ ι(j).

    Horizontal identities become ι(1^v_A), copies compose among themselves like
    the vertical morphisms, and any other composite is taken in the base after
    projecting ι(j) ↦ j̄.  A square is a base square α together with lifts of
    its top and bottom edges.  Returns the new double category, its inclusion
    holonomy and the projection onto the base.
    """
    validate_fold("holonomy", h).require()
    d, bar = h.base, h.bar
    inc = {j: f"hol({j})" for j in d.vmor}
    if set(inc.values()) & set(d.hmor):
        raise InvalidInput("horizontal ids collide with the adjoined copies")
    proj = {f: f for f in d.hmor} | {inc[j]: bar[j] for j in d.vmor}
    hmor = dict(d.hmor) | {inc[j]: st for j, st in d.vmor.items()}
    h_id_mor = {a: inc[d.v_id_mor[a]] for a in d.objects}
    hcomp_mor = {}
    out_of = defaultdict(list)
    for x, (a, _) in hmor.items():
        out_of[a].append(x)
    copies = {v: j for j, v in inc.items()}
    for x, (_, b) in hmor.items():
        for y in out_of[b]:
            if x in copies and y in copies:
                hcomp_mor[(x, y)] = inc[d.vcomp_mor[(copies[x], copies[y])]]
            elif x in copies and d.is_v_identity(copies[x]):
                hcomp_mor[(x, y)] = y
            elif y in copies and d.is_v_identity(copies[y]):
                hcomp_mor[(x, y)] = x
            else:
                hcomp_mor[(x, y)] = d.hcomp_mor[(proj[x], proj[y])]
    lifts = defaultdict(list)
    for x in hmor:
        lifts[proj[x]].append(x)
    name = lambda top, bottom, s: s if top in d.hmor and bottom in d.hmor else f"ext({top},{bottom},{s})"
    squares, base_of = {}, {}
    for s, b in d.squares.items():
        for top in lifts[b.top]:
            for bottom in lifts[b.bottom]:
                n = name(top, bottom, s)
                squares[n] = Boundary(top, bottom, b.left, b.right)
                base_of[n] = s
    by_left, by_top = defaultdict(list), defaultdict(list)
    for n, b in squares.items():
        by_left[b.left].append(n)
        by_top[b.top].append(n)
    hcomp_sq, vcomp_sq = {}, {}
    for n, A in squares.items():
        for m in by_left[A.right]:
            B = squares[m]
            hcomp_sq[(n, m)] = name(hcomp_mor[(A.top, B.top)], hcomp_mor[(A.bottom, B.bottom)],
                                    d.hcomp_sq[(base_of[n], base_of[m])])
        for m in by_top[A.bottom]:
            B = squares[m]
            vcomp_sq[(n, m)] = name(A.top, B.bottom, d.vcomp_sq[(base_of[n], base_of[m])])
    h_id_sq = {j: name(h_id_mor[a], h_id_mor[c], d.h_id_sq[j]) for j, (a, c) in d.vmor.items()}
    v_id_sq = {x: name(x, x, d.v_id_sq[proj[x]]) for x in hmor}
    ext = DoubleCategory(d.objects, hmor, dict(d.vmor), squares, hcomp_mor, dict(d.vcomp_mor),
                         hcomp_sq, vcomp_sq, h_id_mor, dict(d.v_id_mor), h_id_sq, v_id_sq)
    projection = DoubleFunctor(ext, d, {a: a for a in d.objects}, proj, {j: j for j in d.vmor}, base_of)
    return ext, Holonomy(ext, inc), projection


# vertical factorization


def factor_square_vertically(fold: Folding | ConnectionPair, alpha: str, split: tuple[str, str],
                             mode: str = "left") -> tuple[str, str]:
    """Split α along a factorization of its left (or right) edge into α1 stacked over α2."""
    cp = fold if isinstance(fold, ConnectionPair) else connection_from_folding(fold)
    d = cp.base
    if alpha not in d.squares:
        raise SplitMismatch(f"unknown square {alpha!r}")
    b = d.squares[alpha]
    j1, j2 = split
    edge = b.left if mode == "left" else b.right if mode == "right" else None
    if edge is None:
        raise SplitMismatch(f"unknown mode {mode!r}")
    if d.vcomp_mor.get((j1, j2)) != edge:
        raise SplitMismatch(f"{j1};{j2} does not compose to the {mode} edge {edge}", (alpha,))
    G, Gp = cp.gamma, cp.gamma_prime
    if mode == "left":
        a1 = d.hc(d.vc(d.h_id_sq[j1], Gp[j2]), alpha)
        a2 = d.hc(G[j2], d.v_id_sq[b.bottom])
    else:
        a1 = d.hc(d.v_id_sq[b.top], Gp[j1])
        a2 = d.hc(alpha, d.vc(G[j1], d.h_id_sq[j2]))
    return a1, a2


# catalog helpers


def quintet_folding(c: TwoCategory, d: DoubleCategory, bar: dict[str, str], prefix: str = "q") -> Folding:
    """The folding of a quintet-like double category: a square goes to its own 2-cell.

    Every square built by `dblcat.quintet_like` with 2-cell ``c`` is folded to
    the square with identity sides carrying ``c``, whose id is ``c`` itself.
    """
    idx = c.two_cell_index()
    v_ids = set(d.v_id_mor.values())
    lam = {}
    for s, b in d.squares.items():
        if b.left in v_ids and b.right in v_ids:
            lam[s] = s
            continue
        cands = idx.get((c.comp1[(bar[b.right], b.top)], c.comp1[(b.bottom, bar[b.left])]), ())
        hits = [x for x in cands if s == f"{prefix}({b.top},{b.left},{b.right},{b.bottom},{x})"]
        if len(hits) != 1:
            raise InvalidInput(f"square {s} is not a quintet-like square", (s,))
        lam[s] = hits[0]
    return Folding(Holonomy(d, dict(bar)), lam)


def commutative_folding(d: DoubleCategory) -> Folding:
    """The folding of a commutative-squares double category with identity holonomy."""
    h = identity_holonomy(d)
    lam = {}
    for s, b in d.squares.items():
        fb = _folded_boundary(d, h.bar, b)
        (lam[s],) = d.by_boundary[(fb.top, fb.left, fb.right, fb.bottom)]
    return Folding(h, lam)


def enumerate_holonomies(d: DoubleCategory) -> list[Holonomy]:
    between = defaultdict(list)
    for f, st in d.hmor.items():
        between[st].append(f)
    keys = sorted(d.vmor)
    out = []
    for combo in product(*(between[d.vmor[j]] for j in keys)):
        h = Holonomy(d, dict(zip(keys, combo)))
        if validate_fold("holonomy", h, limit=1).ok:
            out.append(h)
    return out


def enumerate_foldings(h: Holonomy, budget: int = 100_000) -> list[Folding]:
    """Every folding with holonomy h, by trying all per-boundary bijections."""
    d, bar = h.base, h.bar
    idx = d.by_boundary
    classes = []
    for f, j, k, g in d.boundaries():
        src = sorted(idx.get((f, j, k, g), ()))
        fb = _folded_boundary(d, bar, Boundary(f, g, j, k))
        tgt = sorted(idx.get((fb.top, fb.left, fb.right, fb.bottom), ()))
        if len(src) != len(tgt):
            return []
        if src:
            classes.append((src, list(permutations(tgt))))
    total = 1
    for _, perms in classes:
        total *= len(perms)
    if total > budget:
        raise InvalidInput(f"{total} candidate folding tables exceed the budget {budget}")
    out = []
    for choice in product(*(perms for _, perms in classes)):
        lam = {}
        for (src, _), img in zip(classes, choice):
            lam.update(zip(src, img))
        f = Folding(h, lam)
        if validate_fold("folding", f, limit=1).ok:
            out.append(f)
    return out
