"""End-to-end acceptance checks; each prints a single PASS or FAIL line."""

import random
import time
from itertools import product

import pytest

import oracles
from foldbox import algebra, pseudo, xmod
from foldbox.catalog import (
    bg,
    catalog,
    crossed_modules,
    double_groups,
    homotopy_examples,
    modification_candidates,
    terminal_category,
    twist_example,
    two_groups,
    validate,
    y_catalog,
    z_catalog,
)
from foldbox.dblcat import commutative_squares
from foldbox.fincat import FinGroupoid, group_homs, named_group
from foldbox.folding import connection_from_folding, folding_from_connection, folding_iso, gauge_twins
from foldbox.iso import IsoWitness, check_witness, iso_search
from foldbox.mutate import mutate
from foldbox.report import FoldboxError

CATALOG_SECONDS = 60.0
MUTATION_SECONDS = 120.0
MUTATIONS_PER_STRUCTURE = 50
MIN_CATALOG = 12
MIN_MODIFICATION_CANDIDATES = 100
MIN_HOMOTOPIES = 20
MIN_UNDER_I_CELLS = 20


@pytest.fixture
def verdict(capsys, request):
    def say(ok: bool, detail: str):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} {request.node.name}: {detail}")
        assert ok, detail
    return say


def test_catalog_validates(verdict):
    start = time.perf_counter()
    bad = [e.name for e in catalog() if not validate(e.kind, e.value).ok]
    took = time.perf_counter() - start
    n = len(catalog())
    verdict(n >= MIN_CATALOG and not bad and took < CATALOG_SECONDS,
            f"{n} structures, invalid={bad}, {took:.1f}s (limit {CATALOG_SECONDS:.0f}s)")


def _oracle(kind, v):
    """Independent verdict for a mutant the library accepted; None when no oracle applies."""
    try:
        if kind == "crossed_module":
            return oracles.crossed_module_ok(v)
        if kind == "double_category":
            return oracles.double_ok(v)
        if kind in ("category", "groupoid"):
            ok = oracles.category_ok(v.objects, v.morphisms, v.identity, v.comp)
            if isinstance(v, FinGroupoid):
                ok = ok and all(v.comp.get((v.inv.get(f), f)) == v.identity[v.morphisms[f][0]] for f in v.morphisms)
            return ok
    except (KeyError, TypeError):
        return False
    return None


def test_mutations_are_detected(verdict):
    rng = random.Random(20240601)
    start = time.perf_counter()
    missed, equivalent, per = [], 0, {}
    for e in catalog():
        detected = draws = 0
        while detected < MUTATIONS_PER_STRUCTURE and draws < 10 * MUTATIONS_PER_STRUCTURE:
            draws += 1
            what, m = mutate(e.value, rng)
            try:
                caught = not validate(e.kind, m).ok
            except FoldboxError:
                caught = True
            if caught:
                detected += 1
            elif _oracle(e.kind, m):
                equivalent += 1
            else:
                missed.append(f"{e.name}: {what}")
                detected += 1
        per[e.name] = detected
    took = time.perf_counter() - start
    short = [k for k, n in per.items() if n < MUTATIONS_PER_STRUCTURE]
    verdict(not missed and not short and took < MUTATION_SECONDS,
            f"{sum(per.values())} invalid mutants over {len(per)} structures, missed={missed[:3]}, "
            f"{equivalent} still-valid mutants set aside, {took:.1f}s (limit {MUTATION_SECONDS:.0f}s)")


def test_folding_connection_round_trips(verdict):
    bad = []
    for name, f in y_catalog().items():
        cp = connection_from_folding(f)
        if folding_from_connection(cp) != f or connection_from_folding(folding_from_connection(cp)) != cp:
            bad.append(name)
    verdict(not bad, f"{len(y_catalog())} foldings, inexact={bad}")


def test_folding_iso_all_pairs(verdict):
    groups, pairs, bad = [], 0, []
    for name, f in y_catalog().items():
        members = [(name, f)] + [(f"{name}~{i}", t) for i, t in enumerate(gauge_twins(f))]
        same = next((g for g in groups if g[0][1].base == f.base), None)
        if same is None:
            groups.append(members)
        else:
            same.extend(members)
    for group in groups:
        for (n1, f1), (n2, f2) in product(group, repeat=2):
            pairs += 1
            try:
                fwd, back = folding_iso(f1, f2)
                ok = fwd.src == f1 and fwd.tgt == f2 and back.src == f2
            except FoldboxError:
                ok = False
            if not ok:
                bad.append((n1, n2))
    twins = sum(len(g) for g in groups) - len(y_catalog())
    verdict(not bad and twins > 0, f"{pairs} ordered pairs incl. {twins} twins, failures={bad[:3]}")


def test_yz_round_trips(verdict):
    ys = [n for n, f in y_catalog().items() if not algebra.check_yz(f.base, f)]
    zs = [n for n, z in z_catalog().items() if algebra.functor_L(*algebra.functor_M(z)) != z]
    verdict(not ys and not zs, f"M(L(D)) ≅ D on {len(y_catalog())}, L(M(z)) = z on {len(z_catalog())}; "
                               f"failures={ys + zs}")


def test_xz_round_trips(verdict):
    bases = {n: z for n, z in z_catalog().items() if n.startswith(("bc2", "bs3"))}
    bad = []
    for n, z in bases.items():
        x = algebra.reconstruct_X(z)
        if algebra.functor_K(x) != z or not check_witness(x, algebra.reconstruct_X(algebra.functor_K(x)),
                                                          algebra.algebra_witness(x)):
            bad.append(n)
    over = {len(z.base.morphisms) for z in bases.values()}
    verdict(not bad and over == {2, 6}, f"{len(bases)} objects over BC2 and BS3, failures={bad}")


def test_modification_conditions_agree(verdict):
    cands = modification_candidates()
    rs = [algebra.check_modification_equiv(s) for s in cands]
    disagree = sum(r["cond_i"] != r["cond_ii"] for r in rs)
    holds = sum(r["cond_i"] for r in rs)
    verdict(len(cands) >= MIN_MODIFICATION_CANDIDATES and not disagree,
            f"{len(cands)} candidates, {holds} satisfy both, {disagree} disagreements")


def test_xmod_two_group_equivalence(verdict):
    expect = {"c2_in_c4": 8, "c3_normal_s3": 18, "c3_c2_inversion": 6}
    notes = []
    ok = True
    for name, cells in expect.items():
        m = crossed_modules()[name]
        t = xmod.two_group_from_xmod(m)
        brute = len(list(product(m.H.elements, m.G.elements)))
        m2 = xmod.xmod_from_two_group(t)
        round_trip = (isinstance(iso_search(m, m2), IsoWitness)
                      and isinstance(iso_search(t, xmod.two_group_from_xmod(m2)), IsoWitness))
        ok = ok and round_trip and len(t.cat.two_cells) == brute == cells
        notes.append(f"{name}={len(t.cat.two_cells)}")
    verdict(ok, ", ".join(notes))


def test_nu_sigma(verdict):
    hs = homotopy_examples()
    inverse = all(xmod.sigma_to_nu(xmod.nu_to_sigma(h), h.src, h.tgt) == h for h in hs)
    checked = 0
    mult = True
    for h in hs:
        c, G = xmod.two_group_from_xmod(h.src.tgt).cat, h.src.src.G
        s = xmod.nu_to_sigma(h)
        for g, f in product(G.elements, repeat=2):
            checked += 1
            mult = mult and c.hcomp[(s[g], s[f])] == s[G.mul[(g, f)]]
    verdict(len(hs) >= MIN_HOMOTOPIES and inverse and mult,
            f"{len(hs)} homotopies, inverse={inverse}, multiplicative on {checked} pairs={mult}")


def test_double_groups(verdict):
    trips = 0
    for name, f in double_groups().items():
        u = xmod.double_group_convert("to_xmod_under_group", (f.base, f))
        d2, f2 = xmod.double_group_convert("from_xmod_under_group", u)
        trips += isinstance(iso_search(f.base, d2), IsoWitness) and isinstance(
            iso_search(u, xmod.double_group_convert("to_xmod_under_group", (d2, f2))), IsoWitness)
    cells = mismatched = 0
    for h in homotopy_examples():
        for I in (named_group("C2"), named_group("C3")):
            for P in group_homs(I, h.src.src.G):
                cells += 1
                mismatched += "UNDER_I_MISMATCH" in xmod.check_under_I(h, P).tags()
    verdict(trips == len(double_groups()) >= 2 and cells >= MIN_UNDER_I_CELLS and not mismatched,
            f"{trips} double-group round trips, {cells} under-I cells, {mismatched} mismatches")


def test_commutative_square_counts(verdict):
    got = {}
    for g, n in (("C2", 8), ("C3", 27), ("S3", 216)):
        grp = named_group(g)
        got[g] = (len(commutative_squares(bg(g).as_category()).squares),
                  oracles.commutative_square_count(grp.mul, grp.elements), n)
    verdict(all(a == b == c for a, b, c in got.values()), f"(library, brute force, expected) {got}")


def test_twists_are_coherent(verdict):
    q, relabel, witness = twist_example()
    z = algebra.TwoFunctorUnderI(terminal_category(), two_groups()["c2_in_c4"].cat, {"1": "0"})
    md, _ = algebra.functor_M(z)
    outputs = [pseudo.transport_twist(q, relabel, witness)]
    for d in (q, md):
        outputs += [pseudo.transport_twist(d, r, w) for r, w in pseudo.admissible_relabelings(d)[0]]
    bad, nontrivial = 0, 0
    for p in outputs:
        tags = pseudo.validate_pseudo("pseudo_double", p).tags()
        bad += bool(tags)
        nontrivial += sum(a != p.v_id_sq[p.hm(*k)] for k, a in p.associator.items())
    verdict(not bad and nontrivial >= 1,
            f"{len(outputs)} twists, {bad} failing pentagon or naturality, {nontrivial} non-identity associators")
