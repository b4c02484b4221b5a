from itertools import product

import pytest

from foldbox.catalog import crossed_modules, homotopy_examples, inversion_xmod, y_catalog
from foldbox.dblcat import validate_double
from foldbox.fincat import cyclic_group, group_homs, named_group, symmetric_group, trivial_group, validate_structure
from foldbox.iso import IsoWitness, check_witness, iso_search
from foldbox.xmod import (
    CrossedModule,
    Homotopy,
    NotADoubleGroup,
    XModUnderGroup,
    check_under_I,
    compose_homotopies_horizontal,
    compose_homotopies_vertical,
    conjugation_xmod,
    double_group_convert,
    homotopies_between,
    homotopy_transform,
    identity_morphism,
    nu_to_sigma,
    sigma_to_nu,
    two_functor_from_morphism,
    two_group_from_xmod,
    two_group_roundtrip_witness,
    validate_sigma,
    validate_xmod,
    xmod_from_two_group,
    xmod_morphisms,
    xmod_roundtrip_witness,
)

import oracles

XM = sorted(crossed_modules())


@pytest.mark.parametrize("name", XM)
def test_catalog_crossed_modules(name):
    m = crossed_modules()[name]
    assert validate_xmod("crossed_module", m).ok
    assert oracles.crossed_module_ok(m)


@pytest.mark.parametrize("name,cells", [("c2_in_c4", 8), ("c3_normal_s3", 18), ("c3_c2_inversion", 6)])
def test_two_cell_counts(name, cells):
    m = crossed_modules()[name]
    t = two_group_from_xmod(m)
    assert len(t.cat.two_cells) == cells == len(list(product(m.H.elements, m.G.elements)))
    assert validate_xmod("two_group", t).ok


@pytest.mark.parametrize("name", XM)
def test_xmod_two_group_round_trips(name):
    m = crossed_modules()[name]
    t = two_group_from_xmod(m)
    m2 = xmod_from_two_group(t)
    assert check_witness(m, m2, xmod_roundtrip_witness(m))
    t2 = two_group_from_xmod(m2)
    assert check_witness(t, t2, two_group_roundtrip_witness(t))
    assert isinstance(iso_search(m, m2), IsoWitness)


def test_broken_peiffer_identity():
    # S3 over the trivial group: equivariance holds, but S3 is not abelian
    s3, one = symmetric_group(3), trivial_group()
    m = CrossedModule(s3, one, {a: one.unit for a in s3.elements}, {(one.unit, a): a for a in s3.elements})
    r = validate_xmod("crossed_module", m)
    assert r.tags() == {"CM2"}
    assert not oracles.crossed_module_ok(m)


def test_nonequivariant_boundary():
    good = conjugation_xmod(symmetric_group(3), ["012", "120", "201"])
    m = CrossedModule(good.H, good.G, good.boundary, {k: k[1] for k in good.action})
    assert "CM1" in validate_xmod("crossed_module", m).tags()
    assert not oracles.crossed_module_ok(m)


def brute_morphisms(a, b):
    n = 0
    for pv in product(b.H.elements, repeat=len(a.H.elements)):
        p = dict(zip(a.H.elements, pv))
        for qv in product(b.G.elements, repeat=len(a.G.elements)):
            q = dict(zip(a.G.elements, qv))
            n += (all(p[a.H.mul[(x, y)]] == b.H.mul[(p[x], p[y])] for x, y in product(a.H.elements, repeat=2))
                  and all(q[a.G.mul[(x, y)]] == b.G.mul[(q[x], q[y])] for x, y in product(a.G.elements, repeat=2))
                  and all(q[a.boundary[x]] == b.boundary[p[x]] for x in a.H.elements)
                  and all(p[a.action[(g, x)]] == b.action[(q[g], p[x])]
                          for g, x in product(a.G.elements, a.H.elements)))
    return n


@pytest.mark.parametrize("src,tgt", [("c2_in_c4", "c2_in_c4"), ("c3_c2_inversion", "c3_c2_inversion"),
                                     ("c3_c2_inversion", "c2_in_c4"), ("c3_normal_s3", "c3_normal_s3")])
def test_morphism_counts_match_brute_force(src, tgt):
    a, b = crossed_modules()[src], crossed_modules()[tgt]
    assert len(xmod_morphisms(a, b)) == brute_morphisms(a, b)


def test_morphisms_validate():
    a, b = crossed_modules()["c2_in_c4"], inversion_xmod(3)
    # id, inversion on C4, doubling, and the zero map
    assert len(xmod_morphisms(a, a)) == 4
    assert identity_morphism(a) in xmod_morphisms(a, a)
    assert all(validate_xmod("xmod_morphism", f).ok for f in xmod_morphisms(b, b))


def test_homotopy_examples():
    hs = homotopy_examples()
    assert len(hs) >= 20
    assert all(validate_xmod("homotopy", h).ok for h in hs)


def test_nu_sigma_inverse():
    for h in homotopy_examples():
        sigma = nu_to_sigma(h)
        assert validate_sigma(sigma, h.src, h.tgt).ok
        assert sigma_to_nu(sigma, h.src, h.tgt) == h
        assert homotopy_transform("sigma_to_nu", homotopy_transform("nu_to_sigma", h), (h.src, h.tgt)) == h


def test_sigma_is_multiplicative():
    for h in homotopy_examples():
        c = two_group_from_xmod(h.src.tgt).cat
        G = h.src.src.G
        sigma = nu_to_sigma(h)
        for g, f in product(G.elements, repeat=2):
            assert c.hcomp[(sigma[g], sigma[f])] == sigma[G.mul[(g, f)]]


def test_homotopy_compositions():
    m = inversion_xmod(3)
    morphs = xmod_morphisms(m, m)
    for m1, m2, m3 in product(morphs, repeat=3):
        for n1 in homotopies_between(m1, m2):
            for n2 in homotopies_between(m2, m3):
                assert validate_xmod("homotopy", compose_homotopies_vertical(n1, n2)).ok
    for n1 in homotopies_between(morphs[0], morphs[-1]):
        for n2 in homotopies_between(morphs[-1], morphs[0]):
            assert validate_xmod("homotopy", compose_homotopies_horizontal(n1, n2)).ok


def test_two_functor_from_morphism():
    for f in xmod_morphisms(inversion_xmod(3), inversion_xmod(6)):
        assert validate_structure("two_functor", two_functor_from_morphism(f)).ok


def test_under_i_verdicts_agree():
    n = 0
    for h in homotopy_examples():
        I_candidates = [named_group("C2"), named_group("C3")]
        for I in I_candidates:
            for P in group_homs(I, h.src.src.G):
                r = check_under_I(h, P)
                assert "UNDER_I_MISMATCH" not in r.tags()
                n += 1
    assert n >= 20


def under_examples():
    xm = crossed_modules()
    return [
        XModUnderGroup(cyclic_group(4), xm["c2_in_c4"], {g: g for g in "0123"}),
        XModUnderGroup(cyclic_group(2), xm["c3_c2_inversion"], {"0": "0", "1": "1"}),
        XModUnderGroup(cyclic_group(2), xm["c2_in_c4"], {"0": "0", "1": "2"}),
    ]


@pytest.mark.parametrize("u", under_examples(), ids=["c4", "c3c2", "c2_into_c4"])
def test_double_group_round_trip(u):
    assert validate_xmod("xmod_under_group", u).ok
    d, fold = double_group_convert("from_xmod_under_group", u)
    assert validate_double("double_category", d).ok
    back = double_group_convert("to_xmod_under_group", (d, fold))
    assert isinstance(iso_search(u, back), IsoWitness)
    d2, _ = double_group_convert("from_xmod_under_group", back)
    assert isinstance(iso_search(d, d2), IsoWitness)


def test_double_group_square_counts():
    # |I|²·|H|·|G| squares: pick j, f and a 2-cell out of P(k)∘f ... with k free
    d, _ = double_group_convert("from_xmod_under_group", under_examples()[0])
    assert len(d.squares) == 128


def test_not_a_double_group():
    f = y_catalog()["square_C3"]
    # commutative squares of C3 form a double group, but a non-groupoid base is rejected
    from foldbox.dblcat import commutative_squares
    from foldbox.fincat import FinCategory
    from foldbox.folding import commutative_folding
    mon = FinCategory(("*",), {"1": ("*", "*"), "x": ("*", "*")}, {"*": "1"},
                      {("1", "1"): "1", ("1", "x"): "x", ("x", "1"): "x", ("x", "x"): "x"})
    d = commutative_squares(mon)
    with pytest.raises(NotADoubleGroup):
        double_group_convert("to_xmod_under_group", (d, commutative_folding(d)))
    assert double_group_convert("to_xmod_under_group", (f.base, f)).I == named_group("C3")


def test_invalid_homotopy_tags():
    h = next(h for h in homotopy_examples() if h.src != h.tgt)
    nu = {g: h.src.tgt.H.unit for g in h.nu}
    r = validate_xmod("homotopy", Homotopy(h.src, h.tgt, nu))
    assert not r.ok
