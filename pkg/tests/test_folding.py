import pytest

from foldbox.catalog import bg, crossed_modules, two_groups, y_catalog
from foldbox.dblcat import commutative_squares, h_embed, quintets, validate_double
from foldbox.folding import (
    ConnectionPair,
    Folding,
    FoldingMorphism,
    Holonomy,
    MissingPreimage,
    NontrivialHolonomy,
    NotEdgeSymmetric,
    ShapeMismatch,
    SplitMismatch,
    commutative_folding,
    connection_from_folding,
    connection_to_thin,
    enumerate_foldings,
    enumerate_holonomies,
    extend_with_holonomy,
    factor_square_vertically,
    folding_from_connection,
    folding_iso,
    gauge_folding,
    gauge_twins,
    identity_holonomy,
    mixed_compose,
    thin_convert,
    thin_to_connection,
    validate_fold,
)
from foldbox.fincat import group_homs, named_group
from foldbox.report import InvalidInput
from foldbox.xmod import XModUnderGroup, double_group_convert

FOLDED = sorted(y_catalog())


@pytest.mark.parametrize("name", FOLDED)
def test_catalog_foldings_validate(name):
    f = y_catalog()[name]
    assert validate_fold("folding", f).ok
    assert validate_fold("holonomy", f.holonomy).ok


@pytest.mark.parametrize("name", FOLDED)
def test_connection_round_trips_are_exact(name):
    f = y_catalog()[name]
    cp = connection_from_folding(f)
    assert validate_fold("connection_pair", cp).ok
    assert folding_from_connection(cp) == f
    assert connection_from_folding(folding_from_connection(cp)) == cp


@pytest.mark.parametrize("name", ["square_C2", "square_C3", "square_S3"])
def test_thin_structure_round_trips(name):
    cp = connection_from_folding(y_catalog()[name])
    t = connection_to_thin(cp)
    assert validate_fold("thin_structure", t).ok
    assert thin_to_connection(t) == cp
    assert thin_convert("connection_to_thin", cp) == t


def test_thin_needs_identity_holonomy():
    u = XModUnderGroup(named_group("C4"), crossed_modules()["c2_in_c4"], {"0": "0", "1": "3", "2": "2", "3": "1"})
    f = double_group_convert("from_xmod_under_group", u)[1]
    with pytest.raises(NontrivialHolonomy):
        connection_to_thin(connection_from_folding(f))


def test_thin_structure_on_a_double_group():
    cp = connection_from_folding(y_catalog()["dg_c3_c2_inversion"])
    t = connection_to_thin(cp)
    assert validate_fold("thin_structure", t).ok
    assert thin_to_connection(t) == cp


@pytest.mark.parametrize("group", ["C2", "C3", "S3"])
def test_holonomies_on_commutative_squares_are_endomorphisms(group):
    d = commutative_squares(bg(group).as_category())
    hs = enumerate_holonomies(d)
    g = named_group(group)
    assert len(hs) == len(group_homs(g, g))


@pytest.mark.parametrize("group,count", [("C2", 2), ("C3", 3), ("S3", 10)])
def test_only_the_identity_holonomy_carries_a_folding(group, count):
    d = commutative_squares(bg(group).as_category())
    hs = enumerate_holonomies(d)
    assert len(hs) == count
    carried = [h for h in hs if enumerate_foldings(h)]
    assert len(carried) == 1
    assert carried[0] == identity_holonomy(d)
    assert enumerate_foldings(carried[0]) == [commutative_folding(d)]


def test_folding_budget():
    c = two_groups()["c3_c2_inversion"].cat
    q = quintets(c)
    with pytest.raises(InvalidInput):
        enumerate_foldings(identity_holonomy(q), budget=10)


def test_gauge_twin_differs_and_is_isomorphic():
    f = y_catalog()["quintets_c3_c2_inversion"]
    twins = gauge_twins(f)
    assert len(twins) == 2
    for g in twins:
        assert g.lam != f.lam and g.holonomy == f.holonomy
        fwd, back = folding_iso(f, g)
        d = f.base
        for j in d.vmor:
            assert d.vc(fwd.theta[j], back.theta[j]) == d.v_id_sq[f.holonomy.bar[j]]


def test_explicit_gauge():
    f = y_catalog()["quintets_c3_c2_inversion"]
    g = gauge_folding(f, {"0": "(0,0)", "1": "(1,1)"}, {"0": "(0,0)", "1": "(2,1)"})
    assert validate_fold("folding", g).ok
    assert g.lam != f.lam


def test_folding_iso_self_pair_is_identity():
    f = y_catalog()["square_S3"]
    fwd, back = folding_iso(f, f)
    d = f.base
    assert all(fwd.theta[j] == d.v_id_sq[j] for j in d.vmor)
    assert fwd.theta == back.theta


def test_corrupt_folding_is_caught():
    f = y_catalog()["square_C3"]
    lam = dict(f.lam)
    a, b = sorted(lam)[:2]
    lam[a], lam[b] = lam[b], lam[a]
    r = validate_fold("folding", Folding(f.holonomy, lam))
    assert not r.ok


def test_missing_preimage():
    f = y_catalog()["square_C2"]
    d = f.base
    # collapse Λ onto one square so the one-sided preimages vanish
    lam = {s: d.v_id_sq["0"] for s in d.squares}
    with pytest.raises(MissingPreimage):
        connection_from_folding(Folding(f.holonomy, lam))


def test_identity_holonomy_needs_shared_edges():
    d = h_embed(two_groups()["c2_in_c4"].cat)
    with pytest.raises(NotEdgeSymmetric):
        identity_holonomy(d)


@pytest.mark.parametrize("name", ["square_C3", "dg_c3_c2_inversion", "quintets_c3_c2_inversion"])
def test_extension_with_holonomy(name):
    h = y_catalog()[name].holonomy
    ext, h2, proj = extend_with_holonomy(h)
    assert validate_double("double_category", ext).ok
    assert validate_fold("holonomy", h2).ok
    assert validate_double("double_functor", proj).ok
    assert len(ext.hmor) == len(h.base.hmor) + len(h.base.vmor)


@pytest.mark.parametrize("name", ["square_S3", "dg_c3_c2_inversion"])
def test_vertical_factorisation_recomposes(name):
    f = y_catalog()[name]
    d = f.base
    n = 0
    for alpha, b in sorted(d.squares.items())[:40]:
        for (j1, j2), j in d.vcomp_mor.items():
            for mode, edge in (("left", b.left), ("right", b.right)):
                if j != edge:
                    continue
                a1, a2 = factor_square_vertically(f, alpha, (j1, j2), mode)
                assert d.vc(a1, a2) == alpha
                n += 1
    assert n > 0


def test_factorisation_rejects_wrong_split():
    f = y_catalog()["square_C2"]
    alpha = next(s for s, b in f.base.squares.items() if b.left == "1")
    with pytest.raises(SplitMismatch):
        factor_square_vertically(f, alpha, ("0", "0"))
    with pytest.raises(SplitMismatch):
        factor_square_vertically(f, alpha, ("1", "0"), mode="diagonal")


def test_mixed_composition():
    h = y_catalog()["square_C3"].holonomy
    assert mixed_compose(h, ("h", "1"), ("v", "2")) == ("h", "0")
    assert mixed_compose(h, ("v", "1"), ("v", "1")) == ("v", "2")
    with pytest.raises(ShapeMismatch):
        mixed_compose(h, ("x", "1"), ("v", "1"))


def test_folding_morphism_validation():
    f = y_catalog()["square_C2"]
    d = f.base
    good = FoldingMorphism(f, f, {j: d.v_id_sq[j] for j in d.vmor})
    assert validate_fold("folding_morphism", good).ok
    bad = FoldingMorphism(f, f, {j: d.v_id_sq["0"] for j in d.vmor})
    assert not validate_fold("folding_morphism", bad).ok


def test_connection_pair_identity_axiom():
    cp = connection_from_folding(y_catalog()["square_C2"])
    g = dict(cp.gamma)
    g["0"] = cp.gamma["1"]
    assert not validate_fold("connection_pair", ConnectionPair(cp.holonomy, g, cp.gamma_prime)).ok


def test_holonomy_violations():
    d = commutative_squares(bg("C3").as_category())
    assert "HOLONOMY_UNIT" in validate_fold("holonomy", Holonomy(d, {"0": "1", "1": "1", "2": "2"})).tags()
