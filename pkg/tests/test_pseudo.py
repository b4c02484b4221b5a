import dataclasses
import random

import pytest

from foldbox import algebra, pseudo
from foldbox.catalog import catalog, terminal_category, twist_example, two_groups, y_catalog
from foldbox.dblcat import commutative_squares
from foldbox.folding import Holonomy, validate_fold
from foldbox.catalog import bg


def associator_is_trivial(p, key):
    return p.associator[key] == p.v_id_sq[p.hm(*key)]


def trivial_i_example():
    """A 2-functor from the terminal category into the C2 ⊂ C4 2-group, folded into a double category."""
    z = algebra.TwoFunctorUnderI(terminal_category(), two_groups()["c2_in_c4"].cat, {"1": "0"})
    return z, *algebra.functor_M(z)


@pytest.mark.parametrize("name", ["square_C2", "square_S3", "quintets_c2_c2_trivial", "h_embed_c2_in_c4"])
def test_strict_doubles_are_pseudo(name):
    d = next(e.value for e in catalog() if e.name == name)
    p = pseudo.strict_as_pseudo(d)
    assert pseudo.validate_pseudo("pseudo_double", p).ok
    assert p.strict_part() == d


def test_identity_relabel_is_strict():
    q, _, _ = twist_example()
    same = pseudo.transport_twist(q, {f: f for f in q.hmor}, {f: q.v_id_sq[f] for f in q.hmor})
    assert same == pseudo.strict_as_pseudo(q)


def test_twist_has_nontrivial_associator():
    q, relabel, witness = twist_example()
    p = pseudo.transport_twist(q, relabel, witness)
    assert pseudo.validate_pseudo("pseudo_double", p).ok
    assert sum(not associator_is_trivial(p, k) for k in p.associator) == 12
    # the twisted composite is not the strict one
    assert p.hcomp_mor[("1", "2")] != q.hcomp_mor[("1", "2")]


def test_corrupted_associator_is_caught():
    # trivial boundary, so several squares share each associator boundary
    p = pseudo.strict_as_pseudo(y_catalog()["quintets_c3_c2_inversion"].base)
    rng = random.Random(7)
    caught = 0
    for _ in range(20):
        key = rng.choice(sorted(p.associator))
        b = p.squares[p.associator[key]]
        others = [s for s, c in p.squares.items() if c == b and s != p.associator[key]]
        if not others:
            continue
        bad = dict(p.associator)
        bad[key] = rng.choice(others)
        tags = pseudo.validate_pseudo("pseudo_double", dataclasses.replace(p, associator=bad)).tags()
        assert tags & {"PENTAGON", "ALPHA_NATURALITY"}
        caught += 1
    assert caught > 0


def test_associator_with_wrong_boundary():
    q, relabel, witness = twist_example()
    p = pseudo.transport_twist(q, relabel, witness)
    key = next(k for k in p.associator if not associator_is_trivial(p, k))
    bad = dict(p.associator)
    bad[key] = p.v_id_sq[p.hm(*key)]
    r = pseudo.validate_pseudo("pseudo_double", dataclasses.replace(p, associator=bad))
    assert "ASSOCIATOR_BOUNDARY" in r.tags()


def test_relabel_must_fix_units():
    q, relabel, witness = twist_example()
    bad = dict(relabel)
    bad["0"], bad["2"] = "2", "0"
    with pytest.raises(pseudo.UnitNotFixed):
        pseudo.transport_twist(q, bad, {**witness, "0": "(1,2)", "2": "(1,0)"})


def test_witness_must_exist():
    q, relabel, witness = twist_example()
    bad = dict(witness)
    bad["1"] = q.v_id_sq["1"]
    with pytest.raises(pseudo.NotInvertibleWitness):
        pseudo.transport_twist(q, relabel, bad)


def test_admissible_relabelings_explain_themselves():
    found, why = pseudo.admissible_relabelings(commutative_squares(bg("C2").as_category()))
    assert found == [] and why == "no two non-identity horizontal morphisms share endpoints"
    found, why = pseudo.admissible_relabelings(twist_example()[0])
    assert found and why.endswith("admissible relabelings")
    for relabel, witness in found:
        assert pseudo.validate_pseudo("pseudo_double", pseudo.transport_twist(twist_example()[0], relabel, witness)).ok


def test_pseudo_folding_agrees_with_strict_folding():
    rng = random.Random(3)
    for name in ("square_C3", "quintets_c3_c2_inversion", "dg_c2_in_c4"):
        f = y_catalog()[name]
        p = pseudo.strict_as_pseudo(f.base)
        for trial in range(30):
            lam = dict(f.lam)
            if trial:
                s = rng.choice(sorted(lam))
                lam[s] = rng.choice(sorted(f.base.squares))
            strict = validate_fold("folding", type(f)(f.holonomy, lam)).ok
            weak = pseudo.validate_pseudo("pseudo_folding", pseudo.PseudoFolding(Holonomy(p, f.holonomy.bar), lam)).ok
            assert strict == weak


def test_twisted_folding_on_trivial_base():
    _, d, fold = trivial_i_example()
    [(relabel, witness)] = pseudo.admissible_relabelings(d)[0]
    t = pseudo.transport_twist(d, relabel, witness)
    assert pseudo.validate_pseudo("pseudo_double", t).ok
    pf = pseudo.twist_folding(fold, t, relabel, witness)
    assert pseudo.validate_pseudo("pseudo_folding", pf).ok


def test_twisted_quintets_break_holonomy():
    # the holonomy of the quintet folding is the identity, which no longer composes after twisting
    q, relabel, witness = twist_example()
    from foldbox.folding import quintet_folding
    c = two_groups()["c2_in_c4"].cat
    fold = quintet_folding(c, q, {j: j for j in q.vmor})
    t = pseudo.transport_twist(q, relabel, witness)
    r = pseudo.validate_pseudo("pseudo_folding", pseudo.twist_folding(fold, t, relabel, witness))
    assert "HOLONOMY_COMP" in r.tags()


def test_pseudo_icat():
    z, _, _ = trivial_i_example()
    x = algebra.reconstruct_X(z)
    assert pseudo.validate_pseudo("pseudo_icat", pseudo.strict_icat_as_pseudo(x)).ok
    _, relabel, witness = twist_example()
    tw = pseudo.twist_icat(x, relabel, witness)
    assert pseudo.validate_pseudo("pseudo_icat", tw).ok
    assert any(v != x.ident(x.comp_obj[(x.comp_obj[(h, g)], f)]) for (h, g, f), v in tw.associator.items())


def test_pseudo_icat_rejects_moved_unit():
    z, _, _ = trivial_i_example()
    x = algebra.reconstruct_X(z)
    _, relabel, witness = twist_example()
    with pytest.raises(pseudo.UnitNotFixed):
        pseudo.twist_icat(x, {**relabel, "0": "2", "2": "0"}, witness)


def test_unknown_pseudo_kind():
    with pytest.raises(pseudo.InvalidInput):
        pseudo.validate_pseudo("pseudo_triple", None)
