import random

import pytest

from foldbox.algebra import (
    AlgebraMorphism,
    AlgebraTwoCell,
    PreconditionViolated,
    TwoFunctorUnderI,
    algebra_witness,
    associated_P,
    check_modification_equiv,
    check_yz,
    functor_J,
    functor_K,
    functor_L,
    functor_M,
    reconstruct_X,
    validate_algebra,
)
from foldbox.catalog import bg, modification_candidates, two_groups, y_catalog, z_catalog
from foldbox.fincat import locally_discrete
from foldbox.iso import check_witness
from foldbox.mutate import mutate

Z = sorted(z_catalog())


@pytest.mark.parametrize("name", Z)
def test_z_objects_validate(name):
    assert validate_algebra("two_functor_under_i", z_catalog()[name]).ok


@pytest.mark.parametrize("name", Z)
def test_reconstructed_algebra_is_valid_and_k_inverts_it(name):
    z = z_catalog()[name]
    x = reconstruct_X(z)
    assert validate_algebra("icat_algebra", x).ok
    assert functor_K(x) == z
    back = reconstruct_X(functor_K(x))
    assert check_witness(x, back, algebra_witness(x))


@pytest.mark.parametrize("name", Z)
def test_l_after_m_is_the_identity(name):
    z = z_catalog()[name]
    d, fold = functor_M(z)
    assert functor_L(d, fold) == z


@pytest.mark.parametrize("name", [n for n in Z if "s3_into" not in n])
def test_m_gives_a_valid_double_category_with_folding(name):
    from foldbox.catalog import validate
    d, fold = functor_M(z_catalog()[name])
    assert validate("folded_double", fold).ok


@pytest.mark.parametrize("name", Z)
def test_j_equals_m_after_k(name):
    x = reconstruct_X(z_catalog()[name])
    assert functor_J(x) == functor_M(functor_K(x))


@pytest.mark.parametrize("name", sorted(y_catalog()))
def test_m_after_l_is_isomorphic(name):
    f = y_catalog()[name]
    assert check_yz(f.base, f)


def test_p_for_locally_discrete_base_is_the_identity():
    bs3 = bg("S3").as_category()
    z = TwoFunctorUnderI(bs3, locally_discrete(bs3), {m: m for m in bs3.morphisms})
    assert associated_P(reconstruct_X(z)).P == z.P


def test_p_violations():
    bc2 = bg("C2").as_category()
    tg = two_groups()["c2_in_c4"].cat
    r = validate_algebra("two_functor_under_i", TwoFunctorUnderI(bc2, tg, {"0": "0", "1": "1"}))
    assert "P_COMP" in r.tags()
    r = validate_algebra("two_functor_under_i", TwoFunctorUnderI(bc2, tg, {"0": "2", "1": "2"}))
    assert "P_UNIT" in r.tags()


def test_modification_candidates_agree():
    cands = modification_candidates()
    assert len(cands) >= 100
    verdicts = [check_modification_equiv(s) for s in cands]
    assert all(v["cond_i"] == v["cond_ii"] for v in verdicts)
    assert any(v["cond_i"] for v in verdicts) and any(not v["cond_i"] for v in verdicts)


def test_failing_candidate_carries_witnesses():
    bad = next(s for s in modification_candidates() if not check_modification_equiv(s)["cond_i"])
    v = check_modification_equiv(bad)
    assert v["cond_i_witness"] and v["cond_ii_witness"]


def test_precondition_violation_is_raised():
    s = modification_candidates()[0]
    comp = dict(s.components)
    key = sorted(comp)[0]
    Y = s.src.tgt
    comp[key] = next(m for m in Y.pair_of_mor if m != comp[key])
    with pytest.raises(PreconditionViolated):
        check_modification_equiv(AlgebraTwoCell(s.src, s.tgt, comp))


def test_algebra_morphism_checks():
    s = modification_candidates()[0]
    F = s.src
    assert validate_algebra("algebra_morphism", F).ok
    obj = dict(F.obj_map)
    k = next(f for f in obj if obj[f] != F.tgt.unit["*"])
    obj[k] = F.tgt.unit["*"]
    assert not validate_algebra("algebra_morphism", AlgebraMorphism(F.src, F.tgt, obj, F.mor_map)).ok


@pytest.mark.parametrize("seed", range(25))
def test_mutated_algebra_is_rejected(seed):
    x = reconstruct_X(z_catalog()["bc2_into_c2_in_c4"])
    what, m = mutate(x, random.Random(seed))
    assert not validate_algebra("icat_algebra", m).ok, what
