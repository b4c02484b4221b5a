import random

import pytest
from hypothesis import given, settings, strategies as st

from foldbox.catalog import bg, two_groups
from foldbox.dblcat import (
    BoundaryMismatch,
    DoubleCategory,
    adjunctions,
    commutative_squares,
    generate,
    grid_compose,
    h_embed,
    horizontal_two_category,
    quintets,
    v_embed,
    validate_double,
    vertical_two_category,
)
from foldbox.fincat import locally_discrete, symmetric_group
from foldbox.iso import IsoWitness, iso_search
from foldbox.mutate import mutate
from foldbox.report import InvalidInput

import oracles


@pytest.mark.parametrize("name,expected", [("C2", 8), ("C3", 27), ("S3", 216)])
def test_commutative_square_counts(name, expected):
    g = bg(name)
    d = commutative_squares(g.as_category())
    assert len(d.squares) == expected
    assert oracles.commutative_square_count(g.comp, list(g.morphisms)) == expected
    assert validate_double("double_category", d).ok


def test_commutative_squares_are_unique_per_boundary():
    d = commutative_squares(bg("S3").as_category())
    assert all(len(v) == 1 for v in d.by_boundary.values())


@pytest.mark.parametrize("key", ["c2_in_c4", "c3_c2_inversion", "c3_normal_s3"])
def test_quintets_of_two_groups(key):
    c = two_groups()[key].cat
    q = quintets(c)
    # choose f, j, k freely, then any 2-cell out of k∘f fixes g: |G|³·|H|
    n_g = len(c.one_cells)
    assert len(q.squares) == n_g ** 3 * (len(c.two_cells) // n_g)
    if len(q.squares) <= 216:
        assert validate_double("double_category", q).ok
        assert oracles.double_ok(q)
    assert horizontal_two_category(q) == c


def test_quintet_square_counts_frozen():
    # derived by brute-force enumeration of (f, j, k, g, cell) tuples
    assert len(quintets(two_groups()["c2_in_c4"].cat).squares) == 128
    assert len(quintets(two_groups()["c3_c2_inversion"].cat).squares) == 24


def test_embeddings():
    c = two_groups()["c2_in_c4"].cat
    h, v = h_embed(c), v_embed(c)
    assert set(h.vmor) == {"1v(*)"} and set(v.hmor) == {"1h(*)"}
    assert len(h.squares) == len(v.squares) == len(c.two_cells)
    assert validate_double("double_category", h).ok and validate_double("double_category", v).ok
    assert horizontal_two_category(h) == c
    assert isinstance(iso_search(vertical_two_category(v), c), IsoWitness)


def test_adjunctions_of_a_locally_discrete_groupoid():
    c = locally_discrete(bg("S3").as_category())
    a = adjunctions(c)
    # in a groupoid every morphism has exactly one adjoint, its inverse
    assert len(a.vmor) == 6
    assert validate_double("double_category", a).ok


def test_generate_dispatch():
    assert len(generate("commutative_squares", bg("C3").as_category()).squares) == 27
    with pytest.raises(InvalidInput):
        generate("quintets", bg("C3").as_category())
    with pytest.raises(InvalidInput):
        generate("nonsense", locally_discrete(bg("C2").as_category()))


def test_grid_compose_agrees_both_ways():
    d = commutative_squares(bg("C3").as_category())
    rng = random.Random(3)
    names = sorted(d.squares)
    for _ in range(30):
        a = rng.choice(names)
        b = next(s for s in names if d.squares[s].left == d.squares[a].right)
        cands = [(c, e) for c in names for e in names
                 if d.squares[c].top == d.squares[a].bottom and d.squares[e].top == d.squares[b].bottom
                 and d.squares[c].right == d.squares[e].left]
        c, e = rng.choice(cands)
        assert grid_compose(d, [[a, b], [c, e]], debug=True) == d.vc(d.hc(a, b), d.hc(c, e))


def test_grid_compose_rejects_bad_grids():
    d = commutative_squares(bg("C2").as_category())
    with pytest.raises(BoundaryMismatch):
        grid_compose(d, [])
    bad = [s for s in d.squares if d.squares[s].right == "1"][0]
    other = [s for s in d.squares if d.squares[s].left == "0"][0]
    with pytest.raises(BoundaryMismatch):
        grid_compose(d, [[bad, other]])


def eckmann_hilton_failure() -> DoubleCategory:
    """One object, squares the elements of S3, horizontal composite taken in the opposite group."""
    s = symmetric_group(3)
    els = s.elements
    return DoubleCategory(
        ("*",), {"1": ("*", "*")}, {"v": ("*", "*")}, {x: ("1", "1", "v", "v") for x in els},
        {("1", "1"): "1"}, {("v", "v"): "v"},
        {(a, b): s.mul[(b, a)] for a in els for b in els}, {(a, b): s.mul[(a, b)] for a in els for b in els},
        {"*": "1"}, {"*": "v"}, {"v": s.unit}, {"1": s.unit})


def test_interchange_failure_names_the_block():
    d = eckmann_hilton_failure()
    r = validate_double("double_category", d)
    assert r.tags() == {"INTERCHANGE"}
    assert all(len(v.where) == 4 for v in r.violations)
    assert not oracles.double_ok(d)
    one = validate_double("double_category", d, limit=1)
    assert len(one.violations) == 1 and one.truncated


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=100_000), st.sampled_from(["square", "quintet"]))
def test_validator_agrees_with_oracle_on_mutants(seed, which):
    if which == "square":
        d = commutative_squares(bg("C2").as_category())
    else:
        d = quintets(two_groups()["c3_c2_inversion"].cat)
    _, m = mutate(d, random.Random(seed))
    try:
        expect = oracles.double_ok(m)
    except (KeyError, TypeError):
        expect = False
    assert validate_double("double_category", m).ok == expect
