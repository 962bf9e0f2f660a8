import math

import pytest

from symprice import families
from symprice.digraph import are_isomorphic, canonical_form
from symprice.errors import DomainError
from symprice.families import BagSpec, bag, canonical_bag
from symprice.invariants import transmission


def test_cycle_path_complete_instar():
    assert list(families.cycle(3).arrows()) == [(0, 1), (1, 2), (2, 0)]
    assert families.path(4).arrow_count() == 3
    assert families.complete(3).arrow_count() == 6
    g = families.in_star(5)
    assert g.arrow_count() == 4
    assert all(v == 0 for _, v in g.arrows())


def test_backward_tournament_shape():
    g = families.backward_tournament(5)
    assert families.is_tournament(g)
    assert g.is_strongly_connected()
    # distance 1->n along the path only
    from symprice.distances import all_pairs_distances

    assert all_pairs_distances(g)[0, 4] == 4


def test_backward_tournament_3_is_cycle():
    assert are_isomorphic(families.backward_tournament(3), families.cycle(3))


def test_b_family_contains_base_and_dedupes():
    fam = families.b_family(4)
    base = canonical_form(families.backward_tournament(4))
    assert base in {canonical_form(g) for g in fam}
    assert len({canonical_form(g) for g in fam}) == len(fam)


def test_l_set_includes_original():
    g = families.in_star(4)
    ls = families.l_set(g, 1)
    forms = {canonical_form(h) for h in ls}
    assert canonical_form(g) in forms
    assert len(forms) == len(ls)
    # k=0 is just the graph itself
    assert len(families.l_set(g, 0)) == 1


def test_bag_spec_validation():
    t = families.backward_tournament(3)
    with pytest.raises(ValueError):
        BagSpec(n=8, k=2, tournament=t, dup_arrow=(0, 1))
    with pytest.raises(ValueError):
        BagSpec(n=8, k=3, tournament=families.cycle(3).add_arrow(0, 2),
                dup_arrow=(0, 1))
    with pytest.raises(ValueError):
        BagSpec(n=8, k=3, tournament=t, dup_arrow=(1, 0))


def test_bag_structure():
    spec = BagSpec(n=7, k=4, tournament=families.backward_tournament(4),
                   dup_arrow=(3, 0))
    g = bag(spec)
    assert g.n == 7
    assert g.is_strongly_connected()
    assert spec.path_len == 4
    # duplicated arrow still present, path 3 -> 4 -> 5 -> 6 -> 0 added
    assert g.has_arrow(3, 0) and g.has_arrow(3, 4) and g.has_arrow(6, 0)


def test_canonical_bag_transmission_matches_closed_form():
    from symprice import formulas

    for n, k in ((8, 4), (9, 4), (12, 5)):
        g = canonical_bag(n, k)
        assert transmission(g) == formulas.sigma_hnk(n, k)
        assert transmission(g.symmetric_closure()) == formulas.sigma_hnk_sym(n, k)


def test_r_value_linear_form():
    # r(n) ~ 0.4142 n + 0.2218
    assert math.isclose(families.r_value(20), 0.41421356 * 20 + 0.22182541,
                        abs_tol=1e-6)


def test_k_star_basic():
    r = families.k_star(11)
    assert r.candidates == (4, 5)
    assert r.k_star == 4
    assert r.pos_at_candidates[4] > r.pos_at_candidates[5]
    with pytest.raises(DomainError):
        families.k_star(10)


def test_build_family_specs():
    assert families.build_family("cycle:5") == families.cycle(5)
    assert families.build_family("bag:8:4") == canonical_bag(8, 4)
    for bad in ("wat:3", "cycle:x", "bag:8", "cycle"):
        with pytest.raises(ValueError):
            families.build_family(bad)
