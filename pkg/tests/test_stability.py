import json
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from stablegroups.catalog import build_group, paper_subset, stable_catalog_specs
from stablegroups.groups import ElementSet, OrderTooLarge, parse_subset, subgroup_as_group, subgroup_generated
from stablegroups.solver import BudgetExceeded, SolveBudget
from stablegroups.stability import (
    InconclusiveError,
    brute_force_indices,
    is_canonical,
    is_stable_group,
    left_subset_indices,
    sfactor_check,
    subset_indices,
    translation_class_representatives,
)

from conftest import SMALL_SPECS


def test_sfactor_examples():
    D4 = build_group("dihedral:4")
    assert sfactor_check(D4, ElementSet.full(8), 1)
    Z9 = build_group("cyclic:9")
    assert sfactor_check(Z9, Z9.subset([0, 1]), Z9.subset([0, 3, 6]))
    assert not sfactor_check(Z9, Z9.subset([0, 1]), Z9.subset([0, 3]))  # not maximal
    Z4 = build_group("cyclic:4")
    assert not sfactor_check(Z4, Z4.subset([0, 1]), Z4.subset([0, 1]))


def test_subset_indices_examples():
    for n in (3, 7, 9, 12, 20):
        G = build_group(f"cyclic:{n}")
        rep = subset_indices(G, G.subset([0, 1]))
        assert (rep.lower, rep.upper) == (-(-n // 3), n // 2)
        assert rep.witness_small.size == rep.lower and rep.witness_large.size == rep.upper
    UT = build_group("ut3_3")
    assert (lambda r: (r.lower, r.upper))(subset_indices(UT, paper_subset("ut3_3", UT))) == (3, 6)
    A4 = build_group("alt4")
    rep = subset_indices(A4, parse_subset(A4, "e,b,t"))
    assert (rep.lower, rep.upper) == (2, 3) and not rep.stable
    for spec in ("quaternion8", "dihedral:5"):
        G = build_group(spec)
        assert (lambda r: (r.lower, r.upper))(subset_indices(G, 1)) == (G.order, G.order)
        assert (lambda r: (r.lower, r.upper))(subset_indices(G, ElementSet.full(G.order))) == (1, 1)


def test_brute_force_indices_examples():
    Z8 = build_group("cyclic:8")
    rep = brute_force_indices(Z8, Z8.subset([0, 1]))
    assert (rep.lower, rep.upper) == (3, 4)
    assert sfactor_check(Z8, Z8.subset([0, 1]), rep.witness_small)
    with pytest.raises(OrderTooLarge):
        brute_force_indices(build_group("cyclic:15"), 3)


def test_left_indices():
    D4 = build_group("dihedral:4")
    A = parse_subset(D4, "e,a,b")
    right, left = subset_indices(D4, A), left_subset_indices(D4, A)
    brute = brute_force_indices(D4, A, side="left")
    assert (left.lower, left.upper) == (brute.lower, brute.upper) == (right.lower, right.upper) == (2, 2)
    A4 = build_group("alt4")
    for bits in (parse_subset(A4, "e,b,t"), parse_subset(A4, "e,a,t^2")):
        left = left_subset_indices(A4, bits)
        brute = brute_force_indices(A4, bits, side="left")
        assert (left.lower, left.upper) == (brute.lower, brute.upper)


def test_translation_classes():
    assert [A.indices() for A in translation_class_representatives(build_group("cyclic:2"))] == [(0,), (0, 1)]
    assert [A.indices() for A in translation_class_representatives(build_group("cyclic:3"))] == [
        (0,), (0, 1), (0, 1, 2)]


@pytest.mark.parametrize("spec", ["cyclic:6", "dihedral:3", "quaternion8", "alt4"])
def test_class_counts_add_up(spec):
    G = build_group(spec)
    total = 0
    for A in translation_class_representatives(G):
        orbit = {G.left_translate(x, A.bits) for x in G.elements()}
        assert min(orbit, key=lambda m: tuple(ElementSet(m, G.order).indices())) == A.bits
        total += len(orbit)
    assert total == 2 ** G.order - 1


def test_stability_verdicts():
    C6 = build_group("cyclic:6")
    rep = is_stable_group(C6)
    assert not rep.stable and rep.witness_subset.indices() == (0, 1) and rep.witness_indices == (2, 3)
    assert is_stable_group(build_group("quaternion8")).stable
    D8 = build_group("dihedral:8")
    rep = is_stable_group(D8)
    assert not rep.stable and rep.witness_indices[0] < rep.witness_indices[1]
    Q = build_group("quaternion8")
    assert json.loads(is_stable_group(Q).to_json(Q)) == {
        "group": "quaternion8", "stable": True, "witness": None, "lower": None, "upper": None, "examined": 36}


def test_c2_to_the_4_is_stable():
    G = build_group("elementary:2:4")
    rep = is_stable_group(G)
    assert rep.stable and rep.subsets_examined == 4335


def test_large_groups_gated():
    UT = build_group("ut3_3")
    with pytest.raises(InconclusiveError):
        is_stable_group(UT)
    rep = is_stable_group(UT, designated=[paper_subset("ut3_3", UT)])
    assert not rep.stable and not rep.exhaustive and rep.witness_indices == (3, 6)
    with pytest.raises(OrderTooLarge):
        is_stable_group(build_group("elementary:2:6"), exhaustive=True)


def test_workers_do_not_change_result():
    G = build_group("dihedral:8")
    assert is_stable_group(G, workers=1) == is_stable_group(G, workers=2)
    S = build_group("elementary:2:4")
    assert is_stable_group(S, workers=1) == is_stable_group(S, workers=2)


def test_budget_exceeded_propagates():
    G = build_group("ut3_3")
    with pytest.raises(BudgetExceeded):
        subset_indices(G, paper_subset("ut3_3", G), SolveBudget(node_limit=1))


@given(st.sampled_from(SMALL_SPECS), st.data())
def test_indices_properties(spec, data):
    G = build_group(spec)
    A = G.subset(data.draw(st.lists(st.integers(0, G.order - 1), min_size=1, max_size=G.order)))
    rep = subset_indices(G, A)
    assert rep.lower <= rep.upper
    assert (rep.lower, rep.upper) == (lambda b: (b.lower, b.upper))(brute_force_indices(G, A))
    x = data.draw(st.integers(0, G.order - 1))
    moved = subset_indices(G, G.left_translate(x, A.bits))
    assert (moved.lower, moved.upper) == (rep.lower, rep.upper)
    y = data.draw(st.integers(0, G.order - 1))
    for w in (rep.witness_small, rep.witness_large):
        assert sfactor_check(G, A, G.right_translate(w.bits, y))
    if G.is_abelian():
        left = left_subset_indices(G, A)
        assert (left.lower, left.upper) == (rep.lower, rep.upper)
    assert is_canonical(G, 1)


@pytest.mark.parametrize("name,spec", [s for s in stable_catalog_specs() if s[0] != "C2xC2xC2xC2"])
def test_subgroups_of_stable_groups_are_stable(name, spec):
    G = build_group(spec)
    seen = set()
    for a, b in combinations(range(G.order), 2):
        H = subgroup_generated(G, 1 << a | 1 << b)
        if H.bits in seen:
            continue
        seen.add(H.bits)
        K, _ = subgroup_as_group(G, H)
        assert is_stable_group(K).stable
