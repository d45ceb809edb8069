from collections import Counter

import pytest

from stablegroups.catalog import FAMILY_NAMES, build_group, paper_subset, stable_catalog_specs
from stablegroups.groups import GroupError, ParseError, center, element_order, order_profile, parse_element


def word(G, text):
    return parse_element(G, text)


def profile(spec):
    return sorted(Counter(order_profile(build_group(spec))).items())


def test_quaternion_relations():
    G = build_group("quaternion8")
    assert G.order == 8
    assert word(G, "a^4") == 0 and word(G, "a^2") == word(G, "b^2")
    assert word(G, "b^-1*a*b") == word(G, "a^-1")
    assert profile("quaternion8") == [(1, 1), (2, 1), (4, 6)]


def test_alt4_relations():
    G = build_group("alt4")
    assert G.order == 12
    assert word(G, "t^3") == 0 and word(G, "a*b") == word(G, "b*a")
    assert word(G, "t^-1*a*t") == word(G, "b")
    assert word(G, "t^-1*b*t") == word(G, "a*b")
    assert profile("alt4") == [(1, 1), (2, 3), (3, 8)]


def test_order21_relations():
    G = build_group("c7_rtimes_c3")
    assert word(G, "a^7") == 0 and word(G, "b^3") == 0
    assert word(G, "b*a*b^-1") == word(G, "a^2")
    assert not G.is_abelian()


def test_ut33_relations():
    G = build_group("ut3_3")
    assert G.order == 27 and not G.is_abelian()
    assert all(element_order(G, x) in (1, 3) for x in G.elements())
    c = word(G, "c")
    assert center(G).bits >> c & 1


def test_order18_relations():
    G = build_group("c3c3_rtimes_c2")
    assert G.order == 18
    assert word(G, "t*a*t") == word(G, "a^2") and word(G, "t*b*t") == word(G, "b^2")


def test_order16_groups_are_distinct():
    assert profile("order16_id11") == [(1, 1), (2, 11), (4, 4)]
    assert profile("order16_id12") == [(1, 1), (2, 3), (4, 12)]
    assert profile("order16_id13") == [(1, 1), (2, 7), (4, 8)]
    # id3 shares the profile of id13 but has a non-cyclic centre
    assert profile("order16_id3") == [(1, 1), (2, 7), (4, 8)]
    z13 = center(build_group("order16_id13"))
    z3 = center(build_group("order16_id3"))
    assert max(element_order(build_group("order16_id13"), x) for x in z13) == 4
    assert max(element_order(build_group("order16_id3"), x) for x in z3) == 2


def test_order16_id13_relations():
    G = build_group("order16_id13")
    assert word(G, "a*b") == word(G, "b*a") and word(G, "c*a") == word(G, "a*c")
    assert word(G, "(b*c)^2") == word(G, "a^2")


def test_other_semidirect_products():
    assert profile("c3_rtimes_c4") == [(1, 1), (2, 1), (3, 2), (4, 6), (6, 2)]
    assert profile("c5_rtimes_c4") == [(1, 1), (2, 5), (4, 10), (5, 4)]
    assert profile("c4_rtimes_c4") == [(1, 1), (2, 3), (4, 12)]


def test_product_specs():
    G = build_group("cyclic:2xcyclic:4")
    assert G.order == 8 and G.is_abelian()
    assert build_group("cyclic:2×cyclic:4").table == G.table
    assert build_group("dihedral:4xcyclic:2").order == 16


def test_bad_specs():
    for bad in ["nosuch", "cyclic", "cyclic:x", "dihedral:4x", "elementary:2"]:
        with pytest.raises(ParseError):
            build_group(bad)
    assert "alt4" in FAMILY_NAMES


@pytest.mark.parametrize("spec,labels", [
    ("cyclic:9", ["0", "1"]),
    ("dihedral:5", ["e", "a", "b"]),
    ("elementary:2:3", ["000", "100", "010", "001"]),
    ("alt4", ["e", "b", "t"]),
    ("c3c3_rtimes_c2", ["e", "a", "t", "b*t"]),
])
def test_paper_subsets(spec, labels):
    G = build_group(spec)
    A = paper_subset(spec, G)
    assert sorted(G.labels[i] for i in A) == sorted(labels)


def test_paper_subset_missing():
    with pytest.raises(GroupError):
        paper_subset("quaternion8")


def test_stable_catalog_shape():
    specs = stable_catalog_specs()
    assert len(specs) == 14
    groups = [build_group(s) for _, s in specs]
    assert max(G.order for G in groups) == 16
    nonabelian = sorted(name for (name, _), G in zip(specs, groups) if not G.is_abelian())
    assert nonabelian == ["D4", "Q8", "S3"]
