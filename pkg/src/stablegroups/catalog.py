"""Built-in named groups.

Each family is realized concretely (tables, semidirect products, matrix
groups) with marked generators matching the presentation it stands for.
Where a designated subset ``A`` is known, ``paper_subset`` returns it.

Names accepted by ``build_group``::

    cyclic:n  dihedral:n  elementary:p:k  quaternion8  alt4
    c7_rtimes_c3  ut3_3  c3c3_rtimes_c2  order16_id11  order16_id12
    order16_id13  c3_rtimes_c4  c5_rtimes_c4  c4_rtimes_c4  order16_id3

and direct products joined by ``x`` (``cyclic:2xcyclic:4``).  A path to
a ``group-table v1`` file is also accepted.
"""

from __future__ import annotations

import os
from functools import lru_cache

from .groups import (
    ElementSet,
    FiniteGroup,
    GroupError,
    ParseError,
    automorphism_from_images,
    group_from_generators,
    label_by_normal_form,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_elementary_abelian,
    make_semidirect,
    parse_subset,
    read_group_table,
)


def _matmul(x, y):
    n = len(x)
    return tuple(tuple(sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _matmul_mod3(x, y):
    return tuple(tuple(v % 3 for v in row) for row in _matmul(x, y))


def make_quaternion8() -> FiniteGroup:
    """``Q8 = <a, b | a^4 = e, a^2 = b^2, b^-1 a b = a^-1>`` as 2x2 complex matrices."""
    a = ((1j, 0), (0, -1j))
    b = ((0, 1), (-1, 0))
    G = group_from_generators({"a": a, "b": b}, _matmul, ((1, 0), (0, 1)), "quaternion8")
    return label_by_normal_form(G, [("a", 4), ("b", 2)])


def make_alt4() -> FiniteGroup:
    """``<a, b, t | a^2 = b^2 = t^3 = e, ab = ba, t^-1 a t = b, t^-1 b t = ab>``.

    Built as ``(C2 x C2) x| C3``; conjugation by ``t`` sends ``a -> ab`` and
    ``b -> a``.  Normal form ``t^i a^j b^k``.
    """
    V = make_elementary_abelian(2, 2).relabel(["e", "a", "b", "ab"], marks={"a": 1, "b": 2})
    C3 = make_cyclic(3)
    phi = automorphism_from_images(V, {"a": 3, "b": 1})
    G = make_semidirect(V, C3, {1: phi, 2: [phi[phi[x]] for x in range(4)]}, "alt4")
    G = G.relabel(G.labels, marks={"a": 1, "b": 2, "t": 4})
    return label_by_normal_form(G, [("t", 3), ("a", 2), ("b", 2)])


def make_c7_rtimes_c3() -> FiniteGroup:
    """``<a, b | a^7 = b^3 = e, b a b^-1 = a^2>``, normal form ``b^i a^j``."""
    N = make_cyclic(7)
    sq = tuple(2 * x % 7 for x in range(7))
    G = make_semidirect(N, make_cyclic(3), {1: sq, 2: tuple(4 * x % 7 for x in range(7))}, "c7_rtimes_c3")
    G = G.relabel(G.labels, marks={"a": 1, "b": 7})
    return label_by_normal_form(G, [("b", 3), ("a", 7)])


def make_ut3_3() -> FiniteGroup:
    """Unitriangular 3x3 matrices over the field with three elements.

    ``a = t12(1)``, ``b = t23(1)``, ``c = t13(-1)``; these satisfy
    ``a^3 = b^3 = c^3 = e``, ``b^-1 a^-1 b a = c`` with ``c`` central.
    Normal form ``a^i b^j c^k``.
    """
    one = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    a = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    b = ((1, 0, 0), (0, 1, 1), (0, 0, 1))
    c = ((1, 0, 2), (0, 1, 0), (0, 0, 1))
    G = group_from_generators({"a": a, "b": b, "c": c}, _matmul_mod3, one, "ut3_3")
    return label_by_normal_form(G, [("a", 3), ("b", 3), ("c", 3)])


def make_c3c3_rtimes_c2() -> FiniteGroup:
    """``<a, b, t | a^3 = b^3 = t^2 = e, ab = ba, tat = a^2, tbt = b^2>``, normal form ``a^i b^j t^k``."""
    N = make_elementary_abelian(3, 2)
    inv = tuple(N.inv(x) for x in range(9))
    G = make_semidirect(N, make_cyclic(2), {1: inv}, "c3c3_rtimes_c2")
    G = G.relabel(G.labels, marks={"a": N.marks["e1"], "b": N.marks["e2"], "t": 9})
    return label_by_normal_form(G, [("a", 3), ("b", 3), ("t", 2)])


def make_order16_id11() -> FiniteGroup:
    """``C2 x D8``: ``<a, b, c | a^4 = b^2 = c^2 = e, ac = ca, bc = cb, (ab)^2 = e>``.

    ``a`` is the rotation of the dihedral factor, ``b`` a reflection and
    ``c`` generates the central ``C2``.  Normal form ``a^i b^j c^k``.
    """
    D = make_dihedral(4)
    G = make_direct_product(D, make_cyclic(2))
    rot = G.mul(G.marks["a"], G.marks["b"])
    G = G.relabel(G.labels, name="order16_id11", marks={"a": rot, "b": G.marks["a"], "c": G.marks["g"]},
                  note="C2 x D8 (GAP SmallGroup(16,11))")
    return label_by_normal_form(G, [("a", 4), ("b", 2), ("c", 2)])


def make_order16_id12() -> FiniteGroup:
    """``C2 x Q8``: ``<a, b, c | a^4 = b^4 = c^2 = e, a^2 = b^2, c central, (ab)^2 = a^2>``."""
    G = make_direct_product(make_quaternion8(), make_cyclic(2))
    G = G.relabel(G.labels, name="order16_id12", marks={"a": G.marks["a"], "b": G.marks["b"], "c": G.marks["g"]},
                  note="C2 x Q8 (GAP SmallGroup(16,12))")
    return label_by_normal_form(G, [("a", 4), ("b", 2), ("c", 2)])


def make_order16_id13() -> FiniteGroup:
    """``<a, b, c | a^4 = b^2 = c^2 = e, ab = ba, ca = ac, (bc)^2 = a^2>``.

    Realized as the Pauli group: ``a = iI``, ``b = X``, ``c = Z``.
    """
    one = ((1, 0), (0, 1))
    a = ((1j, 0), (0, 1j))
    b = ((0, 1), (1, 0))
    c = ((1, 0), (0, -1))
    G = group_from_generators({"a": a, "b": b, "c": c}, _matmul, one, "order16_id13")
    G = G.relabel(G.labels, note="(C4 x C2) : C2, Pauli group (GAP SmallGroup(16,13))")
    return label_by_normal_form(G, [("a", 4), ("b", 2), ("c", 2)])


def make_c3_rtimes_c4() -> FiniteGroup:
    """Dicyclic group of order 12: ``C3 x| C4`` with the generator of ``C4`` inverting ``C3``."""
    N = make_cyclic(3)
    inv = (0, 2, 1)
    G = make_semidirect(N, make_cyclic(4), {1: inv, 3: inv}, "c3_rtimes_c4")
    G = G.relabel(G.labels, marks={"a": 1, "b": 3})
    return label_by_normal_form(G, [("a", 3), ("b", 4)])


def make_c5_rtimes_c4() -> FiniteGroup:
    """Frobenius group of order 20: ``C5 x| C4`` with ``b a b^-1 = a^2``."""
    N = make_cyclic(5)
    acts = {h: tuple(pow(2, h, 5) * x % 5 for x in range(5)) for h in range(4)}
    G = make_semidirect(N, make_cyclic(4), acts, "c5_rtimes_c4")
    G = G.relabel(G.labels, marks={"a": 1, "b": 5})
    return label_by_normal_form(G, [("b", 4), ("a", 5)])


def make_c4_rtimes_c4() -> FiniteGroup:
    """``C4 x| C4`` with ``b a b^-1 = a^-1`` (GAP SmallGroup(16,4))."""
    N = make_cyclic(4)
    inv = (0, 3, 2, 1)
    G = make_semidirect(N, make_cyclic(4), {1: inv, 3: inv}, "c4_rtimes_c4")
    G = G.relabel(G.labels, marks={"a": 1, "b": 4}, note="C4 : C4 (GAP SmallGroup(16,4))")
    return label_by_normal_form(G, [("a", 4), ("b", 4)])


def make_order16_id3() -> FiniteGroup:
    """``(C4 x C2) x| C2`` with ``c a c = ab``, ``c b c = b``.

    Taken to be GAP SmallGroup(16,3); only order, non-commutativity and
    the element-order profile are checked, not the identification itself.
    """
    N = make_direct_product(make_cyclic(4), make_cyclic(2))
    N = N.relabel(N.labels, marks={"a": N.marks["g"], "b": N.marks["g'"]})
    phi = automorphism_from_images(N, {"a": N.mul(N.marks["a"], N.marks["b"]), "b": N.marks["b"]})
    G = make_semidirect(N, make_cyclic(2), {1: phi}, "order16_id3")
    G = G.relabel(G.labels, marks={"a": N.marks["a"], "b": N.marks["b"], "c": 8},
                  note="(C4 x C2) : C2 (GAP SmallGroup(16,3))")
    return label_by_normal_form(G, [("a", 4), ("b", 2), ("c", 2)])


_FIXED = {
    "quaternion8": make_quaternion8,
    "alt4": make_alt4,
    "c7_rtimes_c3": make_c7_rtimes_c3,
    "ut3_3": make_ut3_3,
    "c3c3_rtimes_c2": make_c3c3_rtimes_c2,
    "order16_id11": make_order16_id11,
    "order16_id12": make_order16_id12,
    "order16_id13": make_order16_id13,
    "c3_rtimes_c4": make_c3_rtimes_c4,
    "c5_rtimes_c4": make_c5_rtimes_c4,
    "c4_rtimes_c4": make_c4_rtimes_c4,
    "order16_id3": make_order16_id3,
}

# subsets written in each group's own labels / generator words
_PAPER_SUBSETS = {
    "alt4": "e,b,t",
    "c7_rtimes_c3": "e,a,b",
    "ut3_3": "e,a,b,c",
    "c3c3_rtimes_c2": "e,a,t,b*t",
    "order16_id11": "e,a,b,c",
    "order16_id12": "e,a,b,c",
    "order16_id13": "e,a,b,c",
}

FAMILY_NAMES = ("cyclic:n", "dihedral:n", "elementary:p:k") + tuple(_FIXED)


def _build_single(spec: str) -> FiniteGroup:
    head, *args = spec.split(":")
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise ParseError(f"bad group parameters in {spec!r}") from None
    if head in _FIXED and not nums:
        return _FIXED[head]()
    if head == "cyclic" and len(nums) == 1:
        return make_cyclic(nums[0])
    if head == "dihedral" and len(nums) == 1:
        return make_dihedral(nums[0])
    if head == "elementary" and len(nums) == 2:
        return make_elementary_abelian(*nums)
    raise ParseError(f"unknown group {spec!r}; known: {', '.join(FAMILY_NAMES)}")


@lru_cache(maxsize=None)
def build_group(spec: str) -> FiniteGroup:
    """Build a group from a catalog name, a product of names, or a table file."""
    spec = spec.strip()
    if os.path.isfile(spec):
        with open(spec, encoding="utf-8") as fh:
            return read_group_table(fh.read(), name=os.path.basename(spec))
    parts = [p.strip() for p in spec.replace("×", "x").split("x")]
    if not all(parts):
        raise ParseError(f"malformed group spec {spec!r}")
    G = _build_single(parts[0])
    for p in parts[1:]:
        G = make_direct_product(G, _build_single(p))
    if len(parts) > 1:
        G = G.relabel(G.labels, name=spec)
    return G


def paper_subset(spec: str, G: FiniteGroup | None = None) -> ElementSet:
    """The designated subset ``A`` for a built-in group.

    ``cyclic:n`` -> ``{0, 1}``; ``dihedral:n`` -> ``{e, a, b}``;
    ``elementary:p:k`` -> ``{0, e1, ..., ek}``; fixed groups per the table
    above.  Raises ``GroupError`` for groups without one.
    """
    G = G or build_group(spec)
    head = spec.strip().split(":")[0]
    if head == "cyclic" and "x" not in spec:
        return G.subset({0, 1 % G.order})
    if head == "dihedral" and "x" not in spec:
        return parse_subset(G, "e,a,b")
    if head == "elementary" and "x" not in spec:
        return G.subset([0, *G.marks.values()])
    if spec.strip() in _PAPER_SUBSETS:
        return parse_subset(G, _PAPER_SUBSETS[spec.strip()])
    raise GroupError(f"group {spec!r} has no designated subset")


def stable_catalog_specs() -> list[tuple[str, str]]:
    """(display name, group spec) for the fourteen stable groups."""
    return [
        ("C1", "cyclic:1"),
        ("C2", "cyclic:2"),
        ("C2xC2", "elementary:2:2"),
        ("C2xC2xC2", "elementary:2:3"),
        ("C2xC2xC2xC2", "elementary:2:4"),
        ("C3", "cyclic:3"),
        ("C3xC3", "elementary:3:2"),
        ("C4", "cyclic:4"),
        ("C2xC4", "cyclic:2xcyclic:4"),
        ("C5", "cyclic:5"),
        ("C7", "cyclic:7"),
        ("S3", "dihedral:3"),
        ("D4", "dihedral:4"),
        ("Q8", "quaternion8"),
    ]
