"""Finite groups as explicit multiplication tables.

Every group is stored as a dense ``n x n`` table over element indices
``0..n-1`` with the identity pinned at index 0.  Element subsets are bit
masks (``ElementSet``), so products of subsets and neighbourhood queries
reduce to integer bit operations.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

import numpy as np

MAX_ORDER = 128


class GroupError(ValueError):
    """Invalid group data or a violated precondition."""

    code = "group-error"


class NotLatinSquare(GroupError):
    code = "not-latin-square"


class MissingIdentity(GroupError):
    code = "missing-identity"


class NotAssociative(GroupError):
    code = "not-associative"


class MissingInverse(GroupError):
    code = "missing-inverse"


class OrderTooLarge(GroupError):
    code = "order-too-large"


class NotASubgroup(GroupError):
    code = "not-a-subgroup"


class BadAction(GroupError):
    code = "bad-action"


class ParseError(GroupError):
    code = "parse-error"


def _check_order(n: int) -> None:
    if n > MAX_ORDER:
        raise OrderTooLarge(f"group order {n} exceeds the limit of {MAX_ORDER}")


@dataclass(frozen=True)
class ElementSet:
    """A subset of a group's elements stored as a bit mask."""

    bits: int
    order: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.order:
            raise GroupError(f"bit pattern {self.bits:#x} out of range for order {self.order}")

    @classmethod
    def of(cls, order: int, indices: Iterable[int]) -> "ElementSet":
        bits = 0
        for i in indices:
            if not 0 <= i < order:
                raise GroupError(f"element index {i} out of range for order {order}")
            bits |= 1 << i
        return cls(bits, order)

    @classmethod
    def full(cls, order: int) -> "ElementSet":
        return cls((1 << order) - 1, order)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def indices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.size

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and i >= 0 and bool(self.bits >> i & 1)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.bits | other.bits, self.order)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.bits & other.bits, self.order)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.bits & ~other.bits, self.order)


def iter_bits(bits: int) -> Iterator[int]:
    """Yield set bit positions in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[a][b]`` is the index of ``a*b``; index 0 is the identity.
    ``marks`` names distinguished elements (generators of a presentation),
    which the element-word parser understands.
    """

    table: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    labels: tuple[str, ...]
    name: str = "G"
    marks: Mapping[str, int] = field(default_factory=dict)
    note: str = ""

    identity = 0

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        result = 0
        row = self.table
        for _ in range(k):
            result = row[result][a]
        return result

    def prod(self, *elements: int) -> int:
        result = 0
        for x in elements:
            result = self.table[result][x]
        return result

    def elements(self) -> range:
        return range(self.order)

    def subset(self, indices: Iterable[int]) -> ElementSet:
        return ElementSet.of(self.order, indices)

    def is_abelian(self) -> bool:
        t = self.table
        n = self.order
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    def opposite(self) -> "FiniteGroup":
        """The opposite group: same elements, ``a o b = b*a``."""
        n = self.order
        t = tuple(tuple(self.table[b][a] for b in range(n)) for a in range(n))
        return FiniteGroup(t, self.inverse, self.labels, self.name + "^op", dict(self.marks))

    def left_translate(self, x: int, bits: int) -> int:
        """Bit mask of ``x*B`` for ``B`` given as a mask."""
        row = self.table[x]
        out = 0
        for b in iter_bits(bits):
            out |= 1 << row[b]
        return out

    def right_translate(self, bits: int, y: int) -> int:
        """Bit mask of ``B*y``."""
        t = self.table
        out = 0
        for b in iter_bits(bits):
            out |= 1 << t[b][y]
        return out

    def label(self, a: int) -> str:
        return self.labels[a]

    def format_set(self, s: ElementSet | int) -> str:
        bits = s.bits if isinstance(s, ElementSet) else s
        return "{" + ", ".join(self.labels[i] for i in iter_bits(bits)) + "}"

    def relabel(self, labels: Sequence[str], name: str | None = None, marks: Mapping[str, int] | None = None,
                note: str | None = None) -> "FiniteGroup":
        if len(labels) != self.order or len(set(labels)) != self.order:
            raise GroupError("labels must be distinct and one per element")
        return FiniteGroup(self.table, self.inverse, tuple(labels), name or self.name,
                           dict(self.marks if marks is None else marks),
                           self.note if note is None else note)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


def _from_table(table: Sequence[Sequence[int]], labels: Sequence[str] | None = None, name: str = "G",
                marks: Mapping[str, int] | None = None, note: str = "") -> FiniteGroup:
    """Wrap a table known to be a group table with identity 0 (no checks)."""
    n = len(table)
    t = tuple(tuple(int(x) for x in row) for row in table)
    inverse = tuple(row.index(0) for row in t)
    if labels is None:
        labels = [str(i) for i in range(n)]
    return FiniteGroup(t, inverse, tuple(labels), name, dict(marks or {}), note)


def validate_table(candidate: Sequence[Sequence[int]], labels: Sequence[str] | None = None,
                   name: str = "G") -> FiniteGroup:
    """Check every group axiom on an untrusted table and return the group.

    Raises a ``GroupError`` subclass naming the first failed axiom:
    ``NotLatinSquare``, ``MissingIdentity`` (including an identity not at
    index 0), ``MissingInverse`` or ``NotAssociative``.
    """
    n = len(candidate)
    if n == 0:
        raise NotLatinSquare("empty table")
    _check_order(n)
    try:
        t = np.array(candidate, dtype=np.int64)
    except (ValueError, TypeError) as exc:
        raise NotLatinSquare(f"table is not a square integer array: {exc}") from None
    if t.shape != (n, n):
        raise NotLatinSquare(f"table has shape {t.shape}, expected ({n}, {n})")
    if t.min() < 0 or t.max() >= n:
        raise NotLatinSquare("table entries must lie in 0..n-1")
    full = np.arange(n)
    if not (np.sort(t, axis=1) == full).all() or not (np.sort(t, axis=0) == full[:, None]).all():
        raise NotLatinSquare("some row or column is not a permutation")
    ident = [e for e in range(n) if (t[e] == full).all() and (t[:, e] == full).all()]
    if not ident:
        raise MissingIdentity("no two-sided identity element")
    if ident[0] != 0:
        raise MissingIdentity(f"identity is element {ident[0]}, but it must be element 0")
    right_inv = np.argmin(t, axis=1)  # position of 0 in each row
    if not (t[right_inv, full] == 0).all():
        raise MissingInverse("some element has a right inverse that is not a left inverse")
    left = t[t[:, :, None], full[None, None, :]]
    right = t[full[:, None, None], t[None, :, :]]
    if not (left == right).all():
        a, b, c = (int(x[0]) for x in np.nonzero(left != right))
        raise NotAssociative(f"(a*b)*c != a*(b*c) for a={a}, b={b}, c={c}")
    return _from_table(t.tolist(), labels, name)


# ---------------------------------------------------------------------------
# constructors


def group_from_generators(generators: Mapping[str, Hashable], mul: Callable[[Hashable, Hashable], Hashable],
                          identity: Hashable, name: str = "G") -> FiniteGroup:
    """Close a set of concrete generators under ``mul`` by breadth-first search.

    Element 0 is ``identity``; the rest are numbered in discovery order,
    exploring ``x * g`` for each generator ``g`` in the given order.  The
    generators become marks of the resulting group.
    """
    gens = list(generators.items())
    index = {identity: 0}
    elems = [identity]
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for _, g in gens:
            y = mul(x, g)
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
                _check_order(len(elems))
                queue.append(y)
    table = [[index[mul(x, y)] for y in elems] for x in elems]
    marks = {nm: index[g] for nm, g in gens}
    return _from_table(table, None, name, marks)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # (p*q)(x) = p(q(x))
    return tuple(p[i] for i in q)


def close_permutation_generators(degree: int, generators: Sequence[Sequence[int]],
                                 name: str = "G") -> FiniteGroup:
    """The permutation group on ``0..degree-1`` generated by ``generators``.

    Generators are given in one-line notation (``g[i]`` is the image of
    ``i``).  The product ``p*q`` is composition, ``q`` applied first.
    Numbering is breadth-first and depends only on the generator order.
    """
    gens = {}
    for k, g in enumerate(generators):
        g = tuple(int(x) for x in g)
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise GroupError(f"generator {k} is not a permutation of 0..{degree - 1}")
        gens[f"g{k + 1}"] = g
    G = group_from_generators(gens, _compose, tuple(range(degree)), name)
    return G


def make_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    _check_order(n)
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    marks = {"g": 1 % n} if n > 1 else {}
    return _from_table(table, [str(i) for i in range(n)], f"cyclic:{n}", marks)


def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n generated by involutions ``a``, ``b``.

    ``a*b`` has order ``n``.  Labels are shortest alternating words, with
    runs written as powers, e.g. ``(a*b)^3`` or ``b*(a*b)^2``.
    """
    if n < 3:
        raise GroupError("dihedral group needs n >= 3")
    _check_order(2 * n)
    # element (k, s) = r^k s^s with r = a*b, a = s, b = s*r
    def mul(x, y):
        k1, s1 = x
        k2, s2 = y
        return ((k1 + (-k2 if s1 else k2)) % n, s1 ^ s2)

    G = group_from_generators({"a": (0, 1), "b": (1, 1)}, mul, (0, 0), f"dihedral:{n}")
    return G.relabel(_dihedral_labels(G))


def _shortest_words(G: FiniteGroup, gens: Sequence[str]) -> list[list[str]]:
    words: list[list[str] | None] = [None] * G.order
    words[0] = []
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = G.mul(x, G.marks[g])
            if words[y] is None:
                words[y] = words[x] + [g]
                queue.append(y)
    return words  # type: ignore[return-value]


def _dihedral_labels(G: FiniteGroup) -> list[str]:
    labels = []
    for w in _shortest_words(G, ["a", "b"]):
        if not w:
            labels.append("e")
            continue
        head = [w[0]] if len(w) % 2 else []
        rest = w[len(head):]
        parts = list(head)
        if rest:
            k = len(rest) // 2
            pair = f"{rest[0]}*{rest[1]}"
            parts.append(pair if k == 1 else f"({pair})^{k}")
        labels.append("*".join(parts))
    return labels


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def make_elementary_abelian(p: int, k: int) -> FiniteGroup:
    """``Z_p^k``; element index is the coordinate vector read in base ``p``.

    Coordinate ``i`` (1-based) has weight ``p^(i-1)``, so the basis vector
    ``e_i`` sits at index ``p^(i-1)`` and is marked ``e<i>``.  Labels list
    the coordinates left to right, e.g. ``110`` in ``Z_3^3``.
    """
    if not _is_prime(p):
        raise GroupError(f"{p} is not prime")
    if k < 1:
        raise GroupError("rank must be positive")
    n = p ** k
    _check_order(n)
    vecs = [tuple((x // p ** i) % p for i in range(k)) for x in range(n)]

    def enc(v):
        return sum(c * p ** i for i, c in enumerate(v))

    table = [[enc(tuple((a + b) % p for a, b in zip(u, v))) for v in vecs] for u in vecs]
    labels = ["".join(str(c) for c in v) for v in vecs]
    marks = {f"e{i + 1}": p ** i for i in range(k)}
    return _from_table(table, labels, f"elementary:{p}:{k}", marks)


def make_direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """``G x H`` with element ``(g, h)`` at index ``g*|H| + h``."""
    m, n = G.order, H.order
    _check_order(m * n)
    gt, ht = G.table, H.table
    table = [[gt[g1][g2] * n + ht[h1][h2] for g2 in range(m) for h2 in range(n)]
             for g1 in range(m) for h1 in range(n)]
    labels = [f"({G.labels[g]},{H.labels[h]})" for g in range(m) for h in range(n)]
    marks = {}
    for nm, g in G.marks.items():
        marks[nm] = g * n
    for nm, h in H.marks.items():
        marks[nm if nm not in marks else nm + "'"] = h
    return _from_table(table, labels, f"{G.name}x{H.name}", marks)


def make_semidirect(N: FiniteGroup, H: FiniteGroup, action: Mapping[int, Sequence[int]] | Sequence[Sequence[int]],
                    name: str | None = None) -> FiniteGroup:
    """``N x| H`` with ``h n h^-1 = action[h](n)``.

    ``action[h]`` is the automorphism of ``N`` as an image table.  Missing
    entries of a mapping default to the identity map.  Element ``(n, h)``
    (the product ``n*h``) sits at index ``h*|N| + n``.
    """
    m, k = N.order, H.order
    _check_order(m * k)
    ident = tuple(range(m))
    if isinstance(action, Mapping):
        acts = [tuple(action.get(h, ident)) for h in range(k)]
    else:
        acts = [tuple(a) for a in action]
    if len(acts) != k:
        raise BadAction("need one automorphism per element of H")
    nt = N.table
    for h, phi in enumerate(acts):
        if sorted(phi) != list(ident):
            raise BadAction(f"action of element {h} is not a bijection of N")
        for x in range(m):
            for y in range(m):
                if phi[nt[x][y]] != nt[phi[x]][phi[y]]:
                    raise BadAction(f"action of element {h} is not an automorphism of N")
    for h1 in range(k):
        for h2 in range(k):
            h12 = H.table[h1][h2]
            if any(acts[h12][x] != acts[h1][acts[h2][x]] for x in range(m)):
                raise BadAction(f"action is not a homomorphism at ({h1}, {h2})")
    table = []
    for h1 in range(k):
        for n1 in range(m):
            row = []
            for h2 in range(k):
                for n2 in range(m):
                    row.append(H.table[h1][h2] * m + nt[n1][acts[h1][n2]])
            table.append(row)
    labels = [f"({N.labels[n]},{H.labels[h]})" for h in range(k) for n in range(m)]
    marks = dict(N.marks)
    for nm, h in H.marks.items():
        marks[nm if nm not in marks else nm + "'"] = h * m
    return _from_table(table, labels, name or f"{N.name}:{H.name}", marks)


def automorphism_from_images(N: FiniteGroup, images: Mapping[str, int]) -> tuple[int, ...]:
    """Extend an assignment on marked generators of ``N`` to a full image table.

    The table is only a candidate; ``make_semidirect`` verifies it.
    """
    phi: dict[int, int] = {0: 0}
    queue = deque([0])
    gens = [(N.marks[g], img) for g, img in images.items()]
    while queue:
        x = queue.popleft()
        for g, img in gens:
            y = N.mul(x, g)
            if y not in phi:
                phi[y] = N.mul(phi[x], img)
                queue.append(y)
    if len(phi) != N.order:
        raise BadAction("generator images do not determine the map on all of N")
    return tuple(phi[x] for x in range(N.order))


def label_by_normal_form(G: FiniteGroup, spec: Sequence[tuple[str, int]]) -> FiniteGroup:
    """Relabel ``G`` with normal forms ``g1^i1*g2^i2*...``.

    ``spec`` lists ``(mark, exponent_bound)`` pairs; the products must hit
    every element exactly once.
    """
    labels: list[str | None] = [None] * G.order
    for exps in product(*(range(b) for _, b in spec)):
        x = 0
        parts = []
        for (nm, _), k in zip(spec, exps):
            x = G.mul(x, G.power(G.marks[nm], k))
            if k:
                parts.append(nm if k == 1 else f"{nm}^{k}")
        if labels[x] is not None:
            raise GroupError(f"normal form {spec} is not unique in {G.name}")
        labels[x] = "*".join(parts) or "e"
    if any(lab is None for lab in labels):
        raise GroupError(f"normal form {spec} does not cover {G.name}")
    return G.relabel(labels)  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# queries


def element_order(G: FiniteGroup, a: int) -> int:
    k, x = 1, a
    while x != 0:
        x = G.table[x][a]
        k += 1
    return k


def subgroup_generated(G: FiniteGroup, S: ElementSet | int) -> ElementSet:
    """Closure of ``S u {e}`` under products (finite, so inverses come free)."""
    gens = list(iter_bits(S.bits if isinstance(S, ElementSet) else S))
    seen = 1
    queue = deque([0])
    t = G.table
    while queue:
        x = queue.popleft()
        for s in gens:
            y = t[x][s]
            if not seen >> y & 1:
                seen |= 1 << y
                queue.append(y)
    return ElementSet(seen, G.order)


def is_subgroup(G: FiniteGroup, H: ElementSet) -> bool:
    if not H.bits & 1:
        return False
    t = G.table
    members = H.indices()
    return all(H.bits >> t[x][y] & 1 for x in members for y in members)


def is_normal(G: FiniteGroup, H: ElementSet) -> bool:
    return all(G.right_translate(G.left_translate(g, H.bits), G.inv(g)) == H.bits for g in G.elements())


def coset_partition(G: FiniteGroup, H: ElementSet) -> list[ElementSet]:
    """Right cosets ``H*g``, ordered by their least element index."""
    if not is_subgroup(G, H):
        raise NotASubgroup(f"{G.format_set(H)} is not a subgroup of {G.name}")
    cells = []
    covered = 0
    for g in G.elements():
        if not covered >> g & 1:
            c = G.right_translate(H.bits, g)
            covered |= c
            cells.append(ElementSet(c, G.order))
    return cells


def subgroup_as_group(G: FiniteGroup, H: ElementSet) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Re-index a subgroup as a standalone group.

    Returns the group and the embedding (new index -> index in ``G``).
    Element order is ascending index in ``G``, so the identity stays first.
    """
    if not is_subgroup(G, H):
        raise NotASubgroup(f"{G.format_set(H)} is not a subgroup of {G.name}")
    emb = H.indices()
    pos = {x: i for i, x in enumerate(emb)}
    table = [[pos[G.mul(x, y)] for y in emb] for x in emb]
    labels = [G.labels[x] for x in emb]
    marks = {nm: pos[x] for nm, x in G.marks.items() if x in pos}
    return _from_table(table, labels, f"{G.name}[{len(emb)}]", marks), emb


def order_profile(G: FiniteGroup) -> tuple[int, ...]:
    """Sorted element orders; a cheap isomorphism fingerprint."""
    return tuple(sorted(element_order(G, a) for a in G.elements()))


def center(G: FiniteGroup) -> ElementSet:
    t = G.table
    return G.subset(a for a in G.elements() if all(t[a][b] == t[b][a] for b in G.elements()))


# ---------------------------------------------------------------------------
# element words and subset parsing

_TOKEN = re.compile(r"\s*(?:(?P<num>-?\d+)|(?P<sym>[()*^])|(?P<name>[A-Za-z_][A-Za-z_0-9']*))")


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


class _WordParser:
    def __init__(self, G: FiniteGroup, text: str):
        self.G = G
        self.text = text
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text):
        names = sorted(set(self.G.marks) | {"e"}, key=len, reverse=True)
        toks = []
        i = 0
        while i < len(text):
            m = _TOKEN.match(text, i)
            if not m or m.end() == i:
                if text[i:].strip() == "":
                    break
                raise ParseError(f"cannot parse element word {text!r}")
            if m.group("name"):
                # juxtaposed names such as "bab" or "e1e2" are split greedily
                word = m.group("name")
                j = 0
                while j < len(word):
                    for nm in names:
                        if word.startswith(nm, j):
                            toks.append(("name", nm))
                            j += len(nm)
                            break
                    else:
                        raise ParseError(f"unknown generator in {text!r} at {word[j:]!r}")
            elif m.group("num") is not None:
                toks.append(("num", int(m.group("num"))))
            else:
                toks.append(("sym", m.group("sym")))
            i = m.end()
        return toks

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def word(self) -> int:
        x = 0
        while True:
            kind, val = self.peek()
            if kind == "sym" and val == "*":
                self.take()
                continue
            if kind == "name" or (kind == "sym" and val == "("):
                x = self.G.mul(x, self.factor())
            else:
                return x

    def factor(self) -> int:
        kind, val = self.take()
        if kind == "name":
            base = 0 if val == "e" else self.G.marks[val]
        elif val == "(":
            base = self.word()
            if self.take() != ("sym", ")"):
                raise ParseError(f"unbalanced parentheses in {self.text!r}")
        else:
            raise ParseError(f"unexpected token in {self.text!r}")
        if self.peek() == ("sym", "^"):
            self.take()
            kind, k = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            base = self.G.power(base, k)
        return base

    def parse(self) -> int:
        x = self.word()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input in element word {self.text!r}")
        return x


def parse_element(G: FiniteGroup, text: str) -> int:
    """Resolve an element by label, by a word in the marked generators, or by index."""
    text = text.strip()
    try:
        return G.labels.index(text)
    except ValueError:
        pass
    if text.isdigit():
        i = int(text)
        if i < G.order:
            return i
        raise ParseError(f"element index {i} out of range for {G.name}")
    try:
        return _WordParser(G, text).parse()
    except ParseError:
        raise
    except (KeyError, IndexError):
        raise ParseError(f"cannot parse element {text!r} in {G.name}") from None


def parse_subset(G: FiniteGroup, text: str) -> ElementSet:
    items = [t for t in split_top_level(text.strip().strip("{}")) if t]
    if not items:
        raise ParseError("empty subset")
    return G.subset(parse_element(G, t) for t in items)


# ---------------------------------------------------------------------------
# table file format

TABLE_HEADER = "group-table v1"


def read_group_table(text: str, name: str = "table") -> FiniteGroup:
    """Parse the ``group-table v1`` text format and validate the table."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or lines[0] != TABLE_HEADER:
        raise ParseError(f"missing '{TABLE_HEADER}' header")
    if len(lines) < 2 or not lines[1].startswith("order"):
        raise ParseError("missing 'order <n>' line")
    try:
        n = int(lines[1].split()[1])
    except (IndexError, ValueError):
        raise ParseError("malformed order line") from None
    if n < 1:
        raise ParseError("order must be positive")
    _check_order(n)
    rows = lines[2:2 + n]
    if len(rows) != n:
        raise ParseError(f"expected {n} table rows")
    try:
        table = [[int(x) for x in r.split()] for r in rows]
    except ValueError:
        raise ParseError("table rows must contain integers") from None
    labels = None
    rest = lines[2 + n:]
    if rest:
        if not rest[0].startswith("labels"):
            raise ParseError(f"unexpected line {rest[0]!r}")
        payload = rest[0][len("labels"):].strip()
        if not payload and len(rest) > 1:
            payload = rest[1]
        labels = split_top_level(payload)
        if len(labels) != n:
            raise ParseError(f"expected {n} labels, got {len(labels)}")
    return validate_table(table, labels, name)


def format_group_table(G: FiniteGroup) -> str:
    out = [TABLE_HEADER, f"order {G.order}"]
    out += [" ".join(str(x) for x in row) for row in G.table]
    out.append("labels " + ",".join(G.labels))
    return "\n".join(out) + "\n"
