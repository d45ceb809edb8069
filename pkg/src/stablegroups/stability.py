"""Subset indices, s-factors and group stability.

A right s-factor of ``A`` is a set ``B`` for which the translates ``A*b``
(``b`` in ``B``) are pairwise disjoint and which cannot be enlarged
without breaking that.  Its possible sizes range over the lower and upper
index of ``A``; these equal the independent domination number and the
independence number of ``Cay(G, A^-1 A - {e})``.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .cayley import boundary_set, cayley_graph, difference_set
from .groups import ElementSet, FiniteGroup, GroupError, OrderTooLarge, iter_bits
from .solver import SolveBudget, independence_number, independent_domination_number

BRUTE_FORCE_ORDER = 14
EXHAUSTIVE_DEFAULT_ORDER = 16
EXHAUSTIVE_MAX_ORDER = 32
SCAN_CHUNK = 128


class InconclusiveError(RuntimeError):
    """No verdict was reached (e.g. a large group scanned without ``exhaustive``)."""


@dataclass(frozen=True)
class IndexReport:
    lower: int
    upper: int
    witness_small: ElementSet
    witness_large: ElementSet

    @property
    def stable(self) -> bool:
        return self.lower == self.upper


@dataclass(frozen=True)
class StabilityReport:
    group_name: str
    stable: bool
    witness_subset: ElementSet | None
    witness_indices: tuple[int, int] | None
    subsets_examined: int
    exhaustive: bool = True

    def to_dict(self, G: FiniteGroup) -> dict:
        return {
            "group": self.group_name,
            "stable": self.stable,
            "witness": None if self.witness_subset is None else [G.labels[i] for i in self.witness_subset],
            "lower": None if self.witness_indices is None else self.witness_indices[0],
            "upper": None if self.witness_indices is None else self.witness_indices[1],
            "examined": self.subsets_examined,
        }

    def to_text(self, G: FiniteGroup) -> str:
        lines = [f"group: {self.group_name}", f"stable: {'yes' if self.stable else 'no'}"]
        if self.witness_subset is not None:
            lines.append(f"witness: {G.format_set(self.witness_subset)}")
            lines.append(f"lower: {self.witness_indices[0]}")
            lines.append(f"upper: {self.witness_indices[1]}")
        lines.append(f"examined: {self.subsets_examined}")
        return "\n".join(lines) + "\n"

    def to_json(self, G: FiniteGroup) -> str:
        return json.dumps(self.to_dict(G), indent=2) + "\n"


# ---------------------------------------------------------------------------
# the definition-level check


def _bits(s: ElementSet | int) -> int:
    return s.bits if isinstance(s, ElementSet) else s


def sfactor_check(G: FiniteGroup, A: ElementSet | int, B: ElementSet | int, side: str = "right") -> bool:
    """Is ``B`` a right (or left) s-factor of ``G`` associated with ``A``?

    Right: every element of ``AB`` is uniquely ``a*b``, and no ``g`` outside
    ``B`` can be added.  Left swaps the roles: products ``b*a``.
    """
    a_bits, b_bits = _bits(A), _bits(B)
    if not a_bits or not b_bits:
        raise GroupError("s-factors are defined for non-empty A and B")
    if side == "right":
        translate = [G.right_translate(a_bits, g) for g in G.elements()]
    else:
        translate = [G.left_translate(g, a_bits) for g in G.elements()]
    covered = 0
    for b in iter_bits(b_bits):
        if translate[b] & covered:
            return False
        covered |= translate[b]
    return all(translate[g] & covered for g in G.elements() if not b_bits >> g & 1)


def brute_force_indices(G: FiniteGroup, A: ElementSet | int, side: str = "right") -> IndexReport:
    """Indices by enumerating candidate sets ``B`` straight from the definition.

    Candidates are built element by element; a partial ``B`` whose
    translates already overlap is abandoned, since every superset fails
    too.  Each surviving full assignment is then tested for maximality.
    """
    n = G.order
    if n > BRUTE_FORCE_ORDER:
        raise OrderTooLarge(f"brute force is limited to order {BRUTE_FORCE_ORDER}, got {n}")
    a_bits = _bits(A)
    if not a_bits:
        raise GroupError("A must be non-empty")
    if side == "right":
        translate = [G.right_translate(a_bits, g) for g in G.elements()]
    else:
        translate = [G.left_translate(g, a_bits) for g in G.elements()]
    best: dict[str, tuple[int, int]] = {}

    def leaf(chosen: int, covered: int) -> None:
        for g in range(n):
            if not chosen >> g & 1 and not translate[g] & covered:
                return
        size = chosen.bit_count()
        if "lo" not in best or size < best["lo"][0]:
            best["lo"] = (size, chosen)
        if "hi" not in best or size > best["hi"][0]:
            best["hi"] = (size, chosen)

    def walk(g: int, chosen: int, covered: int) -> None:
        if g == n:
            if chosen:
                leaf(chosen, covered)
            return
        if not translate[g] & covered:
            walk(g + 1, chosen | 1 << g, covered | translate[g])
        walk(g + 1, chosen, covered)

    walk(0, 0, 0)
    lo, hi = best["lo"], best["hi"]
    return IndexReport(lo[0], hi[0], ElementSet(lo[1], n), ElementSet(hi[1], n))


# ---------------------------------------------------------------------------
# graph route


def _index_values(G: FiniteGroup, a_bits: int, budget: SolveBudget | None) -> tuple[int, int]:
    graph = cayley_graph(G, boundary_set(G, a_bits))
    return (independent_domination_number(graph, budget).size,
            independence_number(graph, budget).size)


def subset_indices(G: FiniteGroup, A: ElementSet | int, budget: SolveBudget | None = None) -> IndexReport:
    """Lower and upper right index of ``A`` via ``Cay(G, A^-1 A - {e})``.

    Both witnesses are re-checked against the s-factor definition.
    """
    a_bits = _bits(A)
    graph = cayley_graph(G, boundary_set(G, a_bits))
    small = independent_domination_number(graph, budget)
    large = independence_number(graph, budget)
    report = IndexReport(small.size, large.size, ElementSet(small.bits, G.order), ElementSet(large.bits, G.order))
    for w in (report.witness_small, report.witness_large):
        if not sfactor_check(G, a_bits, w):
            raise RuntimeError(f"solver witness {G.format_set(w)} is not an s-factor of {G.format_set(a_bits)}")
    return report


def left_subset_indices(G: FiniteGroup, A: ElementSet | int, budget: SolveBudget | None = None) -> IndexReport:
    """Left indices, computed as right indices in the opposite group."""
    report = subset_indices(G.opposite(), A, budget)
    for w in (report.witness_small, report.witness_large):
        if not sfactor_check(G, A, w, side="left"):
            raise RuntimeError(f"solver witness {G.format_set(w)} is not a left s-factor")
    return report


# ---------------------------------------------------------------------------
# translation classes and the stability scan


def _lex_less(x: int, y: int) -> bool:
    """Sorted-tuple order for equal-size masks: the smaller set owns the lowest differing element."""
    d = x ^ y
    return bool(x & d & -d)


def is_canonical(G: FiniteGroup, a_bits: int) -> bool:
    """Is ``A`` the least of its left translates (by sorted element tuple)?"""
    if not a_bits & 1:
        return False
    for a in iter_bits(a_bits & ~1):
        if _lex_less(G.left_translate(G.inv(a), a_bits), a_bits):
            return False
    return True


def translation_class_representatives(G: FiniteGroup) -> Iterator[ElementSet]:
    """One subset per class ``{xA}``, by ascending size and then lexicographically.

    The representative is the lexicographically least translate, which
    always contains the identity.
    """
    others = range(1, G.order)
    for k in range(G.order):
        for combo in combinations(others, k):
            bits = 1
            for x in combo:
                bits |= 1 << x
            if is_canonical(G, bits):
                yield ElementSet(bits, G.order)


def _trivially_stable(G: FiniteGroup, a_bits: int) -> bool:
    full = (1 << G.order) - 1
    return a_bits.bit_count() == 1 or difference_set(G, a_bits) == full


def _scan_chunk(args: tuple[FiniteGroup, Sequence[int], SolveBudget | None]) -> tuple[int, int, int] | None:
    G, chunk, budget = args
    for pos, bits in enumerate(chunk):
        if _trivially_stable(G, bits):
            continue
        lower, upper = _index_values(G, bits, budget)
        if lower != upper:
            return pos, lower, upper
    return None


def _chunks(items: Sequence[int], size: int) -> list[Sequence[int]]:
    return [items[i:i + size] for i in range(0, len(items), size)]


def is_stable_group(G: FiniteGroup, budget: SolveBudget | None = None, *, workers: int = 1,
                    exhaustive: bool = False, designated: Sequence[ElementSet] = (),
                    name: str | None = None) -> StabilityReport:
    """Decide stability by scanning one subset per translation class.

    Groups up to order 16 are always scanned in full.  Orders 17..32 need
    ``exhaustive=True``; otherwise only the ``designated`` subsets are
    tried, and finding none unstable raises ``InconclusiveError``.  The
    reported witness is the first unstable representative in scan order,
    independent of ``workers``.
    """
    name = name or G.name
    n = G.order
    if n > EXHAUSTIVE_DEFAULT_ORDER and not exhaustive:
        for k, A in enumerate(designated, 1):
            rep = subset_indices(G, A, budget)
            if not rep.stable:
                return StabilityReport(name, False, A, (rep.lower, rep.upper), k, exhaustive=False)
        raise InconclusiveError(f"{name} has order {n}; a full scan needs the exhaustive flag")
    if n > EXHAUSTIVE_MAX_ORDER:
        raise OrderTooLarge(f"exhaustive stability scans are limited to order {EXHAUSTIVE_MAX_ORDER}")
    reps = [A.bits for A in translation_class_representatives(G)]
    chunks = _chunks(reps, SCAN_CHUNK)
    jobs = [(G, c, budget) for c in chunks]
    found = None
    if workers <= 1 or len(chunks) <= 1:
        for k, job in enumerate(jobs):
            hit = _scan_chunk(job)
            if hit is not None:
                found = (k, hit)
                break
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for k, hit in enumerate(pool.map(_scan_chunk, jobs)):
                if hit is not None:
                    found = (k, hit)
                    pool.shutdown(wait=False, cancel_futures=True)
                    break
    if found is None:
        return StabilityReport(name, True, None, None, len(reps))
    k, (pos, lower, upper) = found
    index = k * SCAN_CHUNK + pos
    return StabilityReport(name, False, ElementSet(reps[index], n), (lower, upper), index + 1)
