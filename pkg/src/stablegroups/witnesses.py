"""Closed-form index formulas, explicit instability witnesses and the classification harness."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .catalog import build_group, paper_subset, stable_catalog_specs
from .cayley import boundary_set, cayley_graph
from .groups import (
    ElementSet,
    FiniteGroup,
    GroupError,
    is_normal,
    iter_bits,
    parse_subset,
    subgroup_generated,
)
from .solver import BudgetExceeded, SolveBudget
from .stability import StabilityReport, is_stable_group, subset_indices


class WitnessError(GroupError):
    code = "witness-precondition"

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def cycle_formula(n: int) -> tuple[int, int]:
    """``(i, alpha)`` of the cycle ``C_n``: ``(ceil(n/3), floor(n/2))``."""
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return -(-n // 3), n // 2


def dihedral_formula(n: int) -> tuple[int, int]:
    """``(i, alpha)`` of ``Cay(D_n, {a, b, ab, ba})``: ``(ceil(2n/5), floor(2n/3))``."""
    if n < 3:
        raise ValueError("dihedral groups need n >= 3")
    return -(-2 * n // 5), 2 * n // 3


# ---------------------------------------------------------------------------
# cyclic quotient construction


def quotient_order(G: FiniteGroup, H: ElementSet, g: int) -> int:
    """Least ``m >= 1`` with ``g^m`` in ``H``."""
    m, x = 1, g
    while x not in H:
        x = G.mul(x, g)
        m += 1
    return m


def cyclic_quotient_witness(G: FiniteGroup, H: ElementSet, g: int, h: int) -> tuple[ElementSet, ElementSet]:
    """Unstable subset ``A = (H - {h}) u {g}`` and a small independent dominating set.

    Preconditions: ``H`` normal, ``G/H`` cyclic of order ``n >= 4``
    generated by ``Hg``, ``g^n = e``, ``|H| >= 3``, ``h`` in ``H - {e}``.

    The dominating set is ``v_i = g^(2i) x_i`` for ``i = 0..k`` with
    ``k = ceil(n/2) - 1``, ``x_0 = e`` and each ``x_i`` the least element of
    ``H`` avoiding the one or two values that would leave an odd coset
    partly undominated.  For odd ``n``, ``x_k = h`` is forced and ``x_(k-1)``
    is repaired afterwards.  The result is verified before returning: the
    set is independent and dominating, has ``ceil(n/2)`` elements, and the
    powers ``e, eta, ..., eta^(n-2)`` of ``eta = h^-1 g`` are independent,
    so the upper index is at least ``n - 1``.
    """
    if not H.bits & 1 or not is_normal(G, H) or subgroup_generated(G, H) != H:
        raise WitnessError("not-normal", f"{G.format_set(H)} is not a normal subgroup")
    if H.size < 3:
        raise WitnessError("subgroup-too-small", "need |H| >= 3")
    if h not in H or h == 0:
        raise WitnessError("bad-h", "h must be a non-identity element of H")
    n = quotient_order(G, H, g)
    if n * H.size != G.order:
        raise WitnessError("quotient-not-cyclic", f"H{G.labels[g]} does not generate G/H")
    if n < 4:
        raise WitnessError("quotient-too-small", f"G/H has order {n} < 4")
    if G.power(g, n) != 0:
        raise WitnessError("g-power", f"g^{n} is not the identity")

    mul, inv, pw = G.mul, G.inv, G.power
    A = (H.bits & ~(1 << h)) | 1 << g
    k = -(-n // 2) - 1
    h_inv = inv(h)
    eta = mul(h_inv, g)
    eta2 = mul(eta, eta)
    g_inv_h = mul(inv(g), h)

    def least_in_h(*forbidden: int) -> int:
        for x in iter_bits(H.bits):
            if x not in forbidden:
                return x
        raise RuntimeError("no admissible element of H")  # impossible while |H| >= 3

    def forward(i: int, x_prev: int) -> int:
        # x_{i+1} != g^(-2i-2) (h^-1 g)^2 g^(2i) x_i
        return G.prod(pw(g, -2 * i - 2), eta2, pw(g, 2 * i), x_prev)

    x = [0] * (k + 1)
    for i in range(0, k - 1):
        x[i + 1] = least_in_h(forward(i, x[i]))
    if n % 2 == 0:
        x[k] = least_in_h(forward(k - 1, x[k - 1]), mul(pw(g, -2 * k), pw(g_inv_h, 2)))
    else:
        x[k] = h
        # repair x_{k-1} against both neighbours
        x[k - 1] = least_in_h(forward(k - 2, x[k - 2]), mul(pw(g, -2 * k + 2), pw(g_inv_h, 3)))
    I = 0
    for i in range(k + 1):
        I |= 1 << mul(pw(g, 2 * i), x[i])

    graph = cayley_graph(G, boundary_set(G, A))
    if I.bit_count() != k + 1 or not graph.is_maximal_independent(I):
        raise RuntimeError("cyclic-quotient construction failed verification")
    chain = power_chain(G, eta, n - 1)
    if chain.bit_count() != n - 1 or not graph.is_independent(chain):
        raise RuntimeError("power chain is not independent")
    return ElementSet(A, G.order), ElementSet(I, G.order)


def power_chain(G: FiniteGroup, x: int, length: int) -> int:
    """Mask of ``e, x, ..., x^(length-1)``."""
    out, y = 0, 0
    for _ in range(length):
        out |= 1 << y
        y = G.mul(y, x)
    return out


def _candidate_subgroups(G: FiniteGroup) -> list[ElementSet]:
    seen = {}
    elems = list(G.elements())
    for a in elems:
        H = subgroup_generated(G, 1 << a)
        seen.setdefault(H.bits, H)
    for a, b in combinations(elems[1:], 2):
        H = subgroup_generated(G, 1 << a | 1 << b)
        seen.setdefault(H.bits, H)
    return sorted(seen.values(), key=lambda H: (H.size, H.indices()))


def find_cyclic_quotient_instances(G: FiniteGroup, *, all_h: bool = False) -> Iterator[tuple[ElementSet, int, int]]:
    """Yield ``(H, g, h)`` meeting the construction's preconditions.

    Subgroups come from one- and two-generator closures, ordered by size;
    ``g`` is the least valid coset generator and ``h`` the least
    non-identity element of ``H`` (or every one with ``all_h``).
    """
    for H in _candidate_subgroups(G):
        if H.size < 3 or G.order // H.size < 4 or not is_normal(G, H):
            continue
        n = G.order // H.size
        for g in G.elements():
            if quotient_order(G, H, g) == n and G.power(g, n) == 0:
                hs = [x for x in H if x != 0]
                for h in hs if all_h else hs[:1]:
                    yield H, g, h
                break


# ---------------------------------------------------------------------------
# catalog and the classification harness


def stable_group_catalog() -> list[tuple[str, FiniteGroup]]:
    return [(name, build_group(spec)) for name, spec in stable_catalog_specs()]


@dataclass(frozen=True)
class PaperInstance:
    name: str
    spec: str
    subset: str
    lower: int
    upper: int
    source: str

    def group(self) -> FiniteGroup:
        return build_group(self.spec)

    def subset_bits(self) -> ElementSet:
        G = self.group()
        return paper_subset(self.spec, G) if self.subset == "paper" else parse_subset(G, self.subset)


def paper_instance_table() -> list[PaperInstance]:
    """Computed instances ``(group, A, i, alpha)`` with a short provenance tag."""
    rows = [
        PaperInstance("C6", "cyclic:6", "paper", 2, 3, "cyclic {0,1}"),
        PaperInstance("C8", "cyclic:8", "paper", 3, 4, "cyclic {0,1}"),
        PaperInstance("C9", "cyclic:9", "paper", 3, 4, "cyclic {0,1}"),
        PaperInstance("D5", "dihedral:5", "paper", 2, 3, "dihedral {e,a,b}"),
        PaperInstance("D6", "dihedral:6", "paper", 3, 4, "dihedral {e,a,b}"),
        PaperInstance("D7", "dihedral:7", "paper", 3, 4, "dihedral {e,a,b}"),
        PaperInstance("C7:C3", "c7_rtimes_c3", "paper", 3, 6, "order 21"),
        PaperInstance("UT(3,3)", "ut3_3", "paper", 3, 6, "order 27 nonabelian"),
        PaperInstance("Z2^5", "elementary:2:5", "paper", 2, 4, "elementary 2^5"),
        PaperInstance("Z3^3", "elementary:3:3", "paper", 3, 4, "elementary 3^3"),
        PaperInstance("A4", "alt4", "paper", 2, 3, "alternating A4"),
        PaperInstance("(C3xC3):C2", "c3c3_rtimes_c2", "paper", 2, 4, "order 18"),
        PaperInstance("C2xD8", "order16_id11", "paper", 2, 4, "order 16 id 11"),
        PaperInstance("C2xQ8", "order16_id12", "paper", 2, 4, "order 16 id 12"),
        PaperInstance("(C4xC2):C2", "order16_id13", "paper", 2, 4, "order 16 id 13"),
        PaperInstance("Z2^4", "elementary:2:4", "paper", 2, 2, "stable Z2^4 basis set"),
    ]
    return rows


# groups excluded via the cyclic-quotient construction
QUOTIENT_CASES = [
    ("Z5xZ5", "elementary:5:2"),
    ("Z7xZ7", "elementary:7:2"),
    ("C4xC4", "cyclic:4xcyclic:4"),
    ("C2xC2xC4", "elementary:2:2xcyclic:4"),
    ("C4:C4", "c4_rtimes_c4"),
    ("(C4xC2):C2 id3", "order16_id3"),
    ("C5:C4", "c5_rtimes_c4"),
    ("C3:C4", "c3_rtimes_c4"),
]

# cyclic groups of forbidden orders, excluded with A = {0, 1}
CYCLIC_CASES = [6, 8, 9, 10, 11, 13]


@dataclass
class CatalogResult:
    name: str
    spec: str
    order: int
    report: StabilityReport | None
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.report is not None and self.report.stable


@dataclass
class ExcludedWitness:
    name: str
    spec: str
    source: str
    subset: tuple[str, ...]
    lower: int | None
    upper: int | None
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.lower is not None and self.upper is not None and self.lower < self.upper


@dataclass
class ClassificationRun:
    catalog_results: list[CatalogResult] = field(default_factory=list)
    excluded_witnesses: list[ExcludedWitness] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return (len(self.catalog_results) == 14 and all(r.passed for r in self.catalog_results)
                and all(w.passed for w in self.excluded_witnesses))

    @property
    def budget_exceeded(self) -> bool:
        return any(r.error == "budget exceeded" for r in self.catalog_results) or \
            any(w.error == "budget exceeded" for w in self.excluded_witnesses)

    def to_dict(self) -> dict:
        return {
            "catalog": [
                {"group": r.name, "spec": r.spec, "order": r.order,
                 "stable": None if r.report is None else r.report.stable,
                 "examined": None if r.report is None else r.report.subsets_examined,
                 "error": r.error}
                for r in self.catalog_results
            ],
            "witnesses": [
                {"group": w.name, "spec": w.spec, "source": w.source, "subset": list(w.subset),
                 "lower": w.lower, "upper": w.upper, "unstable": w.passed, "error": w.error}
                for w in self.excluded_witnesses
            ],
            "all_pass": self.all_pass,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        out = ["stable group catalog"]
        for r in self.catalog_results:
            verdict = r.error or ("stable" if r.passed else "UNSTABLE")
            examined = "" if r.report is None else f"  examined {r.report.subsets_examined}"
            out.append(f"  {r.name:<14} order {r.order:>3}  {verdict}{examined}")
        out.append("instability witnesses")
        for w in self.excluded_witnesses:
            if w.error:
                verdict = w.error
            else:
                verdict = f"lower {w.lower}  upper {w.upper}  {'unstable' if w.passed else 'NOT UNSTABLE'}"
            out.append(f"  {w.name:<14} {w.source:<22} A={{{', '.join(w.subset)}}}  {verdict}")
        out.append(f"all_pass: {'yes' if self.all_pass else 'no'}")
        return "\n".join(out) + "\n"


def excluded_witness_jobs() -> list[tuple[str, str, str, FiniteGroup, ElementSet]]:
    """Every unstable-subset check the classification relies on, as ``(name, spec, source, G, A)``."""
    jobs = []
    for n in CYCLIC_CASES:
        spec = f"cyclic:{n}"
        G = build_group(spec)
        jobs.append((f"C{n}", spec, "cyclic {0,1}", G, paper_subset(spec, G)))
    for inst in paper_instance_table():
        if inst.lower < inst.upper and not inst.spec.startswith("cyclic"):
            jobs.append((inst.name, inst.spec, inst.source, inst.group(), inst.subset_bits()))
    for name, spec in QUOTIENT_CASES:
        G = build_group(spec)
        H, g, h = next(find_cyclic_quotient_instances(G))
        A, _ = cyclic_quotient_witness(G, H, g, h)
        jobs.append((name, spec, f"cyclic quotient n={G.order // H.size}", G, A))
    return jobs


def verify_classification(budget: SolveBudget | None = None, workers: int = 1) -> ClassificationRun:
    """Scan all fourteen catalog groups and re-check every exclusion witness."""
    run = ClassificationRun()
    for name, spec in stable_catalog_specs():
        G = build_group(spec)
        try:
            report = is_stable_group(G, budget, workers=workers, name=name)
            run.catalog_results.append(CatalogResult(name, spec, G.order, report))
        except BudgetExceeded:
            run.catalog_results.append(CatalogResult(name, spec, G.order, None, "budget exceeded"))
    for name, spec, source, G, A in excluded_witness_jobs():
        labels = tuple(G.labels[i] for i in A)
        try:
            rep = subset_indices(G, A, budget)
            run.excluded_witnesses.append(ExcludedWitness(name, spec, source, labels, rep.lower, rep.upper))
        except BudgetExceeded:
            run.excluded_witnesses.append(ExcludedWitness(name, spec, source, labels, None, None, "budget exceeded"))
    return run
