"""
Generic checks for divided-difference pairs.

A dd-pair instance bundles an extractor family X_i, a creator family Y_i and
the monoid callbacks (last letters, division by a last letter, factorizations,
code map).  The verify_* functions evaluate the defining identities on
concrete data and return a Report rather than raising.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional, Sequence

from .combinat import (
    IndexedForest,
    Permutation,
    lehmer_code,
    reduced_words,
    trimming_sequences,
    winc_code,
)
from .operators import (
    FOREST_CREATOR,
    INF,
    PARTIAL,
    QS_DD,
    SCHUBERT_CREATOR,
    SLIDE_CREATOR,
    SLIDE_EXTRACTOR,
    Multiplicity,
    OperatorFamily,
    bs_map,
)
from .polyring import ONE, ZERO, Polynomial, x

__all__ = [
    "Check", "Report", "DdPairInstance", "verify_creation", "verify_duality",
    "verify_code_map", "schubert_instance", "forest_instance", "slide_instance",
    "corrupted_schubert_instance", "apply_extractors",
]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, passed, detail))

    def extend(self, other: Report) -> None:
        """Absorb other's checks, prefixing each name with other's title."""
        for c in other.checks:
            self.checks.append(Check(f"{other.title}: {c.name}", c.passed, c.detail))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def lines(self) -> list[str]:
        return [f"== {self.title}"] + [c.line() for c in self.checks]


@dataclass
class DdPairInstance:
    name: str
    dd_family: OperatorFamily
    creators: OperatorFamily
    last: Optional[Callable[[Any], Iterable[int]]] = None
    divide: Optional[Callable[[Any, int], Any]] = None
    factorizations: Optional[Callable[[Any], Sequence[tuple[int, ...]]]] = None
    code_map: Optional[Callable[[Any], tuple[int, ...]]] = None
    length: Optional[Callable[[Any], int]] = None
    # creation sums run over i <= support_bound(f) + overshoot
    overshoot: int = 1


def apply_extractors(inst: DdPairInstance, word: Sequence[int], f: Polynomial) -> Polynomial:
    """X_{i1} ... X_{ik} f (X_{ik} acts first)."""
    for i in reversed(word):
        if not f:
            break
        f = inst.dd_family(i, f)
    return f


def creation_sum(inst: DdPairInstance, f: Polynomial) -> Polynomial:
    total = ZERO
    for i in range(1, f.support_bound() + inst.overshoot + 1):
        xf = inst.dd_family(i, f)
        if xf:
            total = total + inst.creators(i, xf)
    return total


def verify_creation(inst: DdPairInstance, samples: Iterable[Polynomial]) -> Report:
    """Check sum_i Y_i X_i f == f for each sample without constant term."""
    report = Report(f"creation {inst.name}")
    failures = []
    count = 0
    for f in samples:
        count += 1
        if f.constant_term():
            failures.append(f"sample {f} has a constant term")
            continue
        got = creation_sum(inst, f)
        if got != f:
            failures.append(f"f = {f}: sum Y_i X_i f = {got}")
    report.add(
        f"sum Y_i X_i = id ({inst.creators.name} with {inst.dd_family.name}, {count} samples)",
        not failures,
        failures[0] if failures else "",
    )
    return report


def verify_duality(
    inst: DdPairInstance,
    family: Callable[[Any], Polynomial],
    indices: Sequence[Any],
    identity: Any = None,
) -> Report:
    """
    Check X_i S_w == S_{w/i} for i in last(w) and 0 otherwise, over every w in
    indices and every i up to the support bound, plus ct(X_v S_w) == delta_{v,w}
    over all pairs of indices.
    """
    report = Report(f"duality {inst.name}")
    polys = {w: family(w) for w in indices}

    if identity is not None:
        s1 = polys.get(identity, family(identity))
        report.add("S_1 = 1", s1 == ONE, "" if s1 == ONE else f"S_1 = {s1}")

    bad = []
    for w, s in polys.items():
        last = set(inst.last(w))
        top = max([s.support_bound() + inst.overshoot] + list(last))
        for i in range(1, top + 1):
            got = inst.dd_family(i, s)
            want = family(inst.divide(w, i)) if i in last else ZERO
            if got != want:
                bad.append(f"X_{i} S_{_fmt(w)} = {got}, expected {want}")
    report.add(f"X_i S_w recurrence ({len(polys)} elements)", not bad, bad[0] if bad else "")

    bad = []
    for v in indices:
        word = inst.factorizations(v)[0]
        for w, s in polys.items():
            got = apply_extractors(inst, word, s).constant_term()
            want = 1 if v == w else 0
            if got != want:
                bad.append(f"ct X_{_fmt(v)} S_{_fmt(w)} = {got}")
    report.add(f"ct X_v S_w = delta ({len(indices)}^2 pairs)", not bad, bad[0] if bad else "")
    return report


def verify_code_map(inst: DdPairInstance, elements: Sequence[Any]) -> Report:
    """|c(w)| = length, max supp c(w) = max last(w), and c injective on elements."""
    report = Report(f"code map {inst.name}")
    bad = []
    seen: dict[tuple[int, ...], Any] = {}
    for w in elements:
        c = tuple(inst.code_map(w))
        if sum(c) != inst.length(w):
            bad.append(f"|c({_fmt(w)})| = {sum(c)} != length {inst.length(w)}")
        last = list(inst.last(w))
        top_supp = max((i for i, v in enumerate(c, start=1) if v), default=0)
        if top_supp != max(last, default=0):
            bad.append(f"max supp c({_fmt(w)}) = {top_supp} != max last {max(last, default=0)}")
        if c in seen and seen[c] != w:
            bad.append(f"c({_fmt(w)}) = c({_fmt(seen[c])})")
        seen[c] = w
    report.add(f"code map laws ({len(elements)} elements)", not bad, bad[0] if bad else "")
    return report


def _fmt(w) -> str:
    if isinstance(w, tuple):
        return "(" + ",".join(map(str, w)) + ")"
    return str(w)


# -- standard instances ---------------------------------------------------

def schubert_instance(creators: OperatorFamily = SCHUBERT_CREATOR) -> DdPairInstance:
    return DdPairInstance(
        name="(partial, S_inf)",
        dd_family=PARTIAL,
        creators=creators,
        last=Permutation.descents,
        divide=Permutation.apply_s,
        factorizations=reduced_words,
        code_map=lehmer_code,
        length=Permutation.length,
    )


def corrupted_schubert_instance() -> DdPairInstance:
    """Creators x_i R_i, i.e. Z dropped; their creation sum is id - R_1."""
    xr = OperatorFamily("xR", lambda i, f: x(i) * bs_map(i, 1, f))
    return schubert_instance(xr)


def forest_instance(m: int = 1, creators: Optional[OperatorFamily] = None) -> DdPairInstance:
    return DdPairInstance(
        name=f"(T^{m}, Th^{m})",
        dd_family=QS_DD.with_m(m),
        creators=creators or FOREST_CREATOR.with_m(m),
        last=IndexedForest.qdes,
        divide=IndexedForest.trim,
        factorizations=trimming_sequences,
        code_map=lambda f: f.code,
        length=IndexedForest.size,
        overshoot=m,
    )


def slide_instance(m: Multiplicity = 1, creators: Optional[OperatorFamily] = None) -> DdPairInstance:
    return DdPairInstance(
        name=f"(D^{m}, Winc)",
        dd_family=SLIDE_EXTRACTOR.with_m(m),
        creators=creators or SLIDE_CREATOR.with_m(m),
        last=lambda a: (a[-1],) if a else (),
        divide=lambda a, i: a[:-1],
        factorizations=lambda a: (tuple(a),),
        code_map=winc_code,
        length=len,
        overshoot=1 if m == INF else m,
    )
