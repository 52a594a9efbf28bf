"""
Seeded verification suites over random polynomials and exhaustive small sets.

Each suite returns a Report; the CLI prints it and tests assert ``report.ok``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product

from .combinat import (
    IndexedForest,
    Permutation,
    all_permutations,
    forests_of_size,
    kostka_terms,
    lehmer_decode,
    word_to_forest,
    winc_bar,
    winc_words,
)
from .ddpair import (
    DdPairInstance,
    Report,
    corrupted_schubert_instance,
    forest_instance,
    schubert_instance,
    slide_instance,
    verify_code_map,
    verify_creation,
    verify_duality,
)
from .families import (
    forest_polynomial,
    forest_slide_expansion,
    monomial_to_slide,
    pipe_dreams,
    schubert,
    schubert_slide_expansion,
    schubert_via_staircase,
    slide,
    slide_via_creators,
    slide_expand,
    slide_product_expand,
    trace_pipes,
)
from .operators import (
    INF,
    PARTIAL,
    QS_DD,
    SLIDE_CREATOR,
    bs_map,
    partial,
    qs_dd,
    slide_extractor,
    truncate,
)
from .polyring import ZERO, Polynomial, x

__all__ = [
    "SuiteConfig", "random_homogeneous", "random_samples", "SUITES",
    "relations_suite", "creation_suite", "duality_suite", "expansion_suite",
    "kostka_suite", "pipedreams_suite", "run_suite",
]


@dataclass
class SuiteConfig:
    seed: int = 0
    trials: int = 100
    vars: int = 4
    deg: int = 4
    ms: tuple = ()

    def header(self) -> str:
        return f"seed={self.seed} trials={self.trials} vars={self.vars} deg={self.deg}"


@lru_cache(maxsize=None)
def _monomials(d: int, nvars: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        exps = [0] * nvars
        for v in combo:
            exps[v] += 1
        out.append(tuple(exps))
    return tuple(out)


_COEFFS = [c for c in range(-9, 10) if c]


def random_homogeneous(rng: random.Random, nvars: int, deg: int, min_deg: int = 0, max_terms: int = 6) -> Polynomial:
    """Homogeneous of a random degree in [min_deg, deg], monomials in x1..x_nvars."""
    d = rng.randint(min_deg, deg)
    monos = _monomials(d, nvars)
    chosen = rng.sample(monos, rng.randint(1, min(max_terms, len(monos))))
    return Polynomial({mono: rng.choice(_COEFFS) for mono in chosen})


def random_samples(cfg: SuiteConfig, positive: bool = False, salt: int = 0) -> list[Polynomial]:
    rng = random.Random(cfg.seed * 1_000_003 + salt)
    return [random_homogeneous(rng, cfg.vars, cfg.deg, 1 if positive else 0) for _ in range(cfg.trials)]


class _Tally:
    """Collects the first counterexample for each named identity."""

    def __init__(self, report: Report):
        self.report = report
        self.counts: dict[str, int] = {}
        self.first: dict[str, str] = {}

    def check(self, name: str, ok: bool, detail) -> None:
        self.counts.setdefault(name, 0)
        self.counts[name] += 1
        if not ok and name not in self.first:
            self.first[name] = detail() if callable(detail) else str(detail)

    def flush(self) -> None:
        for name, n in self.counts.items():
            self.report.add(f"{name} ({n} cases)", name not in self.first, self.first.get(name, ""))


# -- relations ------------------------------------------------------------

def relations_suite(cfg: SuiteConfig) -> Report:
    report = Report(f"relations [{cfg.header()}]")
    tally = _Tally(report)
    fs = random_samples(cfg, salt=1)
    gs = random_samples(cfg, salt=2)
    V = cfg.vars
    for f, g in zip(fs, gs):
        d = {i: partial(i, f) for i in range(1, V + 3)}
        for i in range(1, V + 2):
            tally.check("nil-Coxeter d_i d_i = 0", not partial(i, d[i]), lambda: f"i={i} f={f}")
            for j in range(i + 2, V + 2):
                tally.check("nil-Coxeter d_i d_j = d_j d_i, |i-j|>=2", partial(i, d[j]) == partial(j, d[i]),
                            lambda: f"i={i} j={j} f={f}")
            tally.check("nil-Coxeter braid d_i d_i+1 d_i = d_i+1 d_i d_i+1",
                        partial(i, partial(i + 1, d[i])) == partial(i + 1, partial(i, d[i + 1])),
                        lambda: f"i={i} f={f}")
        for m in (1, 2, 3):
            t = {i: qs_dd(i, m, f) for i in range(1, V + 2 * m + 2)}
            for i in range(2, V + m + 1):
                for j in range(1, i):
                    tally.check(f"m-Thompson T_i T_j = T_j T_(i+m), i>j, m={m}",
                                qs_dd(i, m, t[j]) == qs_dd(j, m, t[i + m]),
                                lambda: f"i={i} j={j} f={f}")
        dd = {i: slide_extractor(i, 1, f) for i in range(1, V + 2)}
        for i in range(2, V + 2):
            for j in range(1, i):
                tally.check("Winc D_i D_j = 0, i>j", not slide_extractor(i, 1, dd[j]), lambda: f"i={i} j={j} f={f}")
        for i in range(1, V + 2):
            routes = (qs_dd(i, 1, f), bs_map(i, 1, d[i]), bs_map(i + 1, 1, d[i]))
            tally.check("three routes T_i = R_i d_i = R_i+1 d_i", routes[0] == routes[1] == routes[2],
                        lambda: f"i={i} f={f}")
        lhs = ZERO
        for i in range(1, f.support_bound() + 1):
            lhs = lhs + x(i) * bs_map(i, 1, d[i])
        tally.check("sum x_i R_i d_i = id - R_1", lhs == f - bs_map(1, 1, f), lambda: f"f={f}")
        fp = f - f.constant_term()
        tele = ZERO
        for r in range(1, fp.support_bound() + 1):
            tele = tele + truncate(r + 1, fp) - truncate(r, fp)
        tally.check("telescope sum (R_r+1^inf - R_r^inf) = id on P+", tele == fp, lambda: f"f={fp}")
        fg = f * g
        for i in range(1, max(fg.support_bound(), 1) + 2):
            rhs = (slide_extractor(i, 1, f) * truncate(i + 1, bs_map(i, 1, g))
                   + truncate(i + 1, f) * slide_extractor(i, 1, g))
            tally.check("Leibniz D_i(fg)", slide_extractor(i, 1, fg) == rhs, lambda: f"i={i} f={f} g={g}")
    tally.flush()
    return report


# -- creation -------------------------------------------------------------

def creation_pairs() -> list[DdPairInstance]:
    pairs = [
        schubert_instance(),
        forest_instance(1),
        forest_instance(2),
        forest_instance(3),
    ]
    b1 = SLIDE_CREATOR.with_m(1)
    pairs.append(DdPairInstance("(partial, B)", PARTIAL, b1))
    pairs.append(DdPairInstance("(T, B)", QS_DD.with_m(1), b1))
    pairs.append(slide_instance(1))
    for m in (2, 3):
        bm = SLIDE_CREATOR.with_m(m)
        pairs.append(DdPairInstance(f"(T^{m}, B^{m})", QS_DD.with_m(m), bm, overshoot=m))
        pairs.append(slide_instance(m))
    pairs.append(slide_instance(INF))
    return pairs


def creation_suite(cfg: SuiteConfig) -> Report:
    report = Report(f"creation [{cfg.header()}]")
    samples = random_samples(cfg, positive=True, salt=3)
    for inst in creation_pairs():
        report.extend(verify_creation(inst, samples))
    broken = verify_creation(corrupted_schubert_instance(), [x(2)])
    report.add("corrupted creators (Z removed) are rejected on f = x2", not broken.ok,
               broken.failures()[0].detail if not broken.ok else "corruption went unnoticed")
    return report


# -- duality --------------------------------------------------------------

def duality_suite(cfg: SuiteConfig) -> Report:
    ms = cfg.ms or (1, 2)
    report = Report(f"duality [m in {list(ms)}]")

    perms = list(all_permutations(4))
    inst = schubert_instance()
    report.extend(verify_duality(inst, schubert, perms, identity=Permutation()))
    report.extend(verify_code_map(inst, list(all_permutations(5))))
    report.extend(_lehmer_counting())

    for m in (m for m in ms if m != INF):
        forests = [F for k in range(4) for F in forests_of_size(k, m, max_index=3)]
        finst = forest_instance(m)
        report.extend(verify_duality(finst, forest_polynomial, forests, identity=IndexedForest((), m)))
        report.extend(verify_code_map(finst, [F for k in range(5) for F in forests_of_size(k, m, 4)]))

    for m in sorted(set((1,) + tuple(ms)) | {INF}):
        words = list(winc_words(3, 3))
        sinst = slide_instance(m)
        report.extend(verify_duality(sinst, lambda a, m=m: slide(a, m), words, identity=()))

    report.extend(_forest_code_counting())
    report.extend(_forest_recursion())
    return report


def _forest_code_counting() -> Report:
    """Words of length k in 1..4 reach exactly the codes of size k; max qdes = max supp c."""
    report = Report("forest code counting")
    bad = []
    for k in range(5):
        reached = {}
        for word in product(range(1, 5), repeat=k):
            F = word_to_forest(word)
            reached[F.code] = F
        for code, F in reached.items():
            if sum(code) != k or max(F.qdes(), default=0) != len(code):
                bad.append(f"word forest {F}")
        expected = {F.code for F in forests_of_size(k, 1, 4)}
        if not expected <= set(reached):
            bad.append(f"size {k}: {len(expected - set(reached))} codes never reached")
    report.add("forest codes of size <= 4", not bad, bad[0] if bad else "")
    return report


def _lehmer_counting() -> Report:
    """#{w in S5 : l(w)=k, max Des <= d} == #{codes of S5 with |c|=k, max supp <= d}."""
    report = Report("code counting")
    bad = []
    perms = list(all_permutations(5))
    codes = [c for c in product(*(range(5 - i) for i in range(5)))]
    for k in range(11):
        for d in range(5):
            lhs = sum(1 for w in perms if w.length() == k and max(w.descents(), default=0) <= d)
            rhs = sum(1 for c in codes if sum(c) == k and max((i + 1 for i, v in enumerate(c) if v), default=0) <= d
                      and lehmer_decode(c).n <= 5)
            if lhs != rhs:
                bad.append(f"k={k} d={d}: {lhs} perms vs {rhs} codes")
    report.add("Lehmer code counts on S5", not bad, bad[0] if bad else "")
    return report


def _forest_recursion() -> Report:
    report = Report("forest recursion")
    bad = []
    count = 0
    for k in range(5):
        for F in forests_of_size(k, 1, max_index=4):
            count += 1
            p = forest_polynomial(F)
            rhs = bs_map(1, 1, p)
            for i in F.qdes():
                rhs = rhs + x(i) * forest_polynomial(F.trim(i))
            if rhs != p:
                bad.append(f"F={F}")
    report.add(f"P_F = R_1 P_F + sum x_i P_F/i ({count} forests)", not bad, bad[0] if bad else "")
    return report


# -- expansion ------------------------------------------------------------

def expansion_suite(cfg: SuiteConfig) -> Report:
    report = Report(f"expansion [{cfg.header()}]")
    samples = random_samples(cfg, salt=4)
    for m in (1, 2, INF):
        bad = []
        for f in samples:
            exp = slide_expand(f, m)
            if exp.evaluate() != f:
                bad.append(f"m={m} f={f}")
            elif any(max(k, default=0) > f.support_bound() for k in exp.coeffs):
                bad.append(f"m={m} f={f}: index beyond support bound")
        report.add(f"slide_expand round trip, m={m} ({len(samples)} samples)", not bad, bad[0] if bad else "")

    words = list(winc_words(3, 3))
    bad = []
    for a in words:
        for b in words:
            try:
                slide_product_expand(a, b)
            except AssertionError as exc:
                bad.append(str(exc))
    report.add(f"slide products are slide-positive ({len(words)}^2 pairs)", not bad, bad[0] if bad else "")

    bad = []
    for a in winc_words(4, 4):
        for j in range(1, 6):
            exp = slide_expand(bs_map(j, 1, slide(a)), 1)
            if exp.coeffs and list(exp.coeffs.values()) != [1]:
                bad.append(f"R_{j} slide{a} = {exp.coeffs}")
    report.add("R_j slide(a) is a slide or 0", not bad, bad[0] if bad else "")

    bad = []
    for a in (w for k in range(5) for w in product(range(1, 5), repeat=k)):
        via = slide_via_creators(a)
        bar = winc_bar(a)
        want = ZERO if bar is None else slide(bar)
        if not (via == slide(a) == want):
            bad.append(f"a={a}")
    report.add("B_ak..B_a1(1) = slide(a) = slide(bar a) or 0, arbitrary words", not bad, bad[0] if bad else "")

    for m in (1, 2):
        bad = []
        for k in range(4):
            for F in forests_of_size(k, m, max_index=3):
                if forest_slide_expansion(F).evaluate() != forest_polynomial(F):
                    bad.append(f"F={F}")
        report.add(f"forest slide expansion, m={m}", not bad, bad[0] if bad else "")
    return report


# -- kostka ---------------------------------------------------------------

def kostka_suite(cfg: SuiteConfig) -> Report:
    report = Report("kostka")
    bad = []
    count = 0
    for a in winc_words(5, 4, min_len=1):
        count += 1
        exp = monomial_to_slide(a)
        if exp.coeffs != slide_expand(Polynomial.from_word(a), 1).coeffs:
            bad.append(f"a={a}")
        elif any(abs(c) != 1 for c in exp.coeffs.values()) or len(exp.coeffs) != len(kostka_terms(a)):
            bad.append(f"a={a}: not signed multiplicity-free")
    report.add(f"monomial_to_slide == slide_expand(x_a) ({count} words)", not bad, bad[0] if bad else "")
    return report


# -- pipe dreams ----------------------------------------------------------

def pipedreams_suite(cfg: SuiteConfig) -> Report:
    report = Report(f"pipedreams [seed={cfg.seed}]")
    rng = random.Random(cfg.seed * 7919 + 5)
    s5 = list(all_permutations(5))
    perms = list(all_permutations(4)) + rng.sample(s5, 25)
    bad_inv, bad_eq = [], []
    for w in perms:
        dreams = pipe_dreams(w)
        for d in dreams:
            exits, reduced = trace_pipes(d.n, d.crosses)
            if not reduced or exits != w.extended(d.n) or len(d.crosses) != w.length():
                bad_inv.append(f"w={w} dream={sorted(d.crosses)}")
        s = schubert(w)
        pd = ZERO
        for d in dreams:
            pd = pd + d.monomial()
        if not (s == pd == schubert_via_staircase(w) == schubert_slide_expansion(w).evaluate()):
            bad_eq.append(f"w={w}")
    report.add(f"pipe dream invariants ({len(perms)} permutations)", not bad_inv, bad_inv[0] if bad_inv else "")
    report.add("schubert = staircase = pipe dreams = BJS slide sum", not bad_eq, bad_eq[0] if bad_eq else "")
    return report


SUITES = {
    "relations": relations_suite,
    "creation": creation_suite,
    "duality": duality_suite,
    "expansion": expansion_suite,
    "kostka": kostka_suite,
    "pipedreams": pipedreams_suite,
}


def run_suite(name: str, cfg: SuiteConfig) -> list[Report]:
    if name == "all":
        return [fn(cfg) for fn in SUITES.values()]
    return [SUITES[name](cfg)]
