"""
Schubert, m-forest and m-slide polynomials, pipe dreams, and basis expansions.
"""

from __future__ import annotations


import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Optional

from .combinat import (
    IndexedForest,
    Permutation,
    compatible_sequences,
    kostka_terms,
    longest,
    reduced_words,
    trimming_sequences,
    winc_bar,
)
from .operators import (
    INF,
    Multiplicity,
    check_multiplicity,
    forest_creator,
    partial,
    schubert_creator,
    slide_creator,
    slide_extractor,
)
from .polyring import ONE, ZERO, Polynomial

__all__ = [
    "ArityMismatch", "BoundExceeded", "InvariantViolation", "Expansion",
    "PipeDream", "schubert", "schubert_via_staircase", "forest_polynomial",
    "slide", "slide_via_creators", "pipe_dreams", "pipe_dream_polynomial",
    "trace_pipes", "slide_expand", "schubert_slide_expansion",
    "forest_slide_expansion", "monomial_to_slide", "slide_product_expand",
    "staircase_bound", "DEFAULT_STAIRCASE_BOUND",
]

DEFAULT_STAIRCASE_BOUND = 7
BRUTE_FORCE_STAIRCASE = 5


class ArityMismatch(ValueError):
    pass


class BoundExceeded(ValueError):
    pass


class InvariantViolation(AssertionError):
    """A proven invariant failed; indicates a bug, not bad input."""


# -- Schubert polynomials -------------------------------------------------

@lru_cache(maxsize=None)
def schubert(w: Permutation) -> Polynomial:
    """
    Sum over reduced words (i1..ik) of Z x_{ik} R_{ik} ... Z x_{i1} R_{i1} (1).

    Reduced words of w are exactly the words of w s_i followed by i for
    i a descent, so the sum is evaluated by that recursion with caching.
    """
    if w.is_identity():
        return ONE
    total = ZERO
    for i in w.descents():
        total = total + schubert_creator(i, schubert(w.apply_s(i)))
    return total


def schubert_via_staircase(w: Permutation) -> Polynomial:
    """Apply divided differences for w^{-1} w0 to x1^{n-1} x2^{n-2} ... x_{n-1}."""
    n = w.n
    w0 = longest(n)
    f = Polynomial.monomial(range(n - 1, 0, -1))
    u = w.inverse() * w0
    words = reduced_words(u)
    for i in reversed(words[0]):
        f = partial(i, f)
    return f


# -- forest polynomials ---------------------------------------------------

def forest_polynomial(forest: IndexedForest, m: Optional[int] = None) -> Polynomial:
    """Sum over trimming sequences of Z^(m) x_{ik} ... Z^(m) x_{i1} (1)."""
    if m is not None and m != forest.m:
        raise ArityMismatch(f"forest has arity {forest.arity}, expected {m + 1}")
    return _forest_polynomial(forest)


@lru_cache(maxsize=None)
def _forest_polynomial(forest: IndexedForest) -> Polynomial:
    if forest.is_empty():
        return ONE
    total = ZERO
    for i in forest.qdes():
        total = total + forest_creator(i, forest.m, _forest_polynomial(forest.trim(i)))
    return total


# -- slide polynomials ----------------------------------------------------

@lru_cache(maxsize=None)
def _slide(a: tuple[int, ...], m: Multiplicity) -> Polynomial:
    return Polynomial({_word_exps(seq): 1 for seq in compatible_sequences(a, m)})


def _word_exps(seq: Iterable[int]) -> tuple[int, ...]:
    exps: list[int] = []
    for v in seq:
        if len(exps) < v:
            exps.extend([0] * (v - len(exps)))
        exps[v - 1] += 1
    return tuple(exps)


def slide(a: Iterable[int], m: Multiplicity = 1) -> Polynomial:
    """Generating function of the m-compatible sequences of a."""
    check_multiplicity(m)
    return _slide(tuple(a), m)


def slide_via_creators(a: Iterable[int], m: Multiplicity = 1) -> Polynomial:
    """B_{ak} ... B_{a1} (1)."""
    f = ONE
    for i in a:
        f = slide_creator(i, m, f)
    return f


# -- pipe dreams ----------------------------------------------------------

@dataclass(frozen=True)
class PipeDream:
    w: Permutation
    n: int
    crosses: frozenset[tuple[int, int]]

    def monomial(self) -> Polynomial:
        return Polynomial.from_word(r for r, _ in self.crosses)

    def render(self) -> str:
        rows = []
        for r in range(1, self.n + 1):
            rows.append("".join("+" if (r, c) in self.crosses else "." for c in range(1, self.n + 2 - r)))
        return "\n".join(rows)

    def sort_key(self) -> tuple:
        return tuple(sorted(self.crosses))


def trace_pipes(n: int, crosses: Iterable[tuple[int, int]]) -> tuple[tuple[int, ...], bool]:
    """
    Follow the pipe entering each row of the staircase from the left.

    Returns the exit column of each row's pipe and whether the tiling is
    reduced: every cross is met by two distinct pipes and no pair of pipes
    crosses twice.
    """
    crosses = set(crosses)
    met: dict[tuple[int, int], list[int]] = {}
    exits = []
    for start in range(1, n + 1):
        r, c, going_right = start, 1, True
        while r >= 1:
            if (r, c) in crosses:
                met.setdefault((r, c), []).append(start)
                if going_right:
                    c += 1
                else:
                    r -= 1
            elif going_right:
                r, going_right = r - 1, False
            else:
                c, going_right = c + 1, True
        exits.append(c)
    pairs = [tuple(sorted(p)) for p in met.values()]
    reduced = (
        len(met) == len(crosses)
        and all(len(p) == 2 and p[0] != p[1] for p in pairs)
        and len(set(pairs)) == len(pairs)
    )
    return tuple(exits), reduced


def staircase_bound() -> int:
    value = os.environ.get("DDCALC_MAX_STAIRCASE")
    return int(value) if value else DEFAULT_STAIRCASE_BOUND


def _is_pipe_dream(w: Permutation, n: int, crosses: Iterable[tuple[int, int]]) -> bool:
    exits, reduced = trace_pipes(n, crosses)
    return reduced and exits == w.extended(n)


def _pipe_dreams_brute(w: Permutation, n: int) -> set[frozenset]:
    cells = [(r, c) for r in range(1, n + 1) for c in range(1, n + 1 - r)]
    return {
        frozenset(chosen)
        for chosen in combinations(cells, w.length())
        if _is_pipe_dream(w, n, chosen)
    }


def _pipe_dreams_from_words(w: Permutation) -> set[frozenset]:
    # A reduced word a and a compatible sequence i place a cross at row i_j
    # in the column making its antidiagonal a_j.
    out = set()
    for a in reduced_words(w):
        for rows in compatible_sequences(a):
            out.add(frozenset((r, s - r + 1) for r, s in zip(rows, a)))
    return out


def pipe_dreams(w: Permutation, bound: Optional[int] = None, method: str = "auto") -> list[PipeDream]:
    """
    All reduced pipe dreams of w in the minimal staircase.

    ``method`` is "brute" (subset search with the tracer), "words" (reduced
    words and compatible sequences) or "auto" (brute force up to n = 5).
    Every dream is validated by the tracer whichever method produced it.
    """
    n = w.n
    bound = staircase_bound() if bound is None else bound
    if n > bound:
        raise BoundExceeded(f"{w} needs a staircase of size {n} > bound {bound}")
    if method == "auto":
        method = "brute" if n <= BRUTE_FORCE_STAIRCASE else "words"
    if method == "brute":
        found = _pipe_dreams_brute(w, n)
    elif method == "words":
        found = _pipe_dreams_from_words(w)
        bad = [d for d in found if not _is_pipe_dream(w, n, d)]
        if bad:
            raise InvariantViolation(f"word construction produced a non-dream for {w}: {sorted(bad[0])}")
    else:
        raise ValueError(f"unknown method {method!r}")
    dreams = [PipeDream(w, n, d) for d in found]
    return sorted(dreams, key=PipeDream.sort_key)


def pipe_dream_polynomial(w: Permutation, bound: Optional[int] = None) -> Polynomial:
    total = ZERO
    for d in pipe_dreams(w, bound):
        total = total + d.monomial()
    return total


# -- expansions -----------------------------------------------------------

@dataclass
class Expansion:
    """
    Integer combination of basis polynomials.

    ``basis`` is "slide" (with ``m`` a positive int or INF), "monomial",
    "schubert" or "forest" (with ``m``).  Keys are words, permutations or
    forests accordingly.
    """
    basis: str
    m: Optional[Multiplicity] = None
    coeffs: dict = field(default_factory=dict)

    def add(self, index, coeff: int) -> None:
        c = self.coeffs.get(index, 0) + coeff
        if c:
            self.coeffs[index] = c
        else:
            self.coeffs.pop(index, None)

    def basis_polynomial(self, index) -> Polynomial:
        if self.basis == "slide":
            return slide(index, self.m)
        if self.basis == "monomial":
            return Polynomial.from_word(index)
        if self.basis == "schubert":
            return schubert(index)
        if self.basis == "forest":
            return forest_polynomial(index)
        raise ValueError(f"unknown basis {self.basis!r}")

    def evaluate(self) -> Polynomial:
        total = ZERO
        for index, c in self.coeffs.items():
            total = total + c * self.basis_polynomial(index)
        return total

    def sorted_items(self) -> list:
        return sorted(self.coeffs.items(), key=lambda kv: _index_key(kv[0]))

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "m": _m_json(self.m),
            "coeffs": [{"index": _index_json(k), "coeff": c} for k, c in self.sorted_items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Expansion:
        m = data.get("m")
        if m == "inf":
            m = INF
        exp = cls(data["basis"], m)
        for entry in data["coeffs"]:
            exp.add(_index_from_json(data["basis"], m, entry["index"]), int(entry["coeff"]))
        return exp

    def __eq__(self, other) -> bool:
        if isinstance(other, Expansion):
            return (self.basis, self.m, self.coeffs) == (other.basis, other.m, other.coeffs)
        if isinstance(other, Mapping):
            return self.coeffs == dict(other)
        return NotImplemented


def _m_json(m):
    if m is None:
        return None
    return "inf" if m == INF else m


def _index_key(index):
    if isinstance(index, Permutation):
        return index.one_line
    if isinstance(index, IndexedForest):
        return index.code
    return tuple(index)


def _index_json(index) -> list[int]:
    if isinstance(index, Permutation):
        return list(index.one_line)
    if isinstance(index, IndexedForest):
        return list(index.code)
    return list(index)


def _index_from_json(basis: str, m, value: list[int]):
    if basis == "schubert":
        return Permutation(value)
    if basis == "forest":
        return IndexedForest(tuple(value), m or 1)
    return tuple(value)


def slide_expand(f: Polynomial, m: Multiplicity = 1) -> Expansion:
    """
    Coefficients D_{i1} ... D_{ik} f of the m-slide basis (monomials for INF).

    Extractors are applied largest index first: D_{ik} acts first, then each
    later index may not exceed the previous one, and zero branches are cut.
    """
    check_multiplicity(m)
    exp = Expansion("monomial" if m == INF else "slide", m)

    def rec(g: Polynomial, suffix: tuple[int, ...], top: int) -> None:
        if g.degree() == 0:
            exp.add(suffix, g.constant_term())
            return
        for i in range(min(top, g.support_bound()), 0, -1):
            h = slide_extractor(i, m, g)
            if h:
                rec(h, (i,) + suffix, i)

    for part in f.homogeneous_components().values():
        rec(part, (), part.support_bound())
    return exp


def _word_sum_expansion(words: Iterable[tuple[int, ...]], m: Multiplicity) -> Expansion:
    exp = Expansion("slide", m)
    for word in words:
        bar = winc_bar(word, m)
        if bar is not None:
            exp.add(bar, 1)
    return exp


def schubert_slide_expansion(w: Permutation) -> Expansion:
    """Sum of slide(a) over reduced words a of w, each normalized by winc_bar."""
    return _word_sum_expansion(reduced_words(w), 1)


def forest_slide_expansion(forest: IndexedForest, m: Optional[int] = None) -> Expansion:
    """Sum of m-slide(a) over trimming sequences a of the forest."""
    if m is not None and m != forest.m:
        raise ArityMismatch(f"forest has arity {forest.arity}, expected {m + 1}")
    return _word_sum_expansion(trimming_sequences(forest), forest.m)


def monomial_to_slide(a: Iterable[int]) -> Expansion:
    """Signed slide expansion of x_{a1} ... x_{ak} from the Kostka sign sets."""
    exp = Expansion("slide", 1)
    for term in kostka_terms(tuple(a)):
        exp.add(term.word, term.sign)
    return exp


def slide_product_expand(a: Iterable[int], b: Iterable[int]) -> Expansion:
    """Slide expansion of slide(a) * slide(b); every coefficient must be positive."""
    a, b = tuple(a), tuple(b)
    exp = slide_expand(slide(a) * slide(b), 1)
    negative = {k: c for k, c in exp.coeffs.items() if c < 0}
    if negative:
        raise InvariantViolation(f"slide product {a} * {b} has negative coefficients {negative}")
    return exp

