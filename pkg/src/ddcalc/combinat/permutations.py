"""
Finite-support permutations of {1, 2, ...} in one-line notation.

The stored one-line form drops trailing fixed points, so ``Permutation((1, 2))``
and ``Permutation(())`` are the same identity element.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "perm_length", "perm_descents", "perm_apply_s",
    "lehmer_code", "lehmer_decode", "reduced_words", "word_to_perm",
    "longest", "all_permutations", "parse_permutation",
]


class Permutation:
    __slots__ = ("one_line",)

    def __init__(self, one_line: Iterable[int] = ()):
        values = list(one_line)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"not a permutation of 1..{len(values)}: {values}")
        while values and values[-1] == len(values):
            values.pop()
        self.one_line: tuple[int, ...] = tuple(values)

    @property
    def n(self) -> int:
        """Smallest n with the permutation in S_n (at least 1)."""
        return max(len(self.one_line), 1)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1] if i <= len(self.one_line) else i

    def extended(self, n: int) -> tuple[int, ...]:
        return tuple(self(i) for i in range(1, max(n, len(self.one_line)) + 1))

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition (self * other)(i) = self(other(i))."""
        n = max(len(self.one_line), len(other.one_line))
        return Permutation(self(other(i)) for i in range(1, n + 1))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.one_line)
        for i, v in enumerate(self.one_line, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def length(self) -> int:
        w = self.one_line
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def descents(self) -> tuple[int, ...]:
        w = self.one_line
        return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])

    def apply_s(self, i: int) -> Permutation:
        """w * s_i: swap the entries in positions i and i+1."""
        if i < 1:
            raise ValueError(f"simple transposition index must be >= 1, got {i}")
        w = list(self.extended(i + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(w)

    def is_identity(self) -> bool:
        return not self.one_line

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.one_line == other.one_line

    def __lt__(self, other: Permutation) -> bool:
        n = max(len(self.one_line), len(other.one_line))
        return self.extended(n) < other.extended(n)

    def __hash__(self) -> int:
        return hash(("perm", self.one_line))

    def __str__(self) -> str:
        w = self.one_line or (1,)
        if max(w) <= 9:
            return "".join(map(str, w))
        return "[" + ",".join(map(str, w)) + "]"

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


def parse_permutation(text: str) -> Permutation:
    """Accept ``"14253"`` or ``"[1,4,2,5,3]"``."""
    text = text.strip()
    if re.fullmatch(r"[1-9]+", text):
        return Permutation(int(ch) for ch in text)
    m = re.fullmatch(r"\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]", text)
    if not m:
        raise ValueError(f"cannot parse permutation {text!r}")
    body = m.group(1)
    return Permutation(int(v) for v in body.split(",")) if body else Permutation()


def perm_length(w: Permutation) -> int:
    return w.length()


def perm_descents(w: Permutation) -> tuple[int, ...]:
    return w.descents()


def perm_apply_s(w: Permutation, i: int) -> Permutation:
    return w.apply_s(i)


def lehmer_code(w: Permutation) -> tuple[int, ...]:
    """c_i = #{j > i : w(i) > w(j)}, trailing zeros dropped."""
    v = w.one_line
    code = [sum(1 for j in range(i + 1, len(v)) if v[j] < v[i]) for i in range(len(v))]
    while code and code[-1] == 0:
        code.pop()
    return tuple(code)


def lehmer_decode(code: Sequence[int]) -> Permutation:
    if any(c < 0 for c in code):
        raise ValueError(f"code entries must be nonnegative: {code}")
    n = max((i + c for i, c in enumerate(code, start=1)), default=0)
    remaining = list(range(1, n + 1))
    out = []
    for i in range(1, n + 1):
        c = code[i - 1] if i <= len(code) else 0
        out.append(remaining.pop(c))
    return Permutation(out)


@lru_cache(maxsize=None)
def _reduced_words(w: Permutation) -> tuple[tuple[int, ...], ...]:
    if w.is_identity():
        return ((),)
    words = []
    for i in w.descents():
        words.extend(prefix + (i,) for prefix in _reduced_words(w.apply_s(i)))
    return tuple(sorted(words))


def reduced_words(w: Permutation) -> tuple[tuple[int, ...], ...]:
    """All reduced words of w, in lexicographic order."""
    return _reduced_words(w)


def word_to_perm(word: Iterable[int]) -> tuple[Permutation, bool]:
    """The product s_{i1} ... s_{ik}, and whether the word is reduced."""
    w = Permutation()
    k = 0
    for i in word:
        w = w.apply_s(i)
        k += 1
    return w, w.length() == k


def longest(n: int) -> Permutation:
    return Permutation(range(n, 0, -1))


def all_permutations(n: int) -> Iterator[Permutation]:
    from itertools import permutations
    for p in permutations(range(1, n + 1)):
        yield Permutation(p)
