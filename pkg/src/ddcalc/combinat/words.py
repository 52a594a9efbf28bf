"""Words, weakly increasing words, compatible sequences and Kostka sign sets."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import groupby, product
from typing import Iterator, Optional, Sequence

__all__ = [
    "Word", "KostkaTerm", "is_winc", "compatible_sequences", "winc_bar",
    "kostka_terms", "winc_words", "parse_word", "winc_code",
]

Word = tuple[int, ...]


@dataclass(frozen=True, order=True)
class KostkaTerm:
    word: Word
    sign: int


def is_winc(a: Sequence[int]) -> bool:
    return all(a[k] <= a[k + 1] for k in range(len(a) - 1))


def _check_word(a: Sequence[int]) -> None:
    if any(v < 1 for v in a):
        raise ValueError(f"word entries must be >= 1: {tuple(a)}")


def compatible_sequences(a: Sequence[int], m: int | float = 1) -> list[Word]:
    """
    Weakly increasing i with i_j <= a_j, i_j = a_j mod m, and i_j < i_{j+1}
    wherever a_j < a_{j+1}.  For m = inf the congruence pins i_j = a_j.
    """
    _check_word(a)
    a = tuple(a)
    k = len(a)
    out: list[Word] = []

    def choices(j: int, low: int) -> range:
        if m == math.inf:
            return range(a[j], a[j] + 1) if a[j] >= low else range(0)
        start = low + (a[j] - low) % m
        return range(start, a[j] + 1, m)

    def rec(j: int, prefix: list[int]) -> None:
        if j == k:
            out.append(tuple(prefix))
            return
        low = 1
        if j:
            low = prefix[-1] + (1 if a[j - 1] < a[j] else 0)
        for v in choices(j, low):
            prefix.append(v)
            rec(j + 1, prefix)
            prefix.pop()

    rec(0, [])
    return out


def winc_bar(a: Sequence[int], m: int | float = 1) -> Optional[Word]:
    """
    Componentwise-maximal m-compatible sequence of a, or None if there is none.

    Built greedily right to left; each entry's upper bound only grows with
    the entry to its right, so the greedy choice dominates every other one.
    """
    _check_word(a)
    if not a:
        return ()
    if m == math.inf:
        return tuple(a) if is_winc(a) else None
    b = [0] * len(a)
    b[-1] = a[-1]
    for j in range(len(a) - 2, -1, -1):
        bound = min(a[j], b[j + 1] - (1 if a[j] < a[j + 1] else 0))
        b[j] = bound - (bound - a[j]) % m
        if b[j] < 1:
            return None
    return tuple(b)


def _block_choices(mult: int, top: int, floor: int) -> Iterator[tuple[Word, int]]:
    # b_{j+1} - b_j in {0, 1} with b_{mult+1} := top; yields (b, top - b_1).
    for steps in product((0, 1), repeat=mult):
        b = [0] * mult
        cur = top
        for j in range(mult - 1, -1, -1):
            cur -= steps[j]
            b[j] = cur
        if b[0] > floor:
            yield tuple(b), top - b[0]


def kostka_terms(a: Sequence[int]) -> list[KostkaTerm]:
    """
    Signed words b with x_{a1}...x_{ak} = sum sign(b) * slide(b).

    a is cut into blocks of equal values M_1 < ... < M_p; each block is
    replaced by a run ending at most one below the next run's value, lying
    strictly above the previous block's value, and contributing (-1)^(M_i - b_1).
    """
    _check_word(a)
    if not is_winc(a):
        raise ValueError(f"kostka_terms needs a weakly increasing word, got {tuple(a)}")
    blocks = [(value, len(list(run))) for value, run in groupby(a)]
    options: list[list[tuple[Word, int]]] = []
    floor = 0
    for value, mult in blocks:
        options.append(list(_block_choices(mult, value, floor)))
        floor = value
    terms = []
    for combo in product(*options):
        word: Word = tuple(v for block, _ in combo for v in block)
        n = sum(n for _, n in combo)
        terms.append(KostkaTerm(word, -1 if n % 2 else 1))
    return sorted(terms)


def winc_words(max_entry: int, max_len: int, min_len: int = 0) -> Iterator[Word]:
    """All weakly increasing words with entries in 1..max_entry."""
    from itertools import combinations_with_replacement
    for k in range(min_len, max_len + 1):
        yield from combinations_with_replacement(range(1, max_entry + 1), k)


def winc_code(a: Sequence[int]) -> tuple[int, ...]:
    """c_i = number of entries equal to i."""
    code = [0] * max(a, default=0)
    for v in a:
        code[v - 1] += 1
    return tuple(code)


def parse_word(text: str) -> Word:
    s = text.strip()
    if not s:
        return ()
    if not re.fullmatch(r"\d+(\s*,\s*\d+)*", s):
        raise ValueError(f"cannot parse word {text!r}")
    word = tuple(int(v) for v in s.split(","))
    _check_word(word)
    return word
