"""
Indexed (m+1)-ary forests, i.e. elements of the m-Thompson monoid.

A forest is stored by its code: c_i counts the internal nodes whose
leftmost-leaf descent ends at leaf i.  Trees are rebuilt from the code when
needed.  In the tree form a leaf is ``()`` and an internal node is the tuple
of its m+1 children, so ``((), ())`` is the single binary node.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

__all__ = [
    "IndexedForest", "NotTerminal", "Tree", "forest_from_code", "forest_code",
    "forest_qdes", "forest_trim", "trimming_sequences", "word_to_forest",
    "forest_product", "forests_of_size", "parse_forest",
]

Tree = tuple


class NotTerminal(ValueError):
    """Trim requested at an index with no terminal node."""


def _trim_zeros(code: Iterable[int]) -> tuple[int, ...]:
    out = list(code)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _size(t: Tree) -> int:
    return 0 if not t else 1 + sum(_size(ch) for ch in t)


def _build_trees(code: tuple[int, ...], m: int) -> list[Tree]:
    # Scan leaves right to left.  The c_i nodes above leaf i form a chain of
    # first children; each one takes the next m maximal subtrees on its right.
    width = len(code) + m * sum(code) + 1
    stack: list[Tree] = []
    for leaf in range(width, 0, -1):
        t: Tree = ()
        for _ in range(code[leaf - 1] if leaf <= len(code) else 0):
            kids = [t]
            for _ in range(m):
                kids.append(stack.pop())
            t = tuple(kids)
        stack.append(t)
    roots = stack[::-1]
    while roots and roots[-1] == ():
        roots.pop()
    return roots


def _code_of_trees(roots: Sequence[Tree]) -> tuple[int, ...]:
    counts: dict[int, int] = {}
    leaf = 0

    def walk(t: Tree) -> int:
        # returns the label of the leftmost leaf under t
        nonlocal leaf
        if not t:
            leaf += 1
            return leaf
        first = walk(t[0])
        for ch in t[1:]:
            walk(ch)
        counts[first] = counts.get(first, 0) + 1
        return first

    for t in roots:
        walk(t)
    return _trim_zeros(counts.get(i, 0) for i in range(1, max(counts, default=0) + 1))


def _terminal_labels(roots: Sequence[Tree]) -> list[int]:
    labels = []
    leaf = 0

    def walk(t: Tree) -> None:
        nonlocal leaf
        if not t:
            leaf += 1
            return
        if all(ch == () for ch in t):
            labels.append(leaf + 1)
        for ch in t:
            walk(ch)

    for t in roots:
        walk(t)
    return labels


@dataclass(frozen=True, order=True)
class IndexedForest:
    code: tuple[int, ...]
    m: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if any(c < 0 for c in self.code):
            raise ValueError(f"code entries must be nonnegative: {self.code}")
        object.__setattr__(self, "code", _trim_zeros(self.code))

    @classmethod
    def from_trees(cls, roots: Sequence[Tree], m: int = 1) -> IndexedForest:
        for t in roots:
            _check_arity(t, m + 1)
        return cls(_code_of_trees(roots), m)

    @property
    def arity(self) -> int:
        return self.m + 1

    def size(self) -> int:
        return sum(self.code)

    def is_empty(self) -> bool:
        return not self.code

    def trees(self) -> list[Tree]:
        return _build_trees(self.code, self.m)

    def qdes(self) -> tuple[int, ...]:
        return tuple(sorted(_terminal_labels(self.trees())))

    def trim(self, i: int) -> IndexedForest:
        roots = self.trees()
        leaf = 0
        done = False

        def walk(t: Tree) -> Tree:
            nonlocal leaf, done
            if not t:
                leaf += 1
                return t
            if not done and leaf + 1 == i and all(ch == () for ch in t):
                done = True
                leaf += len(t)
                return ()
            return tuple(walk(ch) for ch in t)

        new_roots = [walk(t) for t in roots]
        if not done:
            raise NotTerminal(f"{i} is not in qdes of {self}")
        return IndexedForest.from_trees(new_roots, self.m)

    def graft(self, i: int) -> IndexedForest:
        """self * (generator i): hang a new node on leaf i."""
        if i < 1:
            raise ValueError(f"leaf index must be >= 1, got {i}")
        node = ((),) * (self.m + 1)
        roots = self.trees()
        for k, t in enumerate(roots):
            width = self.m * _size(t) + 1
            if i <= width:
                roots[k] = _graft_in(t, i, node)
                return IndexedForest.from_trees(roots, self.m)
            i -= width
        roots.extend([()] * (i - 1))
        roots.append(node)
        return IndexedForest.from_trees(roots, self.m)

    def __str__(self) -> str:
        return "c=" + ",".join(map(str, self.code))


def _check_arity(t: Tree, arity: int) -> None:
    if t:
        if len(t) != arity:
            raise ValueError(f"node with {len(t)} children in an {arity}-ary forest")
        for ch in t:
            _check_arity(ch, arity)


def _graft_in(t: Tree, i: int, node: Tree) -> Tree:
    if not t:
        return node
    kids = list(t)
    for k, ch in enumerate(kids):
        width = (len(t) - 1) * _size(ch) + 1
        if i <= width:
            kids[k] = _graft_in(ch, i, node)
            return tuple(kids)
        i -= width
    raise AssertionError("leaf index outside tree")


def forest_from_code(code: Sequence[int], m: int = 1) -> IndexedForest:
    return IndexedForest(tuple(code), m)


def forest_code(forest: IndexedForest) -> tuple[int, ...]:
    return _code_of_trees(forest.trees())


def forest_qdes(forest: IndexedForest) -> tuple[int, ...]:
    return forest.qdes()


def forest_trim(forest: IndexedForest, i: int) -> IndexedForest:
    return forest.trim(i)


@lru_cache(maxsize=None)
def trimming_sequences(forest: IndexedForest) -> tuple[tuple[int, ...], ...]:
    """Words (i1..ik) such that trimming ik, then ..., then i1 empties the forest."""
    if forest.is_empty():
        return ((),)
    words = []
    for i in forest.qdes():
        words.extend(prefix + (i,) for prefix in trimming_sequences(forest.trim(i)))
    return tuple(sorted(words))


def word_to_forest(word: Iterable[int], m: int = 1) -> IndexedForest:
    forest = IndexedForest((), m)
    for i in word:
        forest = forest.graft(i)
    return forest


def forest_product(f: IndexedForest, g: IndexedForest) -> IndexedForest:
    """Identify the k-th leaf of f with the k-th root of g."""
    if f.m != g.m:
        raise ValueError("forests of different arity")
    g_roots = g.trees()
    pos = 0

    def next_root() -> Tree:
        nonlocal pos
        pos += 1
        return g_roots[pos - 1] if pos <= len(g_roots) else ()

    def walk(t: Tree) -> Tree:
        if not t:
            return next_root()
        return tuple(walk(ch) for ch in t)

    roots = [walk(t) for t in f.trees()]
    roots.extend(g_roots[pos:])
    return IndexedForest.from_trees(roots, f.m)


def forests_of_size(size: int, m: int = 1, max_index: int = 4) -> Iterator[IndexedForest]:
    """All forests of the given size whose code is supported on 1..max_index."""
    for code in product(range(size + 1), repeat=max_index):
        if sum(code) == size:
            yield IndexedForest(code, m)


def parse_forest(text: str, m: int = 1) -> IndexedForest:
    """Parse ``"c=0,2,0,1"`` (the ``c=`` prefix is optional)."""
    s = text.strip()
    if s.startswith("c="):
        s = s[2:]
    if not re.fullmatch(r"\s*(\d+\s*(,\s*\d+\s*)*)?", s):
        raise ValueError(f"cannot parse forest code {text!r}")
    return IndexedForest(tuple(int(v) for v in s.split(",")) if s.strip() else (), m)
