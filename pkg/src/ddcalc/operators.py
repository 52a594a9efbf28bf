"""
Polynomial endomorphisms of the divided-difference calculus.

Multiplicities are positive ints or ``INF`` (``math.inf``).  Index
conventions follow the usual one-based variable names: ``bs_map(i, 1, f)``
is ``f(x1, ..., x_{i-1}, 0, x_i, x_{i+1}, ...)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

from .polyring import ONE, ZERO, Polynomial, exact_divide, substitute, x

__all__ = [
    "INF", "Multiplicity", "ConstantTermNonzero", "OperatorFamily",
    "check_multiplicity", "swap", "partial", "bs_map", "truncate", "qs_dd",
    "slide_extractor", "z_op", "schubert_creator", "forest_creator",
    "slide_creator", "slide_creator_compositional", "apply_word",
    "PARTIAL", "QS_DD", "SLIDE_EXTRACTOR", "SCHUBERT_CREATOR",
    "FOREST_CREATOR", "SLIDE_CREATOR",
]

INF = math.inf
Multiplicity = Union[int, float]


class ConstantTermNonzero(ValueError):
    pass


def check_multiplicity(m: Multiplicity, allow_inf: bool = True) -> Multiplicity:
    if m == INF and allow_inf:
        return m
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ValueError(f"multiplicity must be a positive integer{' or INF' if allow_inf else ''}, got {m!r}")
    return m


def _check_index(i: int) -> None:
    if i < 1:
        raise ValueError(f"operator index must be >= 1, got {i}")


def swap(i: int, f: Polynomial) -> Polynomial:
    """s_i f: exchange x_i and x_{i+1}."""
    return substitute(f, lambda j: i + 1 if j == i else i if j == i + 1 else j)


def partial(i: int, f: Polynomial) -> Polynomial:
    """Divided difference (f - s_i f) / (x_i - x_{i+1})."""
    _check_index(i)
    return exact_divide(f - swap(i, f), x(i) - x(i + 1))


def bs_map(i: int, m: Multiplicity, f: Polynomial) -> Polynomial:
    """
    Insert m zero arguments before slot i.

    For finite m, x_j is fixed for j < i, killed for i <= j < i+m and sent to
    x_{j-m} for j >= i+m.  For m = INF every x_j with j >= i is killed.
    """
    _check_index(i)
    check_multiplicity(m)
    if m == INF:
        return substitute(f, lambda j: j if j < i else None)
    return substitute(f, lambda j: j if j < i else None if j < i + m else j - m)


def truncate(i: int, f: Polynomial) -> Polynomial:
    """R_i^INF: f(x1, ..., x_{i-1}, 0, 0, ...)."""
    return bs_map(i, INF, f)


def qs_dd(i: int, m: int, f: Polynomial) -> Polynomial:
    """m-quasisymmetric divided difference (R_{i+1}^m f - R_i^m f) / x_i."""
    check_multiplicity(m, allow_inf=False)
    return exact_divide(bs_map(i + 1, m, f) - bs_map(i, m, f), x(i))


def slide_extractor(i: int, m: Multiplicity, f: Polynomial) -> Polynomial:
    """D_i^m = R_{i+1}^INF T_i^m, with the monomial rule for m = INF."""
    _check_index(i)
    check_multiplicity(m)
    if m != INF:
        return truncate(i + 1, qs_dd(i, m, f))
    out: dict[tuple[int, ...], int] = {}
    for mono, c in f.terms.items():
        if len(mono) == i:
            lowered = mono[:-1] + (mono[-1] - 1,)
            out[lowered] = c
    return Polynomial(out)


def z_op(m: int, f: Polynomial) -> Polynomial:
    """Z^(m) = id + R_1^m + R_1^{2m} + ... on polynomials without constant term."""
    check_multiplicity(m, allow_inf=False)
    if f.constant_term():
        raise ConstantTermNonzero(f"Z needs zero constant term, got {f}")
    total, g = ZERO, f
    while g:
        total = total + g
        g = bs_map(1, m, g)
    return total


def schubert_creator(i: int, f: Polynomial) -> Polynomial:
    """Z x_i R_i."""
    return z_op(1, x(i) * bs_map(i, 1, f))


def forest_creator(i: int, m: int, f: Polynomial) -> Polynomial:
    """Z^(m) x_i."""
    _check_index(i)
    return z_op(m, x(i) * f)


def slide_creator(i: int, m: Multiplicity, f: Polynomial) -> Polynomial:
    """
    B_i^m on monomials of Z[x1..xi], zero on monomials involving x_{i+1}, ....

    With j the largest index below i occurring in the monomial and p the
    exponent of x_i, the x_i^p factor is replaced by the sum of
    x_{i-rm}^(p+1) over r >= 0 with i - r*m > j (only r = 0 when m is INF).
    """
    _check_index(i)
    check_multiplicity(m)
    out: dict[tuple[int, ...], int] = {}
    for mono, c in f.terms.items():
        if len(mono) > i:
            continue
        p = mono[i - 1] if len(mono) == i else 0
        head = mono[:i - 1] if len(mono) == i else mono
        j = len(head)
        while j and head[j - 1] == 0:
            j -= 1
        head = head[:j]
        if m == INF:
            targets = [i]
        else:
            targets = range(i, j, -m)
        for k in targets:
            key = head + (0,) * (k - 1 - j) + (p + 1,)
            out[key] = out.get(key, 0) + c
    return Polynomial(out)


def slide_creator_compositional(i: int, f: Polynomial) -> Polynomial:
    """B_i as the sum over k <= i of x_k R_k^{i-k} R_{i+1}^INF (m = 1 only)."""
    g = truncate(i + 1, f)
    total = ZERO
    for k in range(1, i + 1):
        total = total + x(k) * (bs_map(k, i - k, g) if i > k else g)
    return total


@dataclass(frozen=True)
class OperatorFamily:
    """
    An indexed family i -> (f -> f), optionally parametrised by a multiplicity.

    ``family.at(i)`` returns the operator for index i, with the family's
    multiplicity baked in, so harness code can quantify over families
    without knowing how each one is parametrised.
    """
    name: str
    fn: Callable[..., Polynomial]
    m: Multiplicity | None = None

    def at(self, i: int) -> Callable[[Polynomial], Polynomial]:
        if self.m is None:
            return lambda f: self.fn(i, f)
        return lambda f: self.fn(i, self.m, f)

    def __call__(self, i: int, f: Polynomial) -> Polynomial:
        return self.at(i)(f)

    def with_m(self, m: Multiplicity) -> OperatorFamily:
        return OperatorFamily(f"{self.name}^{m}", self.fn, m)


PARTIAL = OperatorFamily("partial", partial)
QS_DD = OperatorFamily("T", qs_dd, 1)
SLIDE_EXTRACTOR = OperatorFamily("D", slide_extractor, 1)
SCHUBERT_CREATOR = OperatorFamily("ZxR", schubert_creator)
FOREST_CREATOR = OperatorFamily("Zx", forest_creator, 1)
SLIDE_CREATOR = OperatorFamily("B", slide_creator, 1)


def apply_word(family: OperatorFamily, word, f: Polynomial = ONE) -> Polynomial:
    """Apply family[w1] first, then family[w2], ...: Y_{wk} ... Y_{w1} f."""
    for i in word:
        f = family(i, f)
    return f
