"""
Exact sparse polynomials in Z[x1, x2, ...].

A monomial is stored as a tuple of exponents ``(e1, e2, ..., en)`` with no
trailing zeros, so ``()`` is the monomial 1 and ``(0, 2)`` is ``x2^2``.
A polynomial maps monomials to nonzero Python ints (arbitrary precision).

>>> f = parse("x2 + x1")
>>> str(f)
'x1 + x2'
>>> str(f * f)
'x1^2 + 2*x1*x2 + x2^2'
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Callable, Iterable, Iterator, Mapping, Optional

__all__ = [
    "Monomial", "Polynomial", "NotDivisible", "ParseError",
    "x", "add", "mul", "exact_divide", "substitute", "constant_term",
    "parse", "to_text", "monomial_degree", "monomial_key",
]

Monomial = tuple[int, ...]


class NotDivisible(ArithmeticError):
    """Raised by exact_divide when no quotient exists over Z."""


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _trim(exps: Iterable[int]) -> Monomial:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def monomial_degree(mono: Monomial) -> int:
    return sum(mono)


def monomial_key(mono: Monomial) -> tuple[int, Monomial]:
    # Trimmed tuples compare like zero-padded ones, so plain tuple order is
    # lexicographic order on exponent sequences.
    return (sum(mono), mono)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, e in enumerate(b):
        out[k] += e
    return tuple(out)


def _mono_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """a / b if b divides a, else None."""
    if len(b) > len(a):
        return None
    out = list(a)
    for k, e in enumerate(b):
        out[k] -= e
        if out[k] < 0:
            return None
    return _trim(out)


class Polynomial:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    key = _trim(mono)
                    c = clean.get(key, 0) + c
                    if c:
                        clean[key] = c
                    else:
                        clean.pop(key, None)
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> Polynomial:
        # Caller guarantees canonical keys and nonzero coefficients.
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> Polynomial:
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, i: int) -> Polynomial:
        if i < 1:
            raise ValueError(f"variable index must be >= 1, got {i}")
        return cls._raw({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> Polynomial:
        return cls({tuple(exps): coeff})

    @classmethod
    def from_word(cls, word: Iterable[int]) -> Polynomial:
        """The monomial x_{a1} x_{a2} ... x_{ak}."""
        exps: list[int] = []
        for a in word:
            if a < 1:
                raise ValueError(f"variable index must be >= 1, got {a}")
            if len(exps) < a:
                exps.extend([0] * (a - len(exps)))
            exps[a - 1] += 1
        return cls._raw({tuple(exps): 1})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[tuple[Monomial, int]]:
        """Terms in canonical order: degree descending, then lex descending."""
        for mono in sorted(self._terms, key=monomial_key, reverse=True):
            yield mono, self._terms[mono]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono: Iterable[int]) -> int:
        return self._terms.get(_trim(mono), 0)

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def support_bound(self) -> int:
        """Smallest n with f in Z[x1..xn]; 0 for constants."""
        return max((len(m) for m in self._terms), default=0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def homogeneous_components(self) -> dict[int, Polynomial]:
        parts: dict[int, dict[Monomial, int]] = {}
        for mono, c in self._terms.items():
            parts.setdefault(sum(mono), {})[mono] = c
        return {d: Polynomial._raw(t) for d, t in sorted(parts.items())}

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(self._terms) < len(other._terms):
            small, out = self._terms, dict(other._terms)
        else:
            small, out = other._terms, dict(self._terms)
        for mono, c in small.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                del out[mono]
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return Polynomial._raw({m: c * other for m, c in self._terms.items()})
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                key = _mono_mul(m1, m2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Polynomial({to_text(self)!r})"


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial.const(value)
    return NotImplemented


ZERO = Polynomial._raw({})
ONE = Polynomial._raw({(): 1})


def x(i: int) -> Polynomial:
    """The variable x_i."""
    return Polynomial.var(i)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def constant_term(f: Polynomial) -> int:
    return f.constant_term()


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """
    Return q with q*g == f, by long division under the graded-lex order.

    If f = q*g then the leading term of f is the product of the leading terms
    of q and g, so a leading term of the remainder that g's leading term does
    not divide proves no quotient exists.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if len(g) == 1:
        (gm, gc), = g._terms.items()
        out: dict[Monomial, int] = {}
        for mono, c in f._terms.items():
            qm = _mono_div(mono, gm)
            if qm is None or c % gc:
                raise NotDivisible(f"{f} is not divisible by {g}")
            out[qm] = c // gc
        return Polynomial._raw(out)

    lead_m, lead_c = next(g.items())
    rest = [(m, c) for m, c in g._terms.items() if m != lead_m]
    rem = dict(f._terms)
    quot: dict[Monomial, int] = {}
    while rem:
        rm = max(rem, key=monomial_key)
        rc = rem[rm]
        qm = _mono_div(rm, lead_m)
        if qm is None or rc % lead_c:
            raise NotDivisible(f"{f} is not divisible by {g}")
        qc = rc // lead_c
        quot[qm] = qc
        del rem[rm]
        for m, c in rest:
            key = _mono_mul(qm, m)
            s = rem.get(key, 0) - qc * c
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
    return Polynomial._raw(quot)


def substitute(f: Polynomial, slot_map: Callable[[int], Optional[int]]) -> Polynomial:
    """
    Replace each x_j by x_{slot_map(j)}, or by 0 where slot_map(j) is None.

    slot_map is only consulted for indices that occur in f.
    """
    cache: dict[int, Optional[int]] = {}
    out: dict[Monomial, int] = {}
    for mono, c in f._terms.items():
        new: dict[int, int] = {}
        for j, e in enumerate(mono, start=1):
            if not e:
                continue
            if j not in cache:
                cache[j] = slot_map(j)
            t = cache[j]
            if t is None:
                break
            new[t] = new.get(t, 0) + e
        else:
            exps = [0] * max(new, default=0)
            for t, e in new.items():
                exps[t - 1] = e
            key = tuple(exps)
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                del out[key]
    return Polynomial._raw(out)


# -- text form --------------------------------------------------------------

def _mono_text(mono: Monomial) -> str:
    parts = []
    for i, e in enumerate(mono, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def to_text(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    out = []
    for k, (mono, c) in enumerate(f.items()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = _mono_text(mono)
        if not body:
            body = str(mag)
        elif mag != 1:
            body = f"{mag}*{body}"
        if k == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected integer", start)
        return int(self.text[start:self.pos])

    def factor(self, exps: dict[int, int]) -> None:
        if self.peek() != "x":
            raise ParseError("expected variable", self.pos)
        self.pos += 1
        at = self.pos
        if not self.text[self.pos:self.pos + 1].isdigit():
            raise ParseError("expected variable index", at)
        index = self.integer()
        if index < 1:
            raise ParseError("variable index must be >= 1", at)
        power = 1
        if self.peek() == "^":
            self.pos += 1
            at = self.pos
            power = self.integer()
            if power < 1:
                raise ParseError("exponent must be >= 1", at)
        exps[index] = exps.get(index, 0) + power

    def term(self) -> tuple[Monomial, int]:
        coeff = 1
        exps: dict[int, int] = {}
        ch = self.peek()
        if ch.isdigit():
            coeff = self.integer()
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                self.factor(exps)
            elif ch == "x":
                self.factor(exps)
            else:
                return (), coeff
        else:
            self.factor(exps)
        while self.peek() == "*":
            self.pos += 1
            self.factor(exps)
        mono = [0] * max(exps, default=0)
        for i, e in exps.items():
            mono[i - 1] = e
        return tuple(mono), coeff

    def poly(self) -> Polynomial:
        terms: dict[Monomial, int] = {}
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            mono, c = self.term()
            terms[mono] = terms.get(mono, 0) + sign * c
            ch = self.peek()
            if not ch:
                break
            if ch not in "+-":
                raise ParseError(f"unexpected character {ch!r}", self.pos)
            sign = -1 if ch == "-" else 1
            self.pos += 1
        return Polynomial(terms)


def parse(text: str) -> Polynomial:
    """Parse e.g. ``"x1^2*x2 - 3*x3 + 4"``; raises ParseError with a position."""
    if not text.strip():
        raise ParseError("empty input", 0)
    return _Parser(text).poly()
