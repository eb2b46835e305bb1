"""Exact sparse Laurent polynomials in one variable q, with integer coefficients.

This is the universal value type of the package: q-integers, q-factorials,
q-binomials and every statistic distribution are LaurentPoly values.
Coefficients are Python ints, so arithmetic can never overflow; exponents may
be negative.
"""
from __future__ import annotations

import functools
from typing import Iterable, Iterator, Mapping


class NotDivisible(ArithmeticError):
    """Raised by exact_div when no exact quotient exists."""


class LaurentPoly:
    """An immutable Laurent polynomial, stored as a sparse exponent->coefficient map.

    The representation is canonical: no zero coefficient is ever stored, so two
    polynomials are equal iff their term maps are equal.

    >>> q = LaurentPoly.q()
    >>> (1 + q) * (1 + q)
    LaurentPoly('1 + 2q + q^2')
    >>> q ** -1 * q
    LaurentPoly('1')
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        object.__setattr__(self, "_terms", {e: c for e, c in acc.items() if c != 0})

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return _ZERO

    @classmethod
    def one(cls) -> LaurentPoly:
        return _ONE

    @classmethod
    def q(cls) -> LaurentPoly:
        return _Q

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> LaurentPoly:
        """Build from [exponent, coefficient] pairs (the serialization format)."""
        return cls((int(e), int(c)) for e, c in pairs)

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> LaurentPoly:
        """Build a distribution polynomial from a value->multiplicity map."""
        return cls(counts)

    # -- basic structure ---------------------------------------------------

    def __setattr__(self, name, value):  # pragma: no cover - guards immutability
        raise AttributeError("LaurentPoly is immutable")

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._terms.items()))

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def degree(self) -> int:
        """Largest exponent. Raises on the zero polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def valuation(self) -> int:
        """Smallest exponent. Raises on the zero polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def to_pairs(self) -> list[list[int]]:
        """Ascending [exponent, coefficient] list, the documented wire format."""
        return [[e, self._terms[e]] for e in sorted(self._terms)]

    def evaluate(self, x: int) -> int:
        """Exact integer evaluation; x must be nonzero if negative exponents occur."""
        total = 0
        for e, c in self._terms.items():
            if e >= 0:
                total += c * x**e
            else:
                num = c
                den = x ** (-e)
                if num % den:
                    raise ValueError("evaluation is not an integer")
                total += num // den
        return total

    def coefficient_sum(self) -> int:
        """The value at q=1, i.e. the cardinality behind a distribution."""
        return sum(self._terms.values())

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other: int | LaurentPoly) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other: int | LaurentPoly) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in o._terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            elif e in terms:
                del terms[e]
        out = LaurentPoly()
        object.__setattr__(out, "_terms", terms)
        return out

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        out = LaurentPoly()
        object.__setattr__(out, "_terms", {e: -c for e, c in self._terms.items()})
        return out

    def __sub__(self, other: int | LaurentPoly) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: int | LaurentPoly) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: int | LaurentPoly) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = e1 + e2
                v = acc.get(e, 0) + c1 * c2
                if v:
                    acc[e] = v
                elif e in acc:
                    del acc[e]
        out = LaurentPoly()
        object.__setattr__(out, "_terms", acc)
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._terms) == 1:
                ((e, c),) = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly({e * n: c if n % 2 else 1})
            raise ValueError("cannot invert a non-unit Laurent polynomial")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, e: int) -> LaurentPoly:
        """Multiply by q^e."""
        out = LaurentPoly()
        object.__setattr__(out, "_terms", {exp + e: c for exp, c in self._terms.items()})
        return out

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Exact quotient self/other; raises NotDivisible if none exists."""
        return exact_div(self, other)

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other) if isinstance(other, (int, LaurentPoly)) else None
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e in sorted(self._terms):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


_ZERO = LaurentPoly()
_ONE = LaurentPoly({0: 1})
_Q = LaurentPoly({1: 1})


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return c with b*c == a exactly, over the integers.

    Divisibility failures raise NotDivisible: the q-number constructions used
    here (e.g. extracting a q-Stirling polynomial from its defining alternating
    sum) are guaranteed divisible, so NotDivisible always signals a bug in the
    caller rather than a legitimate outcome.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return _ZERO
    va, vb = a.valuation(), b.valuation()
    da, db = a.degree(), b.degree()
    if da - va < db - vb:
        raise NotDivisible(f"({a}) is not divisible by ({b})")
    rem = [a.coeff(va + i) for i in range(da - va + 1)]
    den = [b.coeff(vb + i) for i in range(db - vb + 1)]
    lead = den[-1]
    qlen = len(rem) - len(den) + 1
    quot = [0] * qlen
    for j in range(qlen - 1, -1, -1):
        top = rem[j + len(den) - 1]
        if top % lead:
            raise NotDivisible(f"({a}) is not divisible by ({b})")
        quot[j] = top // lead
        if quot[j]:
            for i, dc in enumerate(den):
                rem[j + i] -= quot[j] * dc
    if any(rem):
        raise NotDivisible(f"({a}) is not divisible by ({b})")
    return LaurentPoly({va - vb + i: c for i, c in enumerate(quot)})


def invert_q(p: LaurentPoly) -> LaurentPoly:
    """Substitute q -> 1/q: each term (e, c) becomes (-e, c)."""
    out = LaurentPoly()
    object.__setattr__(out, "_terms", {-e: c for e, c in p._terms.items()})
    return out


@functools.lru_cache(maxsize=None)
def q_int(k: int) -> LaurentPoly:
    """[k] = 1 + q + ... + q^(k-1); [0] = 0."""
    if k < 0:
        raise ValueError("q_int requires k >= 0")
    return LaurentPoly({e: 1 for e in range(k)})


@functools.lru_cache(maxsize=None)
def q_fact(k: int) -> LaurentPoly:
    """[k]! = [k][k-1]...[1]; [0]! = 1."""
    if k < 0:
        raise ValueError("q_fact requires k >= 0")
    if k == 0:
        return _ONE
    return q_fact(k - 1) * q_int(k)


@functools.lru_cache(maxsize=None)
def q_binom(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial [n]!/([k]![n-k]!); zero when k < 0 or k > n."""
    if n < 0:
        raise ValueError("q_binom requires n >= 0")
    if k < 0 or k > n:
        return _ZERO
    return exact_div(q_fact(n), q_fact(k) * q_fact(n - k))
