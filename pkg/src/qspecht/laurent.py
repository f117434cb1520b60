"""Exact integer Laurent polynomials in one variable q.

Values are immutable and kept in canonical form (no zero coefficients), so
structural equality is mathematical equality and instances can be dict keys.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for exponent, coefficient in items:
            if not isinstance(exponent, int) or not isinstance(coefficient, int):
                raise ValueError("exponents and coefficients must be integers")
            if coefficient:
                clean[exponent] = clean.get(exponent, 0) + coefficient
                if not clean[exponent]:
                    del clean[exponent]
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "LaurentPoly":
        return cls((int(e), int(c)) for e, c in pairs)

    def to_pairs(self) -> list[list[int]]:
        """JSON form: [exponent, coefficient] pairs, ascending by exponent."""
        return [[e, self._terms[e]] for e in sorted(self._terms)]

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    def min_exponent(self) -> int:
        return min(self._terms)

    def max_exponent(self) -> int:
        return max(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            new = terms.get(e, 0) + c
            if new:
                terms[e] = new
            elif e in terms:
                del terms[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = terms
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                new = terms.get(e, 0) + c1 * c2
                if new:
                    terms[e] = new
                elif e in terms:
                    del terms[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = terms
        out._hash = None
        return out

    __rmul__ = __mul__

    def bar(self) -> "LaurentPoly":
        """The involution q -> q^-1 (negate all exponents)."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    def parity_project(self) -> "ParityElem":
        """Image in the rank-2 parity ring: sums of even- and odd-exponent coefficients."""
        even = sum(c for e, c in self._terms.items() if e % 2 == 0)
        odd = sum(c for e, c in self._terms.items() if e % 2)
        return ParityElem(even, odd)

    def is_pure_parity(self, parity: int) -> bool:
        """True if every exponent is congruent to ``parity`` mod 2 and every
        coefficient is nonnegative."""
        return all(e % 2 == parity % 2 and c > 0 for e, c in self._terms.items())

    def is_bar_symmetric(self) -> bool:
        return all(self._terms.get(-e, 0) == c for e, c in self._terms.items())

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError if the quotient is not integral."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return ZERO
        smin, smax = self.min_exponent(), self.max_exponent()
        dmin, dmax = divisor.min_exponent(), divisor.max_exponent()
        num = [self.coefficient(e) for e in range(smin, smax + 1)]
        den = [divisor.coefficient(e) for e in range(dmin, dmax + 1)]
        qlen = len(num) - len(den) + 1
        if qlen <= 0:
            raise ValueError(f"{self} is not divisible by {divisor}")
        lead = den[-1]
        quot = [0] * qlen
        for k in range(qlen - 1, -1, -1):
            c = num[k + len(den) - 1]
            if c % lead:
                raise ValueError(f"{self} is not divisible by {divisor}")
            f = c // lead
            quot[k] = f
            if f:
                for j, dj in enumerate(den):
                    num[k + j] -= f * dj
        if any(num):
            raise ValueError(f"{self} is not divisible by {divisor}")
        return LaurentPoly({k + smin - dmin: c for k, c in enumerate(quot)})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for e in sorted(self._terms):
            c = self._terms[e]
            if e == 0:
                body = str(c)
            else:
                var = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    body = var
                elif c == -1:
                    body = f"-{var}"
                else:
                    body = f"{c}{var}"
            chunks.append(body)
        return "+".join(chunks).replace("+-", "-")

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_pairs()!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly({1: 1})


def q_power(exponent: int) -> LaurentPoly:
    return LaurentPoly({exponent: 1})


def q_int(n: int) -> LaurentPoly:
    """Balanced q-integer: q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n < 0:
        raise ValueError("q-integers are defined for nonnegative n")
    return LaurentPoly({n - 1 - 2 * j: 1 for j in range(n)})


def q_factorial(n: int) -> LaurentPoly:
    out = ONE
    for j in range(2, n + 1):
        out = out * q_int(j)
    return out


@dataclass(frozen=True)
class ParityElem:
    """Element of the parity ring Z·1 + Z·u with u^2 = 1."""

    even: int
    odd: int

    def __add__(self, other: "ParityElem") -> "ParityElem":
        return ParityElem(self.even + other.even, self.odd + other.odd)

    def __mul__(self, other: "ParityElem") -> "ParityElem":
        return ParityElem(
            self.even * other.even + self.odd * other.odd,
            self.even * other.odd + self.odd * other.even,
        )
