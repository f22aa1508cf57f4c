"""
Integer Laurent polynomials, cyclotomic polynomials and the Alexander
polynomials of T(2, n) and of the pretzel-type knots K_n.

A polynomial is stored sparsely as a sorted tuple of ``(exponent, coefficient)``
pairs with no zero coefficients.  Python integers are arbitrary precision, so
all arithmetic here is exact.

>>> torus2_alexander(3)
IntLaurentPoly('t^2 - t + 1')
>>> homology_order(pretzel_alexander(15))
225
"""
from __future__ import annotations

import dataclasses
import functools
import json
from collections.abc import Iterable, Mapping


@dataclasses.dataclass(frozen=True, init=False)
class IntLaurentPoly:
    """
    An integer Laurent polynomial in ``t``.

    >>> IntLaurentPoly({2: 1, 1: -1, 0: 1})
    IntLaurentPoly('t^2 - t + 1')
    >>> IntLaurentPoly({-1: 1, 0: 0})
    IntLaurentPoly('t^-1')
    """
    terms: tuple[tuple[int, int], ...]

    def __init__(self, coefficients: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(coefficients, Mapping):
            items = coefficients.items()
        else:
            items = coefficients
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError(f"exponents and coefficients must be int, got ({e!r}, {c!r})")
            acc[e] = acc.get(e, 0) + c
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> IntLaurentPoly:
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c: int) -> IntLaurentPoly:
        return cls({0: c})

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self.terms)

    def coeff(self, exponent: int) -> int:
        return self.coefficients.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return self.terms[0][0]

    @property
    def degree(self) -> int:
        """Largest exponent present.  Undefined for the zero polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return self.terms[-1][0]

    @property
    def span(self) -> int:
        return self.degree - self.min_degree

    def leading_coefficient(self) -> int:
        return self.terms[-1][1]

    def normalized(self) -> IntLaurentPoly:
        """
        Shift so the lowest exponent is 0.

        >>> IntLaurentPoly({-1: 1, 1: 1}).normalized()
        IntLaurentPoly('t^2 + 1')
        """
        if not self.terms:
            return self
        return self.shift(-self.min_degree)

    def shift(self, k: int) -> IntLaurentPoly:
        return IntLaurentPoly((e + k, c) for e, c in self.terms)

    def equivalent(self, other: IntLaurentPoly) -> bool:
        """Equality up to multiplication by a unit ``±t^k``."""
        a, b = self.normalized(), other.normalized()
        return a == b or a == -b

    def is_symmetric(self) -> bool:
        """True when the coefficient list reads the same in both directions."""
        if not self.terms:
            return True
        lo, hi = self.min_degree, self.degree
        c = self.coefficients
        return all(c.get(lo + hi - e, 0) == v for e, v in c.items())

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        """
        Evaluate at ``x``.  Negative exponents need an invertible ``x``; for
        ``x = ±1`` the result stays an ``int``.
        """
        total = 0
        for e, c in self.terms:
            if e >= 0:
                total += c * x**e
            elif x in (1, -1):
                total += c * x ** (-e)
            else:
                total += c / x ** (-e)
        return total

    def __add__(self, other) -> IntLaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return IntLaurentPoly(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> IntLaurentPoly:
        return IntLaurentPoly((e, -c) for e, c in self.terms)

    def __sub__(self, other) -> IntLaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> IntLaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> IntLaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return IntLaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntLaurentPoly:
        if n < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        result = IntLaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, divisor: IntLaurentPoly) -> tuple[IntLaurentPoly, IntLaurentPoly]:
        """
        Long division over the integers after shifting both operands to start
        at ``t^0``.  The remainder is returned in the original exponent frame.
        Raises ``ArithmeticError`` when a quotient coefficient is not integral.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self, self
        offset = self.min_degree - divisor.min_degree
        num = dict(self.normalized().terms)
        den = divisor.normalized().terms
        den_deg, lead = den[-1]
        quot: dict[int, int] = {}
        while num and max(num) >= den_deg:
            top = max(num)
            q, r = divmod(num[top], lead)
            if r:
                raise ArithmeticError(f"coefficient {num[top]} not divisible by {lead}")
            k = top - den_deg
            quot[k] = q
            for e, c in den:
                v = num.get(e + k, 0) - q * c
                if v:
                    num[e + k] = v
                else:
                    num.pop(e + k, None)
        return IntLaurentPoly(quot).shift(offset), IntLaurentPoly(num).shift(self.min_degree)

    def exact_div(self, divisor: IntLaurentPoly) -> IntLaurentPoly:
        """
        Quotient of an exact division; raises ``ArithmeticError`` otherwise.

        >>> (IntLaurentPoly({6: 1, 0: -1})).exact_div(IntLaurentPoly({1: 1, 0: -1}))
        IntLaurentPoly('t^5 + t^4 + t^3 + t^2 + t + 1')
        """
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"{divisor} does not divide {self} (remainder {r})")
        return q

    def __floordiv__(self, other: IntLaurentPoly) -> IntLaurentPoly:
        return self.exact_div(_coerce(other))

    def to_pairs(self) -> list[list[int]]:
        return [[e, c] for e, c in self.terms]

    def to_json(self) -> str:
        return json.dumps(self.to_pairs())

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> IntLaurentPoly:
        out = []
        for pair in pairs:
            e, c = pair
            out.append((int(e), int(c)))
        return cls(out)

    @classmethod
    def from_json(cls, text: str) -> IntLaurentPoly:
        return cls.from_pairs(json.loads(text))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntLaurentPoly('{self}')"


def _coerce(x) -> IntLaurentPoly:
    if isinstance(x, IntLaurentPoly):
        return x
    if isinstance(x, int):
        return IntLaurentPoly.constant(x)
    return NotImplemented


T = IntLaurentPoly.monomial(1)
ONE = IntLaurentPoly.constant(1)


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


@functools.lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntLaurentPoly:
    """
    The n-th cyclotomic polynomial, by dividing ``t^n - 1`` by every
    ``phi_d`` with ``d`` a proper divisor of ``n``.

    >>> cyclotomic(6)
    IntLaurentPoly('t^2 - t + 1')
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"cyclotomic index must be a positive integer, got {n!r}")
    poly = T**n - 1
    for d in _divisors(n)[:-1]:
        poly = poly.exact_div(cyclotomic(d))
    return poly


def _require_odd_positive(n: int, what: str) -> None:
    if not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise ValueError(f"{what} requires an odd positive integer, got {n!r}")


def torus2_alexander(n: int) -> IntLaurentPoly:
    """Alexander polynomial ``(t^n + 1)/(t + 1)`` of the torus knot T(2, n)."""
    _require_odd_positive(n, "torus2_alexander")
    return (T**n + 1).exact_div(T + 1)


def pretzel_alexander(n: int) -> IntLaurentPoly:
    """
    Alexander polynomial of K_n, the square of the T(2, n) polynomial.

    The pretzel knot P(n, -n, n-1) reduces by crossing changes to
    -T(2, n) # T(2, n), whose polynomial is the square.
    """
    _require_odd_positive(n, "pretzel_alexander")
    return torus2_alexander(n) ** 2


def cyclotomic_split(p: int, q: int) -> tuple[IntLaurentPoly, IntLaurentPoly, IntLaurentPoly]:
    """
    ``(phi_2p, phi_2q, phi_2pq)`` for distinct odd primes; the product is
    ``torus2_alexander(p*q)``.
    """
    for r in (p, q):
        if not isinstance(r, int) or r == 2 or not is_prime(r):
            raise ValueError(f"expected an odd prime, got {r!r}")
    if p == q:
        raise ValueError(f"primes must be distinct, got p = q = {p}")
    return cyclotomic(2 * p), cyclotomic(2 * q), cyclotomic(2 * p * q)


def homology_order(delta: IntLaurentPoly) -> int:
    """``|delta(-1)|``, the order of H_1 of the 2-fold branched cover."""
    return abs(delta.evaluate(-1))
