"""
Obstructions read off a d-invariant table.

``split_obstruction`` tests whether ``d(ipa + jqb) - d(ipa) - d(jqb)`` is
constant over the p- and q-torsion, which it must be if the manifold is
rational homology cobordant to a connected sum splitting the p- and q-parts.
``metabolizer_obstruction`` checks the half-order subgroups for vanishing of
the linking form and of d, which a rational homology ball filling requires.

H_1 is taken to be cyclic, ``Z_N``.
"""
from __future__ import annotations

import dataclasses
import json
import math
from fractions import Fraction

from .alexpoly import is_prime
from .dinv import DTable

LINKING_SIGN = -1


@dataclasses.dataclass(frozen=True)
class SplitGrid:
    """
    Second differences ``D[i][j]`` for ``i < p``, ``j < q``.

    ``obstructed`` is true when the entries are not all equal.
    """
    p: int
    q: int
    a: int
    b: int
    D: tuple[tuple[int, ...], ...]
    obstructed: bool

    def entry(self, i: int, j: int) -> int:
        return self.D[i][j]

    def reversed_rows(self) -> list[list[int]]:
        """``-D`` laid out as rows ``j`` and columns ``i``."""
        return [[-self.D[i][j] for i in range(self.p)] for j in range(self.q)]

    def to_markdown(self) -> str:
        return markdown_grid(self.reversed_rows())

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "a": self.a, "b": self.b,
                "D": [list(col) for col in self.D], "obstructed": self.obstructed}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def markdown_grid(rows: list[list[int]]) -> str:
    """Markdown table with rows ``j = 0..`` and columns ``i = 0..``."""
    width = len(rows[0]) if rows else 0
    lines = ["| | " + " | ".join(f"i = {i}" for i in range(width)) + " |",
             "|---|" + "---|" * width]
    for j, row in enumerate(rows):
        lines.append(f"| j = {j} | " + " | ".join(str(v) for v in row) + " |")
    return "\n".join(lines) + "\n"


def _check_prime_pair(p: int, q: int) -> None:
    for r in (p, q):
        if not isinstance(r, int) or r == 2 or not is_prime(r):
            raise ValueError(f"expected an odd prime, got {r!r}")
    if p == q:
        raise ValueError("p and q must be distinct")


def split_obstruction(table: DTable, p: int, q: int) -> SplitGrid:
    """
    Second-difference grid for ``Z_{p^2 q^2}`` with generators ``a = q^2``
    (order p^2) and ``b = p^2`` (order q^2).
    """
    _check_prime_pair(p, q)
    N = p * p * q * q
    if table.N != N:
        raise ValueError(f"table has N = {table.N}, but p^2 q^2 = {N}")
    a, b = q * q, p * p
    pa, qb = p * a, q * b
    D = tuple(
        tuple(table.integer(i * pa + j * qb) - table.integer(i * pa) - table.integer(j * qb)
              for j in range(q))
        for i in range(p)
    )
    values = {v for col in D for v in col}
    return SplitGrid(p, q, a, b, D, len(values) > 1)


def linking_form(x: int, y: int, N: int) -> Fraction:
    """
    ``-x*y/N`` mod 1, the linking form of ``Z_N`` for surgery coefficient N.

    >>> linking_form(1, 1, 225)
    Fraction(224, 225)
    """
    if N < 1 or N % 2 == 0:
        raise ValueError(f"N must be odd and positive, got {N}")
    return Fraction(LINKING_SIGN * x * y % N, N)


def cyclic_subgroups(N: int) -> dict[int, int]:
    """Map each divisor ``k`` of ``N`` to a generator ``N/k`` of the order-k subgroup."""
    return {k: N // k for k in range(1, N + 1) if N % k == 0}


@dataclasses.dataclass(frozen=True)
class Metabolizer:
    generator: int
    order: int
    N: int
    linking_vanishes: bool
    d_vanishes: bool

    @property
    def elements(self) -> list[int]:
        return [k * self.generator % self.N for k in range(self.order)]

    @property
    def is_metabolizer(self) -> bool:
        return self.linking_vanishes and self.d_vanishes

    def to_dict(self) -> dict:
        return {"generator": self.generator, "order": self.order, "N": self.N,
                "linking_vanishes": self.linking_vanishes, "d_vanishes": self.d_vanishes}


def metabolizer_obstruction(table: DTable) -> list[Metabolizer]:
    """
    Every subgroup of order ``sqrt(N)`` with its two vanishing flags.  The
    manifold cannot bound a rational homology ball unless some candidate has
    both.
    """
    N = table.N
    root = math.isqrt(N)
    if root * root != N:
        raise ValueError(f"N = {N} is not a perfect square")
    out = []
    for order, gen in cyclic_subgroups(N).items():
        if order != root:
            continue
        elems = [k * gen % N for k in range(order)]
        lk = all(linking_form(x, y, N) == 0 for x in elems for y in elems)
        dv = all(table[x] == 0 for x in elems)
        out.append(Metabolizer(gen, order, N, lk, dv))
    return out


def slice_obstructed(table: DTable) -> bool:
    """True when no half-order subgroup passes both vanishing tests."""
    return not any(c.is_metabolizer for c in metabolizer_obstruction(table))
