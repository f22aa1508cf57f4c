"""
Correction terms of large surgery on an L-space-type knot from its staircase
generators.

For a surgery coefficient ``N`` (odd, equal to ``|H_1|``) and a Spin^c label
``m`` with ``|m| <= (N - 1)/2``::

    d(m) = 2 * delta_m - ((2m - N)^2 - N) / (4N)

where ``delta_m`` is the minimum of ``psi`` over the generator levels.  This
``"table1"`` convention is the default; ``"appendix"`` is its negative.
Values are exact ``Fraction``s.  When ``N = n^2`` they are integers on the
order-n subgroup (labels divisible by n), which is where the obstructions
read them.
"""
from __future__ import annotations

import csv
import dataclasses
import io
import json
from collections.abc import Iterable, Mapping
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .staircase import BifiltGen

CONVENTIONS = ("table1", "appendix")


class IntegralityError(ArithmeticError):
    """A d-invariant expected to be an integer is not one."""


@dataclasses.dataclass(frozen=True)
class SpincLabel:
    m: int
    N: int

    def __post_init__(self):
        _check_modulus(self.N)
        half = (self.N - 1) // 2
        if not -half <= self.m <= half:
            raise ValueError(f"label {self.m} outside the symmetric range |m| <= {half} for N = {self.N}")


def _check_modulus(N: int) -> None:
    if not isinstance(N, int) or N < 1 or N % 2 == 0:
        raise ValueError(f"N must be an odd positive integer, got {N!r}")


def symmetric_residue(g: int, N: int) -> int:
    """Representative of ``g mod N`` in ``[-(N-1)/2, (N-1)/2]``."""
    half = (N - 1) // 2
    return (g + half) % N - half


def label_of_group_element(g: int, N: int) -> SpincLabel:
    """
    Spin^c label of the H_1 element ``g`` of ``Z_N``.

    >>> label_of_group_element(120, 225).m
    -105
    """
    _check_modulus(N)
    return SpincLabel(symmetric_residue(g, N), N)


def psi(g: tuple[int, int], m: int) -> int:
    alpha, beta = g
    if beta - alpha >= m:
        return beta - m
    return alpha


def delta(s: Iterable[tuple[int, int]], m: int) -> int:
    """Minimum of ``psi(., m)`` over the generator levels ``s``."""
    best = None
    for g in s:
        v = psi(g, m)
        if best is None or v < best:
            best = v
    if best is None:
        raise ValueError("delta of an empty generator set")
    return best


def lens_term(N: int, m: int) -> Fraction:
    """
    ``((2m - N)^2 - N) / (4N)``, the lens-space part of the surgery formula.

    >>> lens_term(225, 0), lens_term(225, 75)
    (Fraction(56, 1), Fraction(6, 1))
    """
    return Fraction((2 * m - N) ** 2 - N, 4 * N)


def d_surgery(s: Iterable[tuple[int, int]], N: int, m: int, convention: str = "table1",
              *, integral: bool = False) -> Fraction:
    """
    Exact d-invariant at label ``m``.

    Values are rational in general; on the order-``sqrt(N)`` subgroup of a
    square ``N`` they are integers.  ``integral=True`` raises
    ``IntegralityError`` for a non-integral result.
    """
    _check_modulus(N)
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}; expected one of {CONVENTIONS}")
    half = (N - 1) // 2
    if abs(m) > half:
        raise ValueError(f"|m| = {abs(m)} exceeds (N - 1)/2 = {half}")
    value = 2 * delta(s, m) - lens_term(N, m)
    if integral and value.denominator != 1:
        raise IntegralityError(f"d(N={N}, m={m}) = {value} is not an integer")
    return value if convention == "table1" else -value


@dataclasses.dataclass(frozen=True)
class DTable:
    """
    d-invariants of ``S^3_N(K)`` indexed by symmetric labels ``m``.

    Indexing accepts any group element and reduces it mod ``N``.
    """
    N: int
    values: Mapping[int, Fraction]
    convention: str = "table1"
    source: str = ""

    def __getitem__(self, g: int) -> Fraction:
        return self.values[symmetric_residue(g, self.N)]

    def integer(self, g: int) -> int:
        """Value at ``g``, which must be an integer."""
        v = self[g]
        if v.denominator != 1:
            raise IntegralityError(f"d at {g} (mod {self.N}) is {v}, expected an integer")
        return int(v)

    def labels(self) -> list[int]:
        return sorted(self.values)

    def negated(self) -> DTable:
        other = "appendix" if self.convention == "table1" else "table1"
        return DTable(self.N, {m: -v for m, v in self.values.items()}, other, self.source)

    def is_conjugation_symmetric(self) -> bool:
        return all(self.values[-m] == v for m, v in self.values.items())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "d"])
        for m in self.labels():
            w.writerow([m, str(self.values[m])])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "convention": self.convention,
            "source": self.source,
            "values": [[m, _json_number(self.values[m])] for m in self.labels()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: Mapping) -> DTable:
        return cls(int(data["N"]), {int(m): Fraction(v) for m, v in data["values"]},
                   data.get("convention", "table1"), data.get("source", ""))


def _json_number(v: Fraction) -> int | str:
    # integers stay JSON numbers; other rationals become "p/q" strings
    return int(v) if v.denominator == 1 else str(v)


def d_table(s: Iterable[BifiltGen], N: int, convention: str = "table1", *,
            source: str = "", max_workers: int | None = None) -> DTable:
    """
    ``d_surgery`` at every label ``-(N-1)/2 .. (N-1)/2``.

    With ``max_workers`` the labels are evaluated on a thread pool; the result
    is identical to the sequential one.
    """
    _check_modulus(N)
    pts = frozenset(BifiltGen(*g) for g in s)
    half = (N - 1) // 2
    labels = range(-half, half + 1)
    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            vals = list(pool.map(lambda m: d_surgery(pts, N, m, convention), labels))
    else:
        vals = [d_surgery(pts, N, m, convention) for m in labels]
    return DTable(N, dict(zip(labels, vals)), convention, source)


def grid_labels(p: int, q: int) -> list[list[int]]:
    """
    Labels of ``i*p*a + j*q*b`` with ``a = q^2``, ``b = p^2`` in ``Z_{p^2 q^2}``,
    as ``rows[j][i]``.

    >>> grid_labels(3, 5)[1]
    [45, -105, -30]
    """
    N = p * p * q * q
    pa, qb = p * q * q, q * p * p
    return [[symmetric_residue(i * pa + j * qb, N) for i in range(p)] for j in range(q)]
