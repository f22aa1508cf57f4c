"""
Staircase complexes, recorded by the bifiltration levels of their grading-0
cycle generators.

Only the corners are kept: every grading-0 generator of a staircase is a
cycle representing the same homology class, and the d-invariant computation
reads nothing but their ``(alpha, beta)`` levels.  Acyclic summands are not
modelled.
"""
from __future__ import annotations

import dataclasses
import itertools
import json
from collections.abc import Iterable, Iterator
from pathlib import Path
from typing import NamedTuple, Union


class StaircaseError(ValueError):
    """Raised when a generator list violates the staircase invariants."""


class BifiltGen(NamedTuple):
    alpha: int
    beta: int

    def swap(self) -> BifiltGen:
        return BifiltGen(self.beta, self.alpha)

    def __add__(self, other: BifiltGen) -> BifiltGen:  # type: ignore[override]
        return BifiltGen(self.alpha + other.alpha, self.beta + other.beta)


@dataclasses.dataclass(frozen=True)
class Staircase:
    """
    A swap-symmetric antichain of bifiltration corners.

    ``generators`` is kept sorted by ``alpha``; ``beta`` then strictly
    decreases.

    >>> unit_staircase(2)
    Staircase(generators=(BifiltGen(alpha=0, beta=2), BifiltGen(alpha=1, beta=1), BifiltGen(alpha=2, beta=0)))
    """
    generators: tuple[BifiltGen, ...]

    def __post_init__(self):
        gens = tuple(sorted(BifiltGen(int(a), int(b)) for a, b in self.generators))
        object.__setattr__(self, "generators", gens)
        validate(gens)

    @classmethod
    def from_corners(cls, corners: Iterable[Iterable[int]], *, symmetrize: bool = False) -> Staircase:
        """
        Build from explicit ``(alpha, beta)`` pairs.  With ``symmetrize`` the
        reflection of each pair is added, which is how corner lists are usually
        written down (one representative per symmetric pair).
        """
        pts = {BifiltGen(*map(int, c)) for c in corners}
        if symmetrize:
            pts |= {g.swap() for g in pts}
        return cls(tuple(pts))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[BifiltGen]:
        return iter(self.generators)

    def __contains__(self, item) -> bool:
        return BifiltGen(*item) in set(self.generators)

    def as_set(self) -> frozenset[BifiltGen]:
        return frozenset(self.generators)

    def to_pairs(self) -> list[list[int]]:
        return [[g.alpha, g.beta] for g in self.generators]

    def to_json(self) -> str:
        return json.dumps(self.to_pairs())


def validate(gens: Iterable[tuple[int, int]]) -> None:
    gens = sorted(BifiltGen(*g) for g in gens)
    if not gens:
        raise StaircaseError("a staircase needs at least one generator")
    for g in gens:
        if g.alpha < 0 or g.beta < 0:
            raise StaircaseError(f"negative filtration level in {tuple(g)}")
    pts = set(gens)
    if len(pts) != len(gens):
        raise StaircaseError("duplicate generators")
    missing = [tuple(g) for g in gens if g.swap() not in pts]
    if missing:
        raise StaircaseError(f"not symmetric under (alpha, beta) -> (beta, alpha); unmatched {missing[:5]}")
    for prev, cur in zip(gens, gens[1:]):
        if not (prev.alpha < cur.alpha and prev.beta > cur.beta):
            raise StaircaseError(f"not a staircase: {tuple(prev)} followed by {tuple(cur)}")


def load_staircase(path: str | Path) -> Staircase:
    """Read a JSON array of ``[alpha, beta]`` pairs and validate it."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise StaircaseError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(data, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(v, int) and not isinstance(v, bool) for v in p)
        for p in data
    ):
        raise StaircaseError(f"{path}: expected a JSON array of [alpha, beta] integer pairs")
    return Staircase(tuple(BifiltGen(*p) for p in data))


def triangular(k: int) -> int:
    return k * (k + 1) // 2


# Corner list of the grading-0 generators of the T(14, 15) staircase, one
# representative from each symmetric pair.
_T14_15_HALF = ((0, 105), (1, 91), (3, 78), (6, 66), (10, 55), (15, 45), (21, 36), (28, 28))


def torus_14_15() -> Staircase:
    return Staircase.from_corners(_T14_15_HALF, symmetrize=True)


def unit_staircase(k: int) -> Staircase:
    """Corners ``(j, k - j)`` for ``0 <= j <= k``."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    return Staircase(tuple(BifiltGen(j, k - j) for j in range(k + 1)))


def whitehead_sum_22() -> Staircase:
    """Staircase of the connected sum of 11 Whitehead doubles of the trefoil."""
    return unit_staircase(22)


def consecutive_torus_staircase(n: int) -> Staircase:
    """
    Triangular-number staircase ``(T_k, T_{n-1-k})`` extrapolated from
    T(14, 15).

    Only ``n = 15`` is checked against known data; the pattern overcounts
    generators for small torus knots, so ``n < 15`` is refused.
    """
    if not isinstance(n, int) or n < 15 or n % 2 == 0:
        raise ValueError(f"consecutive_torus_staircase needs odd n >= 15, got {n!r}")
    return Staircase(tuple(BifiltGen(triangular(k), triangular(n - 1 - k)) for k in range(n)))


GenSource = Union[Staircase, Iterable[tuple[int, int]]]


def _points(s: GenSource) -> list[BifiltGen]:
    return [BifiltGen(*g) for g in s]


def tensor_pairs(s1: GenSource, s2: GenSource) -> Iterator[tuple[BifiltGen, BifiltGen]]:
    """All generator pairs of the tensor product, before coordinates are merged."""
    return itertools.product(_points(s1), _points(s2))


def tensor(s1: GenSource, s2: GenSource) -> frozenset[BifiltGen]:
    """
    Bifiltration levels of the grading-0 generators of ``s1 (x) s2``.

    Coincident levels are merged; only the minimum over the set is ever used.
    """
    return frozenset(g1 + g2 for g1, g2 in tensor_pairs(s1, s2))


def pareto_min(s: GenSource) -> frozenset[BifiltGen]:
    """
    Points not dominated coordinatewise by another point of ``s``.

    >>> sorted(pareto_min([(0, 2), (1, 1), (1, 2)]))
    [BifiltGen(alpha=0, beta=2), BifiltGen(alpha=1, beta=1)]
    """
    pts = sorted(set(_points(s)))
    keep = []
    best_beta = None
    # sorted by alpha then beta: a point survives iff its beta beats every earlier beta
    for g in pts:
        if best_beta is None or g.beta < best_beta:
            keep.append(g)
            best_beta = g.beta
    return frozenset(keep)


def paper_tensor() -> frozenset[BifiltGen]:
    """The levels for L = T(14, 15) # 22 Wh(T(2, 3)) (11 copies of the double)."""
    return tensor(torus_14_15(), whitehead_sum_22())


def family_staircase(n: int) -> frozenset[BifiltGen]:
    """
    Generator levels for the surgery knot of K_n when n = 3 (mod 4), n >= 15.

    Uses the extrapolated T(n-1, n) staircase and (3n - 1)/4 Whitehead doubles,
    i.e. a unit staircase of size (3n - 1)/2.  Agrees with ``paper_tensor`` at
    n = 15; larger n are unvalidated.
    """
    if n % 4 != 3:
        raise ValueError(f"the K_n family needs n = 3 mod 4, got {n}")
    return tensor(consecutive_torus_staircase(n), unit_staircase((3 * n - 1) // 2))
