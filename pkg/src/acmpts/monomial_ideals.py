"""Monomial ideals in the grid variables a[i,j].

Replacing the hyperplane through level j of direction i by a fresh
variable a[i,j] turns a configuration into the intersection of the point
primes (a[1,p_1], ..., a[n,p_n]).  This module keeps just enough ideal
arithmetic for that reduction: point primes, pairwise intersections via
least common multiples, minimal generating sets, and membership.
"""

from __future__ import annotations

import itertools
from functools import reduce
from typing import Iterable, NamedTuple

from .errors import DimensionMismatch, EmptyConfiguration
from .grid_model import GridPoint, PointSet


class GridVariable(NamedTuple):
    direction: int
    level: int

    def __str__(self) -> str:
        return f"a[{self.direction},{self.level}]"


class Monomial:
    """An exponent vector over grid variables, all exponents >= 1."""

    __slots__ = ("exps",)

    def __init__(self, exps: Iterable[tuple[GridVariable, int]]):
        pairs = tuple(sorted((GridVariable(*v), int(e)) for v, e in exps))
        if any(e < 1 for _, e in pairs):
            raise ValueError("exponents must be positive")
        if len({v for v, _ in pairs}) != len(pairs):
            raise ValueError("repeated variable")
        self.exps = pairs

    @classmethod
    def from_vars(cls, variables: Iterable[GridVariable]) -> "Monomial":
        exps: dict[GridVariable, int] = {}
        for v in variables:
            exps[v] = exps.get(v, 0) + 1
        return cls(exps.items())

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def support(self) -> frozenset[GridVariable]:
        return frozenset(v for v, _ in self.exps)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def multidegree(self, n: int) -> tuple[int, ...]:
        """Total exponent per direction, as a length-n degree vector."""
        degs = [0] * n
        for v, e in self.exps:
            degs[v.direction - 1] += e
        return tuple(degs)

    def divides(self, other: "Monomial") -> bool:
        theirs = dict(other.exps)
        return all(theirs.get(v, 0) >= e for v, e in self.exps)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return hash(self.exps)

    def __lt__(self, other: "Monomial") -> bool:
        return (self.degree, self.exps) < (other.degree, other.exps)

    def __repr__(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self.exps)


def lcm(a: Monomial, b: Monomial) -> Monomial:
    exps = dict(a.exps)
    for v, e in b.exps:
        exps[v] = max(exps.get(v, 0), e)
    return Monomial(exps.items())


class MonomialIdeal:
    """A monomial ideal stored by its minimal generating set."""

    __slots__ = ("generators",)

    def __init__(self, generators: Iterable[Monomial]):
        gens = set(generators)
        self.generators = frozenset(
            m for m in gens if not any(o != m and o.divides(m) for o in gens)
        )

    def sorted_generators(self) -> list[Monomial]:
        return sorted(self.generators)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MonomialIdeal) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return "(" + ", ".join(map(repr, self.sorted_generators())) + ")"


def point_prime(p: GridPoint) -> MonomialIdeal:
    """The prime (a[1,p_1], ..., a[n,p_n]) of a single grid point."""
    return MonomialIdeal(
        Monomial.from_vars([GridVariable(i + 1, c)]) for i, c in enumerate(p)
    )


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of the intersection, via pairwise lcms."""
    return MonomialIdeal(lcm(g, h) for g in I.generators for h in J.generators)


def configuration_ideal(X: PointSet) -> MonomialIdeal:
    """Intersection of the point primes of X; generators are squarefree."""
    if X.size == 0:
        raise EmptyConfiguration("configuration ideal needs a nonempty configuration")
    return reduce(intersect, (point_prime(p) for p in X.sorted_points()))


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    """Membership: some minimal generator divides m."""
    return any(g.divides(m) for g in I.generators)


def ci_generators(P: GridPoint, Q: GridPoint) -> list[Monomial]:
    """Generators of the smallest combinatorial complete intersection
    through P and Q: one per direction, of degree two exactly where the
    coordinates differ."""
    if len(P) != len(Q):
        raise DimensionMismatch(f"points {P} and {Q} have different lengths")
    gens = []
    for i, (a, b) in enumerate(zip(P, Q), start=1):
        if a == b:
            gens.append(Monomial.from_vars([GridVariable(i, a)]))
        else:
            gens.append(Monomial.from_vars([GridVariable(i, a), GridVariable(i, b)]))
    return gens


def grid_variables(dims: Iterable[int]) -> list[GridVariable]:
    """All variables of the grid ring, direction-major order."""
    return [
        GridVariable(i, j)
        for i, r in enumerate(dims, start=1)
        for j in range(1, r + 1)
    ]


def squarefree_monomials(dims: Iterable[int], max_degree: int) -> Iterable[Monomial]:
    """Every squarefree monomial up to the given degree (testing aid)."""
    variables = grid_variables(dims)
    for k in range(max_degree + 1):
        for combo in itertools.combinations(variables, k):
            yield Monomial.from_vars(combo)
