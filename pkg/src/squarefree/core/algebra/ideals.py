# -----------------------------------------------------------------------------
# /*
#  * Copyright (C) 2025 Squarefree
#  *
#  * This program is free software; you can redistribute it and/or modify
#  * it under the terms of the GNU General Public License as published by
#  * the Free Software Foundation; Version 2.
#  *
#  * This program is distributed in the hope that it will be useful,
#  * but WITHOUT ANY WARRANTY; without even the implied warranty of
#  * MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
#  * GNU General Public License for more details.
#  *
#  * You should have received a copy of the GNU General Public License
#  * along with this program; if not, write to the Free Software Foundation.
#  */
# -----------------------------------------------------------------------------

"""Squarefree monomial ideals, stored by the supports of their generators."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from squarefree.core.algebra.exponents import ExponentVector, IndexSet


def minimalize(supports: Iterable[IndexSet]) -> tuple[IndexSet, ...]:
    """Drop every support that contains another one (divisibility filtering)."""
    candidates = sorted(set(supports), key=IndexSet.sort_key)
    minimal: list[IndexSet] = []
    for candidate in candidates:
        if not any(g.issubset(candidate) for g in minimal):
            minimal.append(candidate)
    return tuple(minimal)


@dataclass(frozen=True)
class SquarefreeMonomialIdeal:
    """A squarefree monomial ideal of k[x_1..x_n].

    ``generators`` are the supports of the minimal generators, sorted by
    size then lexicographically. No generators means the zero ideal; the
    empty support means the unit ideal.
    """

    n: int
    generators: tuple[IndexSet, ...]

    @classmethod
    def from_supports(cls, n: int, supports: Iterable[IndexSet]) -> SquarefreeMonomialIdeal:
        return cls(n, minimalize(supports))

    @classmethod
    def from_exponents(
        cls, n: int, exponents: Iterable[ExponentVector]
    ) -> SquarefreeMonomialIdeal:
        """The radical of the ideal generated by ``x^a`` for the given ``a``."""
        return cls.from_supports(n, (a.support() for a in exponents))

    @classmethod
    def zero(cls, n: int) -> SquarefreeMonomialIdeal:
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> SquarefreeMonomialIdeal:
        return cls(n, (IndexSet(),))

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return IndexSet() in self.generators

    def contains(self, monomial: IndexSet | ExponentVector) -> bool:
        """Membership of x^monomial; for exponent vectors only the support matters."""
        if isinstance(monomial, ExponentVector):
            if not monomial.is_nonnegative():
                return False
            monomial = monomial.support()
        return any(g.issubset(monomial) for g in self.generators)

    def members(self) -> frozenset[IndexSet]:
        """Supports of every squarefree monomial in the ideal."""
        return frozenset(u for u in IndexSet.all_subsets(self.n) if self.contains(u))

    def intersection(self, other: SquarefreeMonomialIdeal) -> SquarefreeMonomialIdeal:
        """Pairwise lcm expansion followed by minimalization."""
        return SquarefreeMonomialIdeal.from_supports(
            self.n, (g | h for g in self.generators for h in other.generators)
        )

    def codimension(self) -> int:
        """Smallest size of a vertex cover of the generators (n + 1 for the unit ideal)."""
        if self.is_unit():
            return self.n + 1
        for subset in sorted(IndexSet.all_subsets(self.n), key=len):
            if all(not g.isdisjoint(subset) for g in self.generators):
                return len(subset)
        return self.n

    def render(self, names: Sequence[str]) -> list[str]:
        return [g.indicator(self.n).monomial(names) for g in self.generators]

    def __str__(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def intersect_all(ideals: Sequence[SquarefreeMonomialIdeal]) -> SquarefreeMonomialIdeal:
    result = ideals[0]
    for ideal in ideals[1:]:
        result = result.intersection(ideal)
    return result
