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

"""Exponent vectors in Z^n, index sets in [n] and the orientation signs.

Variables are 1-indexed everywhere: an ``IndexSet`` over [n] contains
integers in ``1..n`` and coordinate ``k`` of an ``ExponentVector`` is
``coords[k - 1]``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import reduce

from squarefree.core.exceptions import PreconditionError, negative_exponent

MAX_VARIABLES = 64


@dataclass(frozen=True)
class IndexSet:
    """A subset of [n] stored as a bitmask; bit ``k - 1`` marks member ``k``."""

    mask: int = 0

    @classmethod
    def of(cls, members: Iterable[int]) -> IndexSet:
        mask = 0
        for k in members:
            if k < 1:
                raise PreconditionError(f"Index sets hold positive integers, got {k}")
            mask |= 1 << (k - 1)
        return cls(mask)

    @classmethod
    def full(cls, n: int) -> IndexSet:
        return cls((1 << n) - 1)

    @classmethod
    def all_subsets(cls, n: int) -> Iterator[IndexSet]:
        """All subsets of [n] ordered by their bitmask."""
        for mask in range(1 << n):
            yield cls(mask)

    def __contains__(self, k: object) -> bool:
        return isinstance(k, int) and k >= 1 and bool(self.mask >> (k - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        k = 1
        while mask:
            if mask & 1:
                yield k
            mask >>= 1
            k += 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: IndexSet) -> IndexSet:
        return IndexSet(self.mask | other.mask)

    def __and__(self, other: IndexSet) -> IndexSet:
        return IndexSet(self.mask & other.mask)

    def __sub__(self, other: IndexSet) -> IndexSet:
        return IndexSet(self.mask & ~other.mask)

    def issubset(self, other: IndexSet) -> bool:
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: IndexSet) -> bool:
        return self.mask & other.mask == 0

    def add(self, k: int) -> IndexSet:
        return IndexSet(self.mask | (1 << (k - 1)))

    def remove(self, k: int) -> IndexSet:
        return IndexSet(self.mask & ~(1 << (k - 1)))

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def position(self, k: int) -> int:
        """1-based rank of ``k`` among the members."""
        if k not in self:
            raise PreconditionError(f"{k} is not a member of {self}")
        return (self.mask & ((1 << (k - 1)) - 1)).bit_count() + 1

    def subsets(self) -> Iterator[IndexSet]:
        """All subsets of this set, the empty set first."""
        sub = 0
        while True:
            yield IndexSet(sub)
            if sub == self.mask:
                return
            sub = (sub - self.mask) & self.mask

    def indicator(self, n: int) -> ExponentVector:
        """The 0/1 vector with support equal to this set."""
        return ExponentVector(tuple(1 if k in self else 0 for k in range(1, n + 1)))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self), self.members())

    def __str__(self) -> str:
        return "{" + ",".join(str(k) for k in self) + "}"

    def __repr__(self) -> str:
        return f"IndexSet({self})"


@dataclass(frozen=True)
class ExponentVector:
    """A point of Z^n."""

    coords: tuple[int, ...]

    @classmethod
    def of(cls, coords: Iterable[int]) -> ExponentVector:
        return cls(tuple(int(c) for c in coords))

    @classmethod
    def zero(cls, n: int) -> ExponentVector:
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.coords)

    def __getitem__(self, k: int) -> int:
        """Coordinate of variable ``k`` (1-based)."""
        return self.coords[k - 1]

    def _check(self, other: ExponentVector) -> None:
        if other.n != self.n:
            raise PreconditionError(
                f"Exponent vectors of different lengths: {self} and {other}"
            )

    def __add__(self, other: ExponentVector) -> ExponentVector:
        self._check(other)
        return ExponentVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: ExponentVector) -> ExponentVector:
        self._check(other)
        return ExponentVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> ExponentVector:
        return ExponentVector(tuple(-a for a in self.coords))

    def scaled(self, factor: int) -> ExponentVector:
        return ExponentVector(tuple(factor * a for a in self.coords))

    def divides(self, other: ExponentVector) -> bool:
        """Componentwise ``self <= other``."""
        self._check(other)
        return all(a <= b for a, b in zip(self.coords, other.coords))

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.coords)

    def is_squarefree(self) -> bool:
        return all(a in (0, 1) for a in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def positive_part(self) -> ExponentVector:
        return ExponentVector(tuple(max(a, 0) for a in self.coords))

    def negative_part(self) -> ExponentVector:
        return ExponentVector(tuple(max(-a, 0) for a in self.coords))

    def support(self) -> IndexSet:
        return IndexSet.of(k for k, a in enumerate(self.coords, start=1) if a != 0)

    def positive_support(self) -> IndexSet:
        return IndexSet.of(k for k, a in enumerate(self.coords, start=1) if a > 0)

    def negative_support(self) -> IndexSet:
        return IndexSet.of(k for k, a in enumerate(self.coords, start=1) if a < 0)

    def total_degree(self) -> int:
        return sum(self.coords)

    def monomial(self, names: Sequence[str]) -> str:
        """Render ``x^self`` with the given variable names; ``1`` for the zero vector."""
        parts = []
        for name, a in zip(names, self.coords):
            if a == 0:
                continue
            parts.append(name if a == 1 else f"{name}^{a}")
        if not parts:
            return "1"
        separator = "" if all(len(name) == 1 for name in names) else "*"
        return separator.join(parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.coords) + ")"

    def __repr__(self) -> str:
        return f"ExponentVector{self}"


def support(a: ExponentVector) -> IndexSet:
    """Indices of the nonzero coordinates of ``a``."""
    return a.support()


def squarefree_part(a: ExponentVector) -> ExponentVector:
    """The 0/1 vector q_a with the same support as ``a``."""
    if not a.is_nonnegative():
        raise negative_exponent("squarefree_part", a)
    return ExponentVector(tuple(1 if c else 0 for c in a.coords))


def join(vectors: Sequence[ExponentVector]) -> ExponentVector:
    """Componentwise maximum of a nonempty list of vectors."""
    if not vectors:
        raise PreconditionError("join needs at least one vector")
    n = vectors[0].n
    if any(v.n != n for v in vectors):
        raise PreconditionError("join needs vectors of equal length")
    return ExponentVector(tuple(max(column) for column in zip(*(v.coords for v in vectors))))


def sgn_single(t: int, members: IndexSet) -> int:
    """(-1)^(r+1) where ``t`` is the r-th smallest member."""
    return 1 if members.position(t) % 2 == 1 else -1


def sgn_set(subset: IndexSet, members: IndexSet) -> int:
    """Product of ``sgn_single`` over ``subset``."""
    if not subset.issubset(members):
        raise PreconditionError(f"{subset} is not contained in {members}")
    return reduce(lambda acc, t: acc * sgn_single(t, members), subset, 1)


def transposition_sign(sigma: IndexSet, face: IndexSet) -> int:
    """Parity of moving the members of ``sigma`` to the end of sorted ``face``.

    Counts the pairs (a, b) with a in sigma, b in face minus sigma and a < b:
    each one is an adjacent transposition on the way to
    sorted(face - sigma) followed by sorted(sigma).
    """
    if not sigma.issubset(face):
        raise PreconditionError(f"{sigma} is not contained in {face}")
    rest = face - sigma
    inversions = sum(len(IndexSet(rest.mask >> a << a)) for a in sigma)
    return -1 if inversions % 2 else 1
