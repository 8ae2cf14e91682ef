"""Canonical numerical semigroups and single-semigroup computations.

A numerical semigroup is stored as its Frobenius number together with a
membership bitmask over ``[0, frobenius + 1]``; every integer above the
Frobenius number is implicitly a member.  The full set of naturals is the
special value ``frobenius == -1`` with mask ``1``.

All values are immutable and hashable, so they can be shared freely across
threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (
    EmptyInputError,
    InvalidFrobeniusError,
    NoGapsError,
    NotAMemberError,
    NotCofiniteError,
    NotMedError,
    ScaleLimitError,
)

# from_generators sieves membership up to min(gens) * max(gens); beyond this
# many bits the masks stop being desk-scale.
_SIEVE_LIMIT = 1 << 26


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask &= mask - 1


def _closure_mask(gens: Iterable[int], bound: int) -> int:
    """Bitmask of every sum of the generators that lands in [0, bound]."""
    limit = (1 << (bound + 1)) - 1
    reach = 1
    while True:
        before = reach
        for g in gens:
            # close under +g alone; doubling the step covers all multiples
            step = g
            while True:
                grown = reach | ((reach << step) & limit)
                if grown == reach:
                    break
                reach = grown
                step *= 2
        if reach == before:
            return reach


@dataclass(frozen=True)
class GeneratorSet:
    """A strictly increasing tuple of positive generators.

    Producers guarantee minimality (no generator is a sum of other members of
    the generated semigroup); the constructor only checks the cheap shape
    invariants.
    """

    gens: tuple[int, ...]

    def __post_init__(self):
        if not self.gens:
            raise EmptyInputError("a generator set cannot be empty")
        if self.gens[0] < 1 or any(a >= b for a, b in zip(self.gens, self.gens[1:])):
            raise ValueError(f"generators must be strictly increasing and positive: {self.gens}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __contains__(self, x: object) -> bool:
        return x in self.gens

    @property
    def multiplicity(self) -> int:
        return self.gens[0]


@dataclass(frozen=True)
class AperyTable:
    """Residue-class minima of a semigroup modulo a nonzero member.

    ``entries[i]`` is the least member congruent to ``i`` modulo ``modulus``.
    """

    modulus: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if len(self.entries) != self.modulus:
            raise ValueError(f"expected {self.modulus} entries, got {len(self.entries)}")
        if self.entries[0] != 0:
            raise ValueError("entry for residue 0 must be 0")
        for i, w in enumerate(self.entries):
            if w % self.modulus != i:
                raise ValueError(f"entry {w} is not congruent to {i} mod {self.modulus}")

    def as_set(self) -> tuple[int, ...]:
        return tuple(sorted(self.entries))

    def __len__(self) -> int:
        return self.modulus

    def __contains__(self, x: object) -> bool:
        return x in self.entries


@dataclass(frozen=True)
class NumericalSemigroup:
    """An additively closed, cofinite subset of the naturals containing 0."""

    frobenius: int
    mask: int

    def __post_init__(self):
        F, mask = self.frobenius, self.mask
        if F == -1:
            if mask != 1:
                raise ValueError("the naturals are encoded as frobenius=-1, mask=1")
            return
        if F < 1:
            raise ValueError(f"frobenius must be -1 or >= 1, got {F}")
        top = 1 << (F + 1)
        if not mask & 1 or not mask & top or mask & (1 << F):
            raise ValueError("mask must contain 0 and frobenius+1 but not frobenius")
        if mask >> (F + 2):
            raise ValueError("mask has bits beyond frobenius+1")
        low = top - 1  # bits 0..F
        rest = mask & low & ~1
        while rest:
            a = (rest & -rest).bit_length() - 1
            # sums above F are implicit members, so only bits <= F matter
            if (mask << a) & ~mask & low:
                missing = (mask << a) & ~mask & low
                b = (missing & -missing).bit_length() - 1
                raise ValueError(f"not additively closed: {a} + {b - a} = {b} is missing")
            rest &= rest - 1

    # -- constructors ------------------------------------------------------

    @classmethod
    def natural(cls) -> NumericalSemigroup:
        """The full set of nonnegative integers."""
        return cls(-1, 1)

    @classmethod
    def delta(cls, frobenius: int) -> NumericalSemigroup:
        """{0, F+1, ->}: the smallest semigroup with the given Frobenius number."""
        if frobenius < 1:
            raise InvalidFrobeniusError(f"frobenius must be >= 1, got {frobenius}")
        return cls(frobenius, 1 | (1 << (frobenius + 1)))

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> NumericalSemigroup:
        """Semigroup of all nonnegative integer combinations of ``gens``.

        Raises ``EmptyInputError`` on an empty collection and
        ``NotCofiniteError`` when gcd(gens) != 1.
        """
        gs = sorted({int(g) for g in gens})
        if not gs:
            raise EmptyInputError("at least one generator is required")
        if gs[0] < 1:
            raise ValueError(f"generators must be positive: {gs}")
        if math.gcd(*gs) != 1:
            raise NotCofiniteError(f"gcd of {gs} is {math.gcd(*gs)}, complement would be infinite")
        if gs[0] == 1:
            return cls.natural()
        bound = gs[0] * gs[-1]  # exceeds the Frobenius number of <min, max>
        if bound > _SIEVE_LIMIT:
            raise ScaleLimitError(f"membership sieve would need {bound} bits (limit {_SIEVE_LIMIT})")
        reach = _closure_mask(gs, bound)
        gaps = ~reach & ((1 << (bound + 1)) - 1)
        F = gaps.bit_length() - 1
        return cls(F, reach & ((1 << (F + 2)) - 1))

    @classmethod
    def from_small_elements(cls, frobenius: int, smalls: Iterable[int]) -> NumericalSemigroup:
        """Build from the members below the Frobenius number."""
        mask = 1 << (frobenius + 1)
        for s in smalls:
            mask |= 1 << s
        return cls(frobenius, mask)

    # -- membership and element views --------------------------------------

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.frobenius:
            return True
        return bool((self.mask >> x) & 1)

    def is_natural(self) -> bool:
        return self.frobenius == -1

    def small_elements(self) -> tuple[int, ...]:
        """Members strictly below the Frobenius number, ascending."""
        if self.is_natural():
            return ()
        return tuple(_iter_bits(self.mask & ~(1 << (self.frobenius + 1))))

    def gaps(self) -> tuple[int, ...]:
        """Nonmembers, ascending (finitely many by cofiniteness)."""
        if self.is_natural():
            return ()
        return tuple(_iter_bits(~self.mask & ((1 << (self.frobenius + 1)) - 1)))

    def members_upto(self, bound: int) -> tuple[int, ...]:
        return tuple(x for x in range(bound + 1) if x in self)

    # -- basic invariants ---------------------------------------------------

    def multiplicity(self) -> int:
        """Least positive member."""
        positive = self.mask & ~1
        if positive:
            return (positive & -positive).bit_length() - 1
        return 1  # the naturals

    def genus(self) -> int:
        """Number of gaps."""
        if self.is_natural():
            return 0
        return self.frobenius + 1 - self.small_count()

    def small_count(self) -> int:
        """Number of members below the Frobenius number."""
        if self.is_natural():
            return 0
        return self.mask.bit_count() - 1

    def embedding_dim(self) -> int:
        return len(self.minimal_generators())

    # -- generators ---------------------------------------------------------

    def minimal_generators(self) -> GeneratorSet:
        """The unique minimal system of generators.

        Candidates live in [m, F+m]: anything larger is m plus a member above
        the Frobenius number.
        """
        if self.is_natural():
            return GeneratorSet((1,))
        F, m = self.frobenius, self.multiplicity()
        bound = F + m + 1
        ext = self.mask | (((1 << (bound - F - 1)) - 1) << (F + 2))
        positive = ext & ~1
        sums = 0
        for a in _iter_bits(positive):
            sums |= positive << a
        sums &= (1 << (bound + 1)) - 1
        return GeneratorSet(tuple(_iter_bits(positive & ~sums & ((1 << (F + m + 1)) - 1))))

    # -- Apery sets and gap invariants ---------------------------------------

    def apery_set(self, n: int) -> AperyTable:
        """Least member of each residue class modulo ``n`` (``n`` must be a nonzero member)."""
        if n < 1 or n not in self:
            raise NotAMemberError(f"{n} is not a nonzero member")
        entries: list[int | None] = [None] * n
        found, s = 0, 0
        while found < n:  # every residue is hit by s = F + n at the latest
            if entries[s % n] is None and s in self:
                entries[s % n] = s
                found += 1
            s += 1
        return AperyTable(n, tuple(entries))  # type: ignore[arg-type]

    def pseudo_frobenius(self) -> tuple[int, ...]:
        """Gaps z with z + s a member for every positive member s."""
        if self.is_natural():
            raise NoGapsError("the naturals have no pseudo-Frobenius numbers")
        ap = self.apery_set(self.multiplicity())
        return pseudo_frobenius_from_apery(ap)

    def semigroup_type(self) -> int:
        return len(self.pseudo_frobenius())

    def special_gaps(self) -> tuple[int, ...]:
        """Gaps whose adjunction leaves the set additively closed."""
        if self.is_natural():
            raise NoGapsError("the naturals have no gaps")
        return special_gaps_from_apery(self.apery_set(self.multiplicity()))

    # -- structural predicates ----------------------------------------------

    def is_med(self) -> bool:
        """True when the embedding dimension equals the multiplicity."""
        if self.is_natural():
            return True
        ap = self.apery_set(self.multiplicity())
        expected = tuple(sorted(set(ap.entries) - {0} | {self.multiplicity()}))
        return self.minimal_generators().gens == expected

    def is_arf(self) -> bool:
        """True when x + y - z is a member for all members x >= y >= z.

        Decided through the difference sequence of the small elements; the
        naturals count as Arf by convention.
        """
        if self.is_natural():
            return True
        from .sequences import validate_sequence

        return validate_sequence(self.difference_sequence())

    def difference_sequence(self) -> tuple[int, ...]:
        """Consecutive differences of the members up to F+1, largest first."""
        if self.is_natural():
            raise NoGapsError("the naturals have no difference sequence")
        elems = self.small_elements() + (self.frobenius + 1,)
        return tuple(elems[i] - elems[i - 1] for i in range(len(elems) - 1, 0, -1))

    # -- element adjunction/removal -----------------------------------------

    def adjoin(self, x: int) -> NumericalSemigroup:
        """S with the special gap ``x`` added.

        Adjoining the Frobenius number itself shrinks the Frobenius number to
        the next gap down (or yields the naturals).
        """
        if x in self or x < 1:
            raise NotAMemberError(f"{x} is not a gap")
        mask = self.mask | (1 << x)
        if x != self.frobenius:
            return NumericalSemigroup(self.frobenius, mask)
        gaps = ~mask & ((1 << (self.frobenius + 2)) - 1)
        if not gaps:
            return NumericalSemigroup.natural()
        F = gaps.bit_length() - 1
        return NumericalSemigroup(F, mask & ((1 << (F + 2)) - 1))

    def remove(self, x: int) -> NumericalSemigroup:
        """S without the minimal generator ``x`` (requires 0 < x <= F, so F survives)."""
        if x < 1 or x > self.frobenius or x not in self:
            raise NotAMemberError(f"{x} is not a member in [1, frobenius]")
        return NumericalSemigroup(self.frobenius, self.mask & ~(1 << x))

    def remove_multiplicity(self) -> NumericalSemigroup:
        """S without its least positive element (always a minimal generator)."""
        if self.is_natural():
            return NumericalSemigroup.delta(1)
        m = self.multiplicity()
        if m == self.frobenius + 1:
            # {0, F+1, ->} loses F+1 and becomes {0, F+2, ->}
            return NumericalSemigroup.delta(self.frobenius + 1)
        return NumericalSemigroup(self.frobenius, self.mask & ~(1 << m))

    def associated_chain(self) -> list[NumericalSemigroup]:
        """Repeatedly strip the multiplicity until {0, F+1, ->} is reached."""
        if self.is_natural():
            raise NoGapsError("the naturals have no associated chain")
        chain = [self]
        while chain[-1].multiplicity() != self.frobenius + 1:
            chain.append(chain[-1].remove_multiplicity())
        return chain

    # -- set algebra ----------------------------------------------------------

    def _extended_mask(self, frobenius: int) -> int:
        # membership bits over [0, frobenius+1] for frobenius >= self.frobenius
        extra = frobenius - self.frobenius
        return self.mask | (((1 << extra) - 1) << (self.frobenius + 2))

    def intersect(self, other: NumericalSemigroup) -> NumericalSemigroup:
        """Intersection; its Frobenius number is the max of the two."""
        if self.is_natural():
            return other
        if other.is_natural():
            return self
        F = max(self.frobenius, other.frobenius)
        return NumericalSemigroup(F, self._extended_mask(F) & other._extended_mask(F))

    def __and__(self, other: NumericalSemigroup) -> NumericalSemigroup:
        return self.intersect(other)

    def issubset(self, other: NumericalSemigroup) -> bool:
        if other.is_natural():
            return True
        if self.frobenius < other.frobenius:
            # self contains everything above its own Frobenius number,
            # in particular other's Frobenius number
            return False
        return self.mask & ~other._extended_mask(self.frobenius) == 0

    def __repr__(self) -> str:
        if self.is_natural():
            return "NumericalSemigroup.natural()"
        smalls = ", ".join(str(s) for s in self.small_elements())
        return f"NumericalSemigroup(F={self.frobenius}, members={{{smalls}, {self.frobenius + 1}, ->}})"


def pseudo_frobenius_from_apery(ap: AperyTable) -> tuple[int, ...]:
    """Pseudo-Frobenius numbers read off any Apery table.

    w is maximal in the table exactly when w + w' falls outside the table for
    every nonzero entry w'; the pseudo-Frobenius numbers are those maxima
    shifted down by the modulus.
    """
    entries = set(ap.entries)
    nonzero = entries - {0}
    maxima = (w for w in nonzero if all(w + wp not in entries for wp in nonzero))
    return tuple(sorted(w - ap.modulus for w in maxima))


def special_gaps_from_apery(ap: AperyTable) -> tuple[int, ...]:
    """Special gaps read off any Apery table: pseudo-Frobenius x with 2x a member."""
    pf = pseudo_frobenius_from_apery(ap)
    pf_set = set(pf)
    return tuple(x for x in pf if 2 * x not in pf_set)


def med_frobenius_genus_formula(gens: Iterable[int]) -> tuple[int, Fraction]:
    """Closed-form Frobenius number and genus for a maximal-embedding-dimension semigroup.

    Input must be the minimal generating set; returns
    ``(n_e - n_1, (n_2 + ... + n_e)/n_1 - (n_1 - 1)/2)``.
    """
    ns = sorted({int(g) for g in gens})
    S = NumericalSemigroup.from_generators(ns)
    if S.is_natural():
        raise NoGapsError("the formula is undefined for the naturals")
    if S.minimal_generators().gens != tuple(ns) or not S.is_med():
        raise NotMedError(f"{ns} is not the minimal generating set of a MED semigroup")
    frob = ns[-1] - ns[0]
    genus = Fraction(sum(ns[1:]), ns[0]) - Fraction(ns[0] - 1, 2)
    return frob, genus
