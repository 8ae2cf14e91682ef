"""Arf sequences: the difference-sequence view of Arf semigroups.

An Arf semigroup other than the naturals is determined by the sequence of
consecutive differences of its elements up to F+1, read from the top down.
The admissible sequences satisfy two axioms:

1. ``2 <= x_1 <= x_2 <= ... <= x_n``
2. each ``x_{i+1}`` is a consecutive suffix sum ``x_i + x_{i-1} + ... + x_j``
   of its predecessors, or exceeds the sum of all of them.

Splitting a term ``x_i`` into an adjacent pair ``(a, x_i - a)`` that keeps the
axioms is called a proper refinement; sequences with no proper refinement and
total F+1 correspond exactly to the maximal members of the covariety of Arf
semigroups with Frobenius number F.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import NumericalSemigroup
from .errors import (
    EmptyInputError,
    InvalidFrobeniusError,
    InvalidRefinementError,
    InvalidSequenceError,
    NoGapsError,
    NotArfError,
)


def _as_terms(seq: Iterable[int] | "ArfSequence") -> tuple[int, ...]:
    if isinstance(seq, ArfSequence):
        return seq.terms
    xs = tuple(int(x) for x in seq)
    if not xs:
        raise EmptyInputError("a sequence needs at least one term")
    return xs


def _arrow_member(target: int, terms: Iterable[int]) -> bool:
    """target is one of the consecutive partial sums of ``terms``, or beyond all of them."""
    total = 0
    for t in terms:
        total += t
        if target == total:
            return True
    return target > total


def validate_sequence(seq: Iterable[int] | "ArfSequence") -> bool:
    """Check both sequence axioms.  Empty input raises ``EmptyInputError``."""
    xs = _as_terms(seq)
    if xs[0] < 2:
        return False
    if any(b < a for a, b in zip(xs, xs[1:])):
        return False
    # axiom 2: walk predecessors nearest-first
    return all(_arrow_member(xs[i], xs[i - 1 :: -1]) for i in range(1, len(xs)))


@dataclass(frozen=True)
class ArfSequence:
    """A tuple of integers satisfying both sequence axioms."""

    terms: tuple[int, ...]

    def __post_init__(self):
        if not validate_sequence(self.terms):
            raise InvalidSequenceError(f"{self.terms} violates the sequence axioms")

    @property
    def total(self) -> int:
        return sum(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, i: int) -> int:
        return self.terms[i]


def semigroup_of_sequence(seq: Iterable[int] | ArfSequence) -> NumericalSemigroup:
    """The Arf semigroup {0, x_n, x_n + x_{n-1}, ..., x_n + ... + x_1, ->}.

    The total of the sequence is F+1.  Invalid input raises
    ``InvalidSequenceError``.
    """
    xs = _as_terms(seq)
    if not validate_sequence(xs):
        raise InvalidSequenceError(f"{xs} violates the sequence axioms")
    run, smalls = 0, [0]
    for x in reversed(xs):
        run += x
        smalls.append(run)
    return NumericalSemigroup.from_small_elements(run - 1, smalls[:-1])


def sequence_of_semigroup(S: NumericalSemigroup) -> ArfSequence:
    """Inverse of ``semigroup_of_sequence``; requires an Arf semigroup."""
    if S.is_natural():
        raise NoGapsError("the naturals have no associated sequence")
    xs = S.difference_sequence()
    if not validate_sequence(xs):
        raise NotArfError(f"{S!r} is not an Arf semigroup")
    return ArfSequence(xs)


def refinement_candidates(seq: Iterable[int] | ArfSequence, i: int, a: int) -> bool:
    """Closed-form test: does replacing x_i by (a, x_i - a) keep the axioms?

    ``i`` is 1-based.  Only the neighbourhood of the split matters:

    * i = 1: valid iff 2a <= x_1;
    * i >= 2: valid iff ``a`` is a consecutive suffix sum of x_{i-1}, ..., x_1
      (or beyond their total) and x_i - 2a is zero, such a suffix sum, or
      beyond the total.

    Out-of-range ``i`` or ``a`` raises ``InvalidRefinementError``.
    """
    xs = _as_terms(seq)
    if not 1 <= i <= len(xs):
        raise InvalidRefinementError(f"position {i} out of range 1..{len(xs)}")
    if a < 2 or a >= xs[i - 1]:
        raise InvalidRefinementError(f"split value {a} out of range 2..{xs[i - 1] - 1}")
    if i == 1:
        return 2 * a <= xs[0]
    prefix = xs[i - 2 :: -1]
    if not _arrow_member(a, prefix):
        return False
    d = xs[i - 1] - 2 * a
    return d == 0 or _arrow_member(d, prefix)


def apply_refinement(seq: Iterable[int] | ArfSequence, i: int, a: int) -> ArfSequence:
    """The refined sequence (x_1, ..., x_{i-1}, a, x_i - a, x_{i+1}, ..., x_n)."""
    xs = _as_terms(seq)
    if not refinement_candidates(xs, i, a):
        raise InvalidRefinementError(f"splitting position {i} of {xs} at {a} breaks the axioms")
    return ArfSequence(xs[: i - 1] + (a, xs[i - 1] - a) + xs[i:])


def iter_refinements(seq: Iterable[int] | ArfSequence) -> Iterator[tuple[int, int, ArfSequence]]:
    """All valid single splits as (position, split value, refined sequence)."""
    xs = _as_terms(seq)
    for i, x in enumerate(xs, start=1):
        for a in range(2, x - 1):
            if refinement_candidates(xs, i, a):
                yield i, a, ArfSequence(xs[: i - 1] + (a, x - a) + xs[i:])


def admits_proper_refinement(seq: Iterable[int] | ArfSequence) -> bool:
    xs = _as_terms(seq)
    return any(
        refinement_candidates(xs, i, a)
        for i, x in enumerate(xs, start=1)
        for a in range(2, x - 1)
    )


def arf_sequences_with_total(total: int) -> list[ArfSequence]:
    """Every valid sequence summing to ``total``, in lexicographic order.

    Depth-first extension: after a prefix with running sum r, the next term is
    either one of the suffix partial sums of the prefix (all at most r) or any
    value in (r, total - r], and the branch dies once r exceeds total.
    """
    if total < 2:
        return []
    out: list[ArfSequence] = []
    prefix: list[int] = []

    def extend(run: int) -> None:
        if run == total:
            out.append(ArfSequence(tuple(prefix)))
            return
        if prefix:
            candidates = []
            acc = 0
            for t in reversed(prefix):
                acc += t
                if run + acc <= total:
                    candidates.append(acc)
            candidates.extend(range(run + 1, total - run + 1))
        else:
            candidates = range(2, total + 1)
        for y in candidates:
            prefix.append(y)
            extend(run + y)
            prefix.pop()

    extend(0)
    return out


def refinement_free_sequences(frobenius: int) -> list[ArfSequence]:
    """Sequences with total F+1 admitting no proper refinement, lexicographic."""
    if frobenius < 1:
        raise InvalidFrobeniusError(f"frobenius must be >= 1, got {frobenius}")
    return [q for q in arf_sequences_with_total(frobenius + 1) if not admits_proper_refinement(q)]


def maximal_elements(frobenius: int) -> list[NumericalSemigroup]:
    """The inclusion-maximal Arf semigroups with the given Frobenius number.

    Each refinement-free sequence with total F+1 maps to one maximal member;
    output order follows the lexicographic order of the sequences.
    """
    return [semigroup_of_sequence(q) for q in refinement_free_sequences(frobenius)]
