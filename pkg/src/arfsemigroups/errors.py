"""Exception types raised by the library.

Every domain error derives from :class:`SemigroupError` so callers can catch
the whole family with one clause; programming errors (broken invariants that
indicate a caller bug rather than bad input) derive from
:class:`InternalInvariantError`.
"""


class SemigroupError(Exception):
    """Base class for all domain errors."""


class EmptyInputError(SemigroupError):
    """An operation received an empty collection where content is required."""


class NotCofiniteError(SemigroupError):
    """The generators have gcd > 1, so the complement in the naturals is infinite."""


class NotAMemberError(SemigroupError):
    """A modulus or element was required to belong to the semigroup but does not."""


class NoGapsError(SemigroupError):
    """The operation needs a gap (the semigroup is all of the naturals)."""


class NotMedError(SemigroupError):
    """The semigroup does not have maximal embedding dimension."""


class NotArfError(SemigroupError):
    """The semigroup does not satisfy the Arf condition."""


class InvalidAdjunctionError(SemigroupError):
    """The element being adjoined is not a special gap below the multiplicity."""


class NotInCovarietyError(SemigroupError):
    """The semigroup is not an Arf semigroup with the expected Frobenius number."""


class InvalidFrobeniusError(SemigroupError):
    """The requested Frobenius number is out of range."""


class InvalidSequenceError(SemigroupError):
    """The integer tuple violates the Arf-sequence axioms."""


class InvalidRefinementError(SemigroupError):
    """A refinement position or split value is out of range."""


class ScaleLimitError(SemigroupError):
    """The request exceeds the size bounds this implementation supports."""


class InternalInvariantError(AssertionError):
    """An invariant that should be unconditionally true was violated (caller bug)."""


class InconsistentTableError(InternalInvariantError):
    """An incremental Apery update did not find the entry it must replace."""


class ContradictionError(InternalInvariantError):
    """A residue class guaranteed to be covered by a minimal generator is missing."""
