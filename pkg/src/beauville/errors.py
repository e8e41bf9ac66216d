"""Exception types shared across the library.

Parsing errors carry enough position information to point at the offending
token; group-theoretic errors carry the objects that triggered them so
callers can report witnesses without re-deriving them.
"""

from __future__ import annotations


class BeauvilleError(Exception):
    """Base class for all library errors."""


# --- text parsing (cycle notation, words, group files) ---


class ParseError(BeauvilleError, ValueError):
    """Malformed textual input.

    ``line`` is 1-based when the source is a multi-line file, else None.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedSyntax(ParseError):
    """Cycle notation that does not match ``(p1,p2,...)...`` form."""


class RepeatedPoint(ParseError):
    """A point occurs twice in a product of cycles."""


class PointOutOfRange(ParseError):
    """A point exceeds the declared degree (or is < 1)."""


class UnbalancedDelimiter(ParseError):
    """Unmatched parenthesis or bracket in a word."""


class UnknownToken(ParseError):
    """Character that belongs to no word token."""


class EmptyWord(ParseError):
    """A word (or parenthesised subword) with no content."""


# --- group-theoretic preconditions ---


class ParameterMismatch(BeauvilleError):
    """Two structured elements with incompatible parameters were combined."""


class DegreeMismatch(BeauvilleError):
    """Permutations of different degrees were combined."""


class NotInGroup(BeauvilleError):
    """An element was expected to lie in a group but does not."""


class NotTransitive(BeauvilleError):
    """Primitivity was asked of an intransitive group."""


class BudgetExceeded(BeauvilleError):
    """An enumeration grew past its element budget."""

    def __init__(self, message: str, budget: int):
        self.budget = budget
        super().__init__(message)


class NotPrime(BeauvilleError):
    """The field characteristic is not prime."""


class NotPrimePower(BeauvilleError):
    """q is not a prime power."""


class UnboundName(BeauvilleError):
    """A word references a generator name with no binding."""


class UnsupportedQ(BeauvilleError):
    """q outside the range this construction covers."""


class OutOfRange(BeauvilleError):
    """A family parameter below the range where the recipe is defined."""


class GenerationFailure(BeauvilleError):
    """A constructed generating set produced a group of the wrong order."""


class NotTriple(BeauvilleError):
    """(x, y) is not a hyperbolic generating triple of the given group."""


class NotCoprime(BeauvilleError):
    """Element orders required to be coprime are not."""


class InvalidK(BeauvilleError):
    """Twist parameter k violates k > 1 or k | gcd(o(x1), o(y1))."""


class NotMixable(BeauvilleError):
    """A verified mixable structure was required."""


class NotIndexTwo(BeauvilleError):
    """The designated subgroup does not have index 2."""


class MissingData(BeauvilleError):
    """A group spec points at a data file that is not present."""
