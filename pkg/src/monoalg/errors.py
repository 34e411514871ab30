"""Exception types shared across the toolkit.

Alarms (CapExceeded, RelationFails, WordVanishes) signal that a computation
contradicted something theory guarantees; they carry diagnostics and are never
silently swallowed.
"""


class MonoalgError(Exception):
    """Base class for all toolkit errors."""


class AlphabetMismatch(MonoalgError, ValueError):
    """Two words or polynomials over different alphabets were combined."""


class EquationDoesNotHold(MonoalgError, ValueError):
    """The shift equation u·W = W·r fails for the given words."""


class CyclicInput(MonoalgError, ValueError):
    """A primitive word was required but a proper power was given."""


class NotRegular(MonoalgError, ValueError):
    """A regular word was required."""


class EquivalentInputs(MonoalgError, ValueError):
    """Two words with the same primitive root where distinct roots are required."""


class NotSubwordClosed(MonoalgError, ValueError):
    """The accepted language is not closed under taking factors."""

    def __init__(self, word, factor):
        self.word = word
        self.factor = factor
        super().__init__(f"accepted word {word!r} has rejected factor {factor!r}")


class RecurrenceNotStabilized(MonoalgError, ValueError):
    """Too few coefficients to pin down the linear recurrence of the counts."""


class PolynomialGrowth(MonoalgError, ValueError):
    """An exponential-growth automaton was required."""


class ZeroPolynomial(MonoalgError, ValueError):
    """The zero polynomial has no leading monomial."""


class InvalidCertificate(MonoalgError, ValueError):
    """A free-pair certificate violates one of its invariants."""


class TruncationTooSmall(MonoalgError, ValueError):
    """Truncation degree too small for the requested group-word length."""


class CapExceeded(MonoalgError, RuntimeError):
    """Alarm: the free-pair search exhausted its candidate budget.

    Theory guarantees a pair exists, so hitting the cap points at a bug (or a
    falsifying automaton); the exception carries the full candidate trace.
    """

    def __init__(self, cap, candidates):
        self.cap = cap
        self.candidates = candidates
        super().__init__(
            f"no pairwise well-based regular pair after {cap} candidates; "
            f"trace: {candidates!r}"
        )


class RelationFails(MonoalgError, RuntimeError):
    """Alarm: a commutator relation that must be trivial is not."""

    def __init__(self, pattern, detail=""):
        self.pattern = pattern
        super().__init__(f"commutator for index pattern {pattern} is not trivial {detail}")


class WordVanishes(MonoalgError, RuntimeError):
    """Alarm: a reduced group word evaluated to the identity."""

    def __init__(self, word):
        self.word = word
        super().__init__(f"reduced group word {' '.join(word)} evaluates to 1")
