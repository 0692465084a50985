"""Exception hierarchy.

Every input problem raises a subclass of :class:`ModelError`, which the CLI
maps to exit status 2.  Internal consistency failures raise
:class:`InvariantViolation` instead, which should never happen.
"""

from __future__ import annotations


class ModelError(ValueError):
    """Base class for invalid input models, formulas or configurations."""


class EmptyDomain(ModelError):
    pass


class DuplicateWorld(ModelError):
    pass


class UnknownWorld(ModelError):
    pass


class EmptyEvidencePiece(ModelError):
    pass


class EvidenceOutsideDomain(ModelError):
    pass


class MissingUnit(ModelError):
    """The evidence family does not contain the whole domain."""


class NotAnOpen(ModelError):
    pass


class DomainMismatch(ModelError):
    pass


class DomainTooLarge(ModelError):
    pass


class SearchBudgetExceeded(ModelError):
    pass


class AttackInvalid(ModelError):
    """The attack relation breaks one of the three attack conditions.

    ``violations`` holds every :class:`~topoarg.argumentation.Violation`
    found; the message names the first one.
    """

    def __init__(self, violations, describe=None):
        self.violations = list(violations)
        first = self.violations[0]
        text = describe(first) if describe else repr(first)
        more = len(self.violations) - 1
        suffix = f" (+{more} more)" if more else ""
        super().__init__(f"attack relation violates condition {first.condition}: {text}{suffix}")

    @property
    def condition(self) -> int:
        return self.violations[0].condition


class InvalidNeighborhood(ModelError):
    pass


class InvalidMeasure(ModelError):
    pass


class ZeroMassWorld(InvalidMeasure):
    pass


class UnknownAtom(ModelError):
    pass


class FormulaSyntaxError(ModelError):
    """Parse failure with the offending position and the expected tokens."""

    def __init__(self, text: str, position: int, expected):
        self.text = text
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        found = text[position:position + 10] or "end of input"
        super().__init__(
            f"at position {position}: expected one of {', '.join(self.expected)}; found {found!r}"
        )


class GenerationRetryExhausted(ModelError):
    pass


class UnknownProperty(ModelError):
    pass


class InvariantViolation(AssertionError):
    """An implementation-level consistency check failed."""


class CharacterizationMismatch(InvariantViolation):
    pass
