"""Exception hierarchy for coclasslab.

Every domain error derives from CoclassLabError so callers (and the CLI)
can distinguish bad mathematical input from programming bugs.
"""


class CoclassLabError(Exception):
    """Base class for all domain errors raised by this package."""


# --- abelian invariants ----------------------------------------------------

class NonRealizableCounts(CoclassLabError):
    """An order census that no abelian 3-group reproduces."""


class ParseError(CoclassLabError):
    """Malformed textual input; carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


# --- group engine ----------------------------------------------------------

class InvalidPresentation(CoclassLabError):
    """A presentation referencing undeclared generators or empty relators."""


class EnumerationOverflow(CoclassLabError):
    """Coset enumeration exceeded its bound: infinite or too-large group."""


class WrongAbelianization(CoclassLabError):
    """Operation requires G/G' of type (3,3)."""


class NotIndexThree(CoclassLabError):
    """Transfer target subgroup must have index 3."""


class DerivedNotContained(CoclassLabError):
    """Transfer target subgroup must contain the derived subgroup."""


# --- catalog ---------------------------------------------------------------

class UnknownId(CoclassLabError):
    """SmallGroups identifier not present in the catalog."""


class UnsupportedParams(CoclassLabError):
    """Parametrized presentation requested outside the supported family."""


# --- closed-form rules -----------------------------------------------------

class InconsistentPattern(CoclassLabError):
    """Strict-mode class-number pattern violating the realizability constraints."""


class OutsideRegularRange(CoclassLabError):
    """(c, r, k) outside the hypotheses of the regular TTT prediction."""


class MissingTree(CoclassLabError):
    """Coclass-2 prediction requested without a tree designation."""


class NotExceptional(CoclassLabError):
    """Identifier has no row in the exceptions table."""


class IrregularNotPossible(CoclassLabError):
    """Irregular (homocyclic) commutator structure requested where it cannot occur."""


# --- normal lattice --------------------------------------------------------

class UnsupportedShape(CoclassLabError):
    """Lattice model requested outside the diamond-rectangle family."""


class PreconditionDefect(CoclassLabError):
    """Lattice verification requires defect of commutativity k = 0."""


# --- field data ------------------------------------------------------------

class UnsupportedFamily(CoclassLabError):
    """Conductor-discriminant formula not defined for this field family."""


class RecordError(CoclassLabError):
    """Malformed field record; carries the source line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
