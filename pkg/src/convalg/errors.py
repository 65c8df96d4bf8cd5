"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A numeric parameter is outside its admissible range."""


class DomainError(ValueError):
    """An evaluation point lies outside the domain of the object."""


class SizeError(ValueError):
    """A requested computation exceeds the supported index range."""


class RangeError(OverflowError):
    """A weight or intermediate value overflows the floating range."""


class AccuracyError(RuntimeError):
    """An adaptive computation failed to reach the requested accuracy."""


class AdmissibilityError(ValueError):
    """Experiment parameters violate an admissibility condition."""


class CharacterError(ValueError):
    """A supplied character is invalid (vanishing or non-multiplicative)."""


class SingularityError(ArithmeticError):
    """A map derivative vanishes where its reciprocal is needed."""


class InvertibilityError(ArithmeticError):
    """A matrix that must be invertible is singular or ill-conditioned."""
