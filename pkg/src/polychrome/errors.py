"""Exception types shared across the package."""


class GeneralPositionError(ValueError):
    """Input has three collinear points (or coincident boundary lines)."""


class PerturbationError(RuntimeError):
    """The perturbation retry budget ran out."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search would exceed its resource budget."""


class InvariantError(AssertionError):
    """An internally asserted certificate failed to hold."""
