"""Exception types raised by the law evaluators, samplers and harness."""


class TelegraphError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(TelegraphError, ValueError):
    """An argument lies outside the mathematical domain of a function."""


class OutOfSupportError(DomainError):
    """The evaluation point lies outside the support of the law."""


class SingularPointError(DomainError):
    """The density diverges at the requested point."""


class NoStationaryLawError(DomainError):
    """A t -> infinity form was requested for the reset-free process (xi = 0)."""


class ReflectNotNeededError(TelegraphError, ValueError):
    """``reflect`` was called on parameters that are not in the both-negative regime."""


class EmptySamplesError(TelegraphError, ValueError):
    """A histogram was requested from an empty sample."""


class QuadratureError(TelegraphError, RuntimeError):
    """Adaptive quadrature did not reach the requested tolerance."""
