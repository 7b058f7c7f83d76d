"""Exception hierarchy shared by every module."""


class HeliFeasError(Exception):
    """Base class for all engine errors."""


class DomainError(HeliFeasError, ValueError):
    """An input lies outside the mathematical domain of a model."""


class ValidityError(DomainError):
    """A model was asked to operate outside its stated validity range."""


class EnvelopeError(DomainError):
    """A target lies beyond a helicopter's operational envelope."""


class InfeasibleError(DomainError):
    """The requested operation cannot complete (e.g. zero rides per day)."""


class ConfigError(HeliFeasError, ValueError):
    """Malformed or inconsistent configuration."""
