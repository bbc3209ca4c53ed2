"""Exception hierarchy shared across the package."""


class SkillMorlError(Exception):
    """Base class for all package errors."""

    category = "error"


class ShapeError(SkillMorlError):
    """Array dimensions do not compose."""

    category = "shape"


class NumericError(SkillMorlError):
    """Non-finite value produced; carries the offending layer index."""

    category = "numeric"

    def __init__(self, message, layer=None):
        super().__init__(message)
        self.layer = layer


class ValidationError(SkillMorlError):
    """Invalid user-supplied value; names the failed constraint or key."""

    category = "validation"

    def __init__(self, message, key=None):
        super().__init__(message)
        self.key = key


class ConfigurationError(SkillMorlError):
    """Scenario or experiment setup cannot be satisfied."""

    category = "configuration"


class UndefinedInputError(SkillMorlError):
    """Operation called on an empty or degenerate input."""

    category = "undefined-input"
