class ValidationError(ValueError):
    """Raised when an input does not describe a well-formed object."""


class OrderCapError(ValueError):
    """Raised when an exhaustive scan is requested above the configured order cap."""
