"""Shared exception types."""


class ParseError(ValueError):
    """Malformed input file; message names the offending line."""


class SizeError(ValueError):
    """Input exceeds a guard meant to keep exact computations tractable."""
