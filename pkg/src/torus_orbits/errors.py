"""Exception types shared across the package."""


class RangeError(ValueError):
    """A value lies outside its declared semantic range (corrupted code)."""


class CapacityError(RuntimeError):
    """A computation would exceed its configured memory or size budget."""


class InternalError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
