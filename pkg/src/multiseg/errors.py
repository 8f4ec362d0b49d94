"""Exception types shared by all multiseg modules."""


class DomainError(Exception):
    """An argument lies outside the mathematical domain of the operation."""


class ResourceLimitError(Exception):
    """An enumeration would exceed its configured size cap."""


class InvariantError(RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""
