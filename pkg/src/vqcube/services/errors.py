"""
Exceptions raised by the service layer.
"""


class VQCubeError(Exception):
    """Base exception for every error raised by the package."""

    pass


class ContractError(VQCubeError, ValueError):
    """Raised when arguments break an operation's contract."""

    pass


class LabelRangeError(ContractError):
    """Raised when a dimension index or label lies outside its range."""

    pass


class PreconditionError(ContractError):
    """Raised when the hypothesis of a construction does not hold."""

    pass


class ResourceCapError(VQCubeError):
    """Raised when a request exceeds a configured size cap."""

    def __init__(self, what: str, requested: int, cap: int, cap_name: str):
        self.requested = requested
        self.cap = cap
        self.cap_name = cap_name
        super().__init__(
            f"{what} n={requested} exceeds {cap_name}={cap}; raise the cap "
            f"to allow it."
        )
