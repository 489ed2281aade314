"""Exception hierarchy shared by every module."""


class UsetError(Exception):
    """Base class for all library errors."""


class ShapeError(UsetError, ValueError):
    """Sequence lengths or arities do not line up."""


class DomainError(UsetError, ValueError):
    """A value lies outside its admissible range."""


class ConstraintViolation(UsetError, ValueError):
    """A degree breaks the inequality attached to its kind."""


class UnknownIdentifier(UsetError, KeyError):
    """A label, element or parameter is not part of the declared system."""

    def __str__(self) -> str:  # KeyError repr-quotes its message otherwise
        return str(self.args[0]) if self.args else ""


class ScenarioError(UsetError):
    """A scenario document failed to parse or validate."""

    def __init__(self, message: str, location: str = "", diagnostics: tuple = ()) -> None:
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location
        # every problem found, when the check was able to continue past the first
        self.diagnostics = tuple(diagnostics) or ((location, message),)
