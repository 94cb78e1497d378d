"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An input does not belong to the domain of an operation."""


class PathSyntaxError(PreconditionError):
    """A path string contains a character outside ``U``, ``H``, ``W``, ``D``."""

    def __init__(self, text: str, index: int):
        self.text = text
        self.index = index
        super().__init__(f"invalid step {text[index]!r} at index {index} in {text!r}")


class ConsistencyError(ArithmeticError):
    """An identity that must hold exactly failed (signals a bug, not bad input)."""
