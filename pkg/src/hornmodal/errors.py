"""Shared exception types."""


class HornmodalError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(HornmodalError):
    """Syntax or validation error in an input text, with source position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
