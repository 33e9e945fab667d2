from typing import Optional

from ..errors import OlieError


class ScalarError(OlieError):
    """Base class for errors raised by coefficient arithmetic"""

    def __init__(self, error_message: Optional[str] = None):
        self.error_message = error_message

    def __str__(self) -> str:
        return self.error_message or ""

    def __reduce__(self):
        return type(self), (self.error_message, )


class ScalarZeroDivisionError(ScalarError, ZeroDivisionError):
    pass


class SingularParameterError(ScalarError):
    """Raised when a rational function is evaluated at one of its poles"""

    def __init__(self, value, expression: str):
        self.value = value
        self.expression = expression
        super().__init__(f"parameter value {value} is excluded: it is a pole of {expression}")

    def __reduce__(self):
        return type(self), (self.value, self.expression)


class WordSyntaxError(OlieError):
    """Raised when a word, tree, polynomial or coefficient fails to parse"""

    def _format_message(self) -> str:
        if self.src is None:
            excerpt = " <source unavailable>"
        else:
            line = self.src.split('\n')[0]
            excerpt = line + '\n' + ' ' * self.col + '^'
        message = "at {}:\n{}".format(self.col, excerpt)
        if self.error_message:
            message += '\n' + self.error_message
        return message

    def __init__(self, src: Optional[str], col: int, error_message: Optional[str] = None):
        self.src = src
        self.col = col
        self.error_message = error_message
        self.message = self._format_message()

    def __str__(self):
        return self.message

    def __reduce__(self):
        return type(self), (self.src, self.col, self.error_message)


class WordError(OlieError):

    def __init__(self, error_message: Optional[str] = None):
        self.error_message = error_message

    def __str__(self) -> str:
        return self.error_message or ""

    def __reduce__(self):
        return type(self), (self.error_message, )


class StarWordError(WordError):
    pass


class IncomparablePrimeError(WordError):
    pass


class NotALyndonWordError(WordError):
    pass


class NotALieElementError(WordError):
    pass


class ZeroPolynomialError(WordError):
    pass
