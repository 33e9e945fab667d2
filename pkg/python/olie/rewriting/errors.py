from typing import Optional

from ..errors import OlieError


class RewritingError(OlieError):
    """Base class for errors raised while building or reducing compositions"""

    def _format_message(self) -> str:
        message = f"at {self.word}" if self.word is not None else "<word unavailable>"
        if self.error_message:
            message += ": " + self.error_message
        return message

    def __init__(self, word: Optional[str], error_message: Optional[str] = None):
        self.word = word
        self.error_message = error_message
        self.message = self._format_message()

    def __str__(self):
        return self.message

    def __reduce__(self):
        return type(self), (self.word, self.error_message)


class SWordConstructionError(RewritingError):
    """No bracketing of the context yields a special s-word with the required leading term"""
    pass


class CompositionError(RewritingError):
    """A composition failed to drop below its ambient word"""
    pass
