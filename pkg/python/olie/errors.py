"""Base class for all errors raised by olie"""


class OlieError(Exception):
    ...
