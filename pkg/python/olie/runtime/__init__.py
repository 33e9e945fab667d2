from .errors import ConfigError, ResourceCapExceeded
from .config import Bounds, Config

__all__ = ["ConfigError", "ResourceCapExceeded", "Bounds", "Config"]
