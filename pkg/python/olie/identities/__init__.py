from .catalog import CATALOG, OLPI, Template, UnknownIdentityError, catalog, get, instantiate
from .ruleset import Instance, RuleSet

__all__ = ["CATALOG", "OLPI", "Template", "UnknownIdentityError", "catalog", "get", "instantiate", "Instance", "RuleSet"]
