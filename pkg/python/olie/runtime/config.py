"""
Run configuration. Defaults come from ``OLIE_*`` environment variables and
are overridden by explicit arguments (the command line passes its flags
through :meth:`Config.from_env`).
"""
from __future__ import annotations

import dataclasses
import hashlib
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from ..algebra.words import Alphabet
from ..algebra.order import OrderKind
from .errors import ConfigError


def debug_enabled() -> bool:
    return os.environ.get("OLIE_DEBUG", "0") == "1"


def debug(message: str):
    if debug_enabled():
        print(f"[olie] {message}", file=sys.stderr)


def _env_int(name: str, default: Optional[int]) -> Optional[int]:
    value = os.environ.get(name, "").strip()
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {value!r}")


def _env_float(name: str, default: Optional[float]) -> Optional[float]:
    value = os.environ.get(name, "").strip()
    if not value:
        return default
    try:
        return float(value)
    except ValueError:
        raise ConfigError(f"{name} must be a number, got {value!r}")


@dataclass(frozen=True)
class Bounds:
    max_deg: int = 4
    max_odeg: Optional[int] = None
    max_dep: Optional[int] = None
    # compositions whose ambient word is longer are skipped
    max_ambient_deg: Optional[int] = None

    def validate(self):
        for name in ("max_deg", "max_odeg", "max_dep", "max_ambient_deg"):
            v = getattr(self, name)
            if v is not None and v < (0 if name in ("max_odeg", "max_dep") else 1):
                raise ConfigError(f"bound {name} must be positive, got {v}")

    def to_dict(self):
        return dataclasses.asdict(self)


@dataclass(frozen=True)
class Config:
    alphabet: str = "x>y>z"
    order: Optional[str] = None
    bounds: Bounds = field(default_factory=Bounds)
    # empty: keep the parameter symbolic
    samples: Tuple[Fraction, ...] = ()
    output: Optional[str] = None
    format: str = "text"
    parallelism: int = 1
    max_compositions: Optional[int] = None
    timeout: Optional[float] = None
    max_reduction_steps: int = 10000
    timing: bool = False
    use_cache: bool = True
    debug: bool = False

    @staticmethod
    def from_env(**overrides) -> "Config":
        defaults = dict(
            parallelism=_env_int("OLIE_PARALLELISM", 1),
            max_compositions=_env_int("OLIE_MAX_COMPOSITIONS", None),
            timeout=_env_float("OLIE_TIMEOUT", None),
            max_reduction_steps=_env_int("OLIE_MAX_REDUCTION_STEPS", 10000),
            use_cache=os.environ.get("OLIE_NO_CACHE", "0") != "1",
            debug=debug_enabled(),
        )
        defaults.update({k: v for k, v in overrides.items() if v is not None})
        return Config(**defaults)

    @property
    def parsed_alphabet(self) -> Alphabet:
        return Alphabet.parse(self.alphabet)

    @property
    def symbolic(self) -> bool:
        return not self.samples

    def validate(self, parametric: bool = False):
        self.parsed_alphabet
        if self.order is not None:
            try:
                OrderKind.parse(self.order)
            except ValueError as e:
                raise ConfigError(str(e))
        self.bounds.validate()
        if self.format not in ("text", "json"):
            raise ConfigError(f"unknown report format {self.format!r}")
        if self.parallelism < 1:
            raise ConfigError(f"parallelism must be at least 1, got {self.parallelism}")
        if self.max_reduction_steps < 1:
            raise ConfigError(f"max_reduction_steps must be at least 1, got {self.max_reduction_steps}")
        if parametric:
            for r in self.samples:
                if r in (0, -1):
                    raise ConfigError(f"parameter sample {r} is excluded for this family")
        return self

    def cache_key(self, family: str, variant: Optional[str], version: str) -> str:
        payload = {
            "version": version,
            "family": family,
            "variant": variant,
            "alphabet": str(self.parsed_alphabet),
            "order": self.order,
            "bounds": self.bounds.to_dict(),
            "samples": [str(r) for r in self.samples],
            "max_compositions": self.max_compositions,
            "max_reduction_steps": self.max_reduction_steps,
        }
        return hashlib.sha256(json.dumps(payload, sort_keys=True).encode("utf-8")).hexdigest()
