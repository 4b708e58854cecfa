"""Service configuration: JSON file, environment overrides, CLI overrides.

Precedence is file < environment < command-line flags. Environment variables
use the ``EMPATHY_`` prefix with the upper-cased field name, for example
``EMPATHY_PORT=9000`` or ``EMPATHY_SEED_MODE=entropy``.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

from .keyrank import RankConfig

ENV_PREFIX = "EMPATHY_"

SEED_MODES = ("fixed", "entropy")


class ConfigError(ValueError):
    """Raised for unreadable config files or out-of-range values."""


@dataclass(frozen=True)
class ServiceConfig:
    """Everything the serve command needs; ``None`` paths fall back to packaged data."""

    host: str = "127.0.0.1"
    port: int = 8080
    store_path: str | None = None
    model_path: str | None = None
    profile_path: str | None = None
    phrase_bank_path: str | None = None
    seed_mode: str = "fixed"
    seed: int = 0
    rank: RankConfig = field(default_factory=RankConfig)

    def __post_init__(self) -> None:
        if not 1 <= self.port <= 65535:
            raise ConfigError(f"port {self.port} outside 1..65535")
        if self.seed_mode not in SEED_MODES:
            raise ConfigError(f"seed_mode must be one of {SEED_MODES}, got {self.seed_mode!r}")


_STRING_FIELDS = ("host", "store_path", "model_path", "profile_path", "phrase_bank_path", "seed_mode")
_INT_FIELDS = ("port", "seed")


def load_service_config(path: str | Path | None = None, env: dict[str, str] | None = None) -> ServiceConfig:
    """Build a config from an optional JSON file plus ``EMPATHY_*`` overrides.

    ``env`` defaults to ``os.environ``; it is injectable for tests.
    """
    values: dict[str, object] = {}
    if path is not None:
        try:
            payload = json.loads(Path(path).read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise ConfigError(f"config file not found: {path}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {path}: invalid JSON ({exc})") from exc
        if not isinstance(payload, dict):
            raise ConfigError(f"config {path}: expected a JSON object")
        known = {f.name for f in fields(ServiceConfig)}
        unknown = sorted(set(payload) - known)
        if unknown:
            raise ConfigError(f"config {path}: unknown keys {unknown}")
        rank_payload = payload.pop("rank", None)
        if rank_payload is not None:
            if not isinstance(rank_payload, dict):
                raise ConfigError(f"config {path}: 'rank' must be an object")
            try:
                values["rank"] = RankConfig(**rank_payload)
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"config {path}: bad rank settings ({exc})") from exc
        values.update(payload)
    environment = os.environ if env is None else env
    for name in _STRING_FIELDS:
        override = environment.get(ENV_PREFIX + name.upper())
        if override is not None:
            values[name] = override
    for name in _INT_FIELDS:
        override = environment.get(ENV_PREFIX + name.upper())
        if override is not None:
            try:
                values[name] = int(override)
            except ValueError:
                raise ConfigError(f"{ENV_PREFIX + name.upper()} must be an integer, got {override!r}") from None
    try:
        return ServiceConfig(**values)  # type: ignore[arg-type]
    except TypeError as exc:
        raise ConfigError(f"bad config value: {exc}") from exc


def with_overrides(config: ServiceConfig, port: int | None = None, seed: int | None = None) -> ServiceConfig:
    """Apply command-line flag overrides on top of a loaded config."""
    updates: dict[str, int] = {}
    if port is not None:
        updates["port"] = port
    if seed is not None:
        updates["seed"] = seed
    return replace(config, **updates) if updates else config
