"""YAML config loader with content hashing and runtime get/set."""

import hashlib
import json
from pathlib import Path
from typing import Any

import yaml

from engine.config.schema import BenchSpec, SolverConfig


def load_config(path: str | Path) -> SolverConfig:
    """Load and validate a solver config from a YAML file.

    An empty file yields the defaults.
    """
    path = Path(path)
    with open(path) as f:
        raw = yaml.safe_load(f) or {}
    return SolverConfig(**raw)


def save_config(config: SolverConfig, path: str | Path) -> Path:
    """Write the config as YAML; ``load_config`` reads it back unchanged."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        yaml.safe_dump(config.model_dump(mode="json"), f, sort_keys=False)
    return path


def load_bench_spec(path: str | Path) -> BenchSpec:
    """Load a benchmark spec. Relative instance paths resolve against the spec's directory."""
    path = Path(path)
    with open(path) as f:
        raw = yaml.safe_load(f) or {}
    spec = BenchSpec(**raw)
    base = path.parent
    for inst in spec.instances:
        if not Path(inst.path).is_absolute():
            inst.path = str(base / inst.path)
    return spec


def config_hash(config: SolverConfig) -> str:
    """Compute a deterministic SHA256 hash of the config."""
    data = config.model_dump_json(indent=None)
    return hashlib.sha256(data.encode()).hexdigest()[:16]


def get_config_value(config: SolverConfig, dotted_key: str) -> Any:
    """Get a config value by dotted key path. E.g. 'budget.t_max'."""
    parts = dotted_key.split(".")
    obj: Any = config
    for part in parts:
        if isinstance(obj, list):
            obj = obj[int(part)]
        elif hasattr(obj, part):
            obj = getattr(obj, part)
        elif isinstance(obj, dict):
            obj = obj[part]
        else:
            raise KeyError(f"Config key not found: {dotted_key}")
    return obj


def set_config_value(config: SolverConfig, dotted_key: str, value: Any) -> SolverConfig:
    """Set a config value by dotted key path and re-validate.

    Returns a new SolverConfig instance.
    """
    data = json.loads(config.model_dump_json())
    parts = dotted_key.split(".")
    target = data
    for part in parts[:-1]:
        if part not in target:
            raise KeyError(f"Config key not found: {dotted_key}")
        target = target[part]
    if parts[-1] not in target:
        raise KeyError(f"Config key not found: {dotted_key}")
    old_value = target[parts[-1]]
    if isinstance(value, str):
        if isinstance(old_value, bool):
            value = value.lower() in ("1", "true", "yes", "on")
        elif isinstance(old_value, int):
            value = int(value)
        elif isinstance(old_value, float):
            value = float(value)
    target[parts[-1]] = value
    return SolverConfig(**data)


def with_overrides(config: SolverConfig, overrides: dict[str, Any]) -> SolverConfig:
    """Apply several dotted-key overrides, skipping None values."""
    for key, value in overrides.items():
        if value is not None:
            config = set_config_value(config, key, value)
    return config
