"""Experiment configuration: defaults, file parsing, digest."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field, fields, replace

from .errors import ConfigError

DEFAULT_ETAS = tuple(round(2.2 + 0.2 * i, 1) for i in range(11))


@dataclass(frozen=True)
class ExperimentConfig:
    """Full parameter set for one reproducible experiment."""

    half_isd: float = 1.0
    expected_stations: float = 50.0
    eta_list: tuple = DEFAULT_ETAS
    runs: int = 100
    users: int = 2000
    seed: int = 1
    exclusion: float = 0.01
    density_scale: float = 1.0
    noise_w: float = 0.0
    tx_power_w: float = 1.0
    path_gain_k: float = 1.0
    rings: int = 3

    def validate(self) -> "ExperimentConfig":
        if self.half_isd <= 0:
            raise ConfigError("half_isd must be positive")
        if self.expected_stations <= 0:
            raise ConfigError("expected_stations must be positive")
        if not self.eta_list:
            raise ConfigError("eta_list must be nonempty")
        if any(e <= 2 for e in self.eta_list):
            raise ConfigError("every path-loss exponent must exceed 2")
        if self.runs < 1 or self.users < 1:
            raise ConfigError("runs and users must be >= 1")
        if not 0 < self.exclusion < 1:
            raise ConfigError("exclusion must lie in (0, 1)")
        if self.density_scale <= 0:
            raise ConfigError("density_scale must be positive")
        if self.noise_w < 0 or self.tx_power_w <= 0 or self.path_gain_k <= 0:
            raise ConfigError("powers must be positive, noise nonnegative")
        if self.rings < 1:
            raise ConfigError("rings must be >= 1")
        return self

    @property
    def effective_half_isd(self) -> float:
        """Half inter-site distance after density scaling (rho scales as 1/R^2)."""
        return self.half_isd / self.density_scale**0.5

    def canonical_items(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, tuple):
                v = ",".join(repr(x) for x in v)
            yield f.name, v

    def digest(self) -> str:
        """Short content hash identifying this configuration."""
        text = "\n".join(f"{k}={v!r}" for k, v in self.canonical_items())
        return hashlib.sha256(text.encode()).hexdigest()[:12]


_FIELD_TYPES = {
    "half_isd": float, "expected_stations": float, "runs": int, "users": int,
    "seed": int, "exclusion": float, "density_scale": float, "noise_w": float,
    "tx_power_w": float, "path_gain_k": float, "rings": int,
}


def parse_eta_list(text: str) -> tuple:
    try:
        values = tuple(float(tok) for tok in text.replace(";", ",").split(",") if tok.strip())
    except ValueError as exc:
        raise ConfigError(f"bad eta list {text!r}") from exc
    if not values:
        raise ConfigError("eta list is empty")
    return values


def load_config_file(path) -> dict:
    """Parse a line-based `key = value` config file with `#` comments."""
    mapping = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (part.strip() for part in line.split("=", 1))
            mapping[key] = value
    return mapping


def config_from_mapping(mapping: dict, base: ExperimentConfig | None = None) -> ExperimentConfig:
    cfg = base or ExperimentConfig()
    updates = {}
    for key, value in mapping.items():
        if key == "eta_list":
            updates[key] = parse_eta_list(value) if isinstance(value, str) else tuple(value)
        elif key in _FIELD_TYPES:
            try:
                updates[key] = _FIELD_TYPES[key](value)
            except ValueError as exc:
                raise ConfigError(f"bad value for {key}: {value!r}") from exc
        else:
            raise ConfigError(f"unknown config key {key!r}")
    return replace(cfg, **updates).validate()
