"""
Pipeline settings and configuration
"""

import os

from ..core.errors import DEFAULT_MAX_CELLS, InvalidInput
from ..core.workflows import ROUTES

# Defaults; environment variables override, CLI flags override both
PIPELINE_CONFIG = {
    "max_cells": DEFAULT_MAX_CELLS,
    "route": "exp",
    "seed": 0,
    "workers": 4,
    "lemmas": {
        "diameter_samples": 100,
        "subdivision_graphs": 20,
        "contractibility_graphs": 10,
        "max_random_vertices": 8,
        "attach_probability": 0.35,
        # Hom enumeration cap used by the lemma suite; instances above it are resampled
        "hom_cells": 20_000,
    },
}

ENV_KEYS = {
    "max_cells": "HOMCX_MAX_CELLS",
    "route": "HOMCX_ROUTE",
    "seed": "HOMCX_SEED",
    "workers": "HOMCX_WORKERS",
}


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InvalidInput(f"{name} must be an integer, got {raw!r}", stage="config")
    if value < 0:
        raise InvalidInput(f"{name} must be non-negative, got {value}", stage="config")
    return value


def get_max_cells() -> int:
    return _env_int(ENV_KEYS["max_cells"], PIPELINE_CONFIG["max_cells"])


def get_route() -> str:
    route = os.getenv(ENV_KEYS["route"]) or PIPELINE_CONFIG["route"]
    if route not in ROUTES:
        raise InvalidInput(f"{ENV_KEYS['route']} must be one of {ROUTES}, got {route!r}", stage="config")
    return route


def get_seed() -> int:
    return _env_int(ENV_KEYS["seed"], PIPELINE_CONFIG["seed"])


def get_workers() -> int:
    return max(1, _env_int(ENV_KEYS["workers"], PIPELINE_CONFIG["workers"]))


def get_log_level() -> str:
    return os.getenv("LOG_LEVEL", "INFO").upper()
