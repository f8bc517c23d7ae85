#!/usr/bin/env python3
"""
Configuration settings for Cartesian Lab.

Every value can be overridden through the environment (or a .env file) using
the CARTESIAN_LAB_ prefix. CLI options override these per run.
"""

import os
from dotenv import load_dotenv
load_dotenv()

ENV_PREFIX = "CARTESIAN_LAB_"


def _env(name: str, default: str) -> str:
    return os.getenv(ENV_PREFIX + name, default).strip()


def _env_int(name: str, default: int, minimum: int = 0) -> int:
    raw = _env(name, str(default))
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_PREFIX}{name} must be an integer, got '{raw}'")
    if value < minimum:
        raise ValueError(f"{ENV_PREFIX}{name} must be >= {minimum}, got {value}")
    return value


# Algebra Configuration
ORDER_KINDS = ("lex", "grlex", "grevlex")
DEFAULT_ORDER = _env("DEFAULT_ORDER", "grevlex")
if DEFAULT_ORDER not in ORDER_KINDS:
    raise ValueError(f"{ENV_PREFIX}DEFAULT_ORDER must be one of {ORDER_KINDS}, got '{DEFAULT_ORDER}'")

VARIABLES = ("x", "y", "s", "t")
VARIABLE_PRECEDENCE = tuple(v.strip() for v in _env("VARIABLE_PRECEDENCE", "x,y,s,t").split(","))
if sorted(VARIABLE_PRECEDENCE) != sorted(VARIABLES):
    raise ValueError(f"{ENV_PREFIX}VARIABLE_PRECEDENCE must be a permutation of x,y,s,t")

# Search budgets
KST_BUDGET = _env_int("KST_BUDGET", 10_000_000, minimum=1)        # subset-intersection steps
SUBSET_BUDGET = _env_int("SUBSET_BUDGET", 1_000_000, minimum=1)   # curve-fitting subsets

# Worker Configuration
TOPOLOGIES = ("sequential", "threads", "processes")
TOPOLOGY = _env("TOPOLOGY", "sequential")
if TOPOLOGY not in TOPOLOGIES:
    raise ValueError(f"{ENV_PREFIX}TOPOLOGY must be one of {TOPOLOGIES}, got '{TOPOLOGY}'")
WORKERS = _env_int("WORKERS", 1, minimum=1)
CHUNK_SIZE = _env_int("CHUNK_SIZE", 64, minimum=1)

# Reproducibility
DEFAULT_SEED = _env_int("DEFAULT_SEED", 0)

# Report Configuration
DECIMAL_DIGITS = _env_int("DECIMAL_DIGITS", 30, minimum=1)
REPORT_SCHEMA = 1

LOG_LEVEL = _env("LOG_LEVEL", "WARNING").upper()
if LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
    raise ValueError(f"{ENV_PREFIX}LOG_LEVEL is not a logging level: '{LOG_LEVEL}'")
