"""Size-cap profiles.

Everything in this toolkit is exact, so the only way to keep runtimes sane is
to refuse oversized inputs up front.  Caps are grouped by concern: plain
constructions, closed-set enumerations (which legitimately reach a few
thousand elements), and the exponential solvers.  The active profile comes
from the POSETKIT_PROFILE environment variable ("default" or "strict");
library callers and the CLI --profile flag can override it, and tests can
raise individual caps with the `temporary` context manager.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass, replace

ENV_VAR = "POSETKIT_PROFILE"


@dataclass(frozen=True)
class Limits:
    max_elements: int = 64          # ground sets built by constructors/parsers
    max_lattice: int = 4096         # closed sets per Galois/segment enumeration
    max_solver: int = 512           # largest poset fed to the exact solvers
    embedding_budget: int = 2_000_000   # backtracking nodes in find_embedding
    dimension_budget: int = 5_000_000   # nodes per dimension feasibility search
    extension_elements: int = 10        # linear_extensions enumeration bound
    extension_budget: int = 1_000_000   # nodes in the non-separating search
    oracle_elements: int = 7            # dm_dimension_oracle input bound
    ferrers_oracle_cells: int = 20      # |E|*|F| bound for the Ferrers oracle


PROFILES = {
    "default": Limits(),
    "strict": Limits(
        max_elements=32,
        max_lattice=1024,
        max_solver=128,
        embedding_budget=200_000,
        dimension_budget=500_000,
        extension_elements=8,
        extension_budget=100_000,
        oracle_elements=6,
        ferrers_oracle_cells=12,
    ),
}

_active: Limits | None = None


def active() -> Limits:
    """The currently effective caps."""
    global _active
    if _active is None:
        name = os.environ.get(ENV_VAR, "default")
        if name not in PROFILES:
            raise ValueError(f"unknown limits profile {name!r} in ${ENV_VAR}")
        _active = PROFILES[name]
    return _active


def set_profile(name: str) -> Limits:
    global _active
    if name not in PROFILES:
        raise ValueError(f"unknown limits profile {name!r}")
    _active = PROFILES[name]
    return _active


@contextmanager
def temporary(**overrides):
    """Raise or lower individual caps for the duration of a block."""
    global _active
    before = active()
    _active = replace(before, **overrides)
    try:
        yield _active
    finally:
        _active = before
