"""Size caps for the exhaustive routines.

All caps count ground-set elements. ``LATMIN_MAX_N`` replaces every
n-based default at once (enumeration, table, verification).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_VAR = "LATMIN_MAX_N"


@dataclass(frozen=True)
class Caps:
    enumerate: int = 20
    table: int = 16
    verify: int = 12
    # these two are not n-based and are not touched by LATMIN_MAX_N
    matching_edges: int = 20
    bis_vertices: int = 20

    @classmethod
    def from_env(cls) -> "Caps":
        raw = os.environ.get(ENV_VAR)
        if raw is None or raw.strip() == "":
            return cls()
        try:
            n = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
        if n < 0:
            raise ValueError(f"{ENV_VAR} must be nonnegative, got {n}")
        return cls(enumerate=n, table=n, verify=n)


def caps() -> Caps:
    return Caps.from_env()
