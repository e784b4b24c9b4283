"""Run-time limits.

The element cap bounds every exhaustive enumeration; the coset cap bounds
Todd-Coxeter.  Both can be overridden by environment variables so that the
CLI and scripts share one knob.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

ELEMENT_CAP_ENV = "POLYDUAL_CAP"
COSET_CAP_ENV = "POLYDUAL_COSET_CAP"


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if not raw:
        return default
    return int(raw.replace("_", ""))


@dataclass(frozen=True)
class Limits:
    element_cap: int = 4_000_000
    coset_cap: int = 2_000_000

    @classmethod
    def from_env(cls) -> Limits:
        base = cls()
        return cls(
            element_cap=_env_int(ELEMENT_CAP_ENV, base.element_cap),
            coset_cap=_env_int(COSET_CAP_ENV, base.coset_cap),
        )


def default_element_cap() -> int:
    return Limits.from_env().element_cap


def default_coset_cap() -> int:
    return Limits.from_env().coset_cap
