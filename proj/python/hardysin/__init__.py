"""Numerics for the singular Schroedinger operator -d^2/dx^2 + (s^2 - 1/4)/sin^2 x on (0, pi)."""

import os
from pathlib import Path

_corpus = Path(__file__).with_name("data") / "hardy_corpus.json"
if "HARDYSIN_CORPUS" not in os.environ and _corpus.exists():
    os.environ["HARDYSIN_CORPUS"] = str(_corpus)

from ._hardysin import *  # noqa: E402,F401,F403
from ._hardysin import (  # noqa: E402
    AdmissibilityError,
    ConvergenceError,
    DomainError,
    Error,
    NearPoleError,
    schema_version,
)

__all__ = [name for name in dir() if not name.startswith("_")]
