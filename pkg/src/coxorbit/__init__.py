"""Exact root systems of finite Coxeter groups and checks of parabolic-orbit theorems."""
from __future__ import annotations

from .catalog import UnknownTypeError, datum, group_order
from .certificate import Certificate
from .rootsystem import RootSystem, generate_roots, get
from .scalar import TAU, GoldenInt

__all__ = [
    "Certificate",
    "GoldenInt",
    "RootSystem",
    "TAU",
    "UnknownTypeError",
    "datum",
    "generate_roots",
    "get",
    "group_order",
]
__version__ = "0.1.0"
