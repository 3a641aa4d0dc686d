"""Exact computations with polytope extensions and their hidden vertices."""

from ._kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
