"""Exact computations with 3-graded Lie algebras, Jordan pairs and their flag geometries."""

from .exactla import QQ, Field, Matrix, Subspace

__all__ = ["QQ", "Field", "Matrix", "Subspace"]
__version__ = "0.1.0"
