"""Exact Ricci curvature and soliton checks for low-dimensional nilpotent metric Lie algebras."""

from ._core import Algebra, Error, algebra_ids, verdict, verify_paper

__all__ = ["Algebra", "Error", "algebra_ids", "verdict", "verify_paper"]
