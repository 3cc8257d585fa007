"""Conjugacy of integral matrices over Z, Z_p and rings of integers."""

__version__ = "0.1.0"
