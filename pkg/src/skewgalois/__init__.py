"""Exact computational algebra for skew rational function fields H(t)."""

__version__ = "0.1.0"
