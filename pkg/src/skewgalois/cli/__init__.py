"""Command line interface: configs, expressions, reports."""

from .main import main

__all__ = ["main"]
