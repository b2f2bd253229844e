"""Exact recomputation of the anticanonical degree bound -K^3 <= 72."""

__version__ = "0.1.0"
