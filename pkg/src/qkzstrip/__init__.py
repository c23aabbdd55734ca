"""Exact polynomial solutions of the level-1 qKZ system with reflecting boundaries."""

__version__ = "0.1.0"
