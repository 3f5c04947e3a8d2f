"""Exact lower-star topological descriptors and faithful-set search."""

__version__ = "0.1.0"
