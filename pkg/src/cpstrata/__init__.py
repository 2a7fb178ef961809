"""Exact chamber combinatorics and rational cohomology for ball packings of CP2."""

__version__ = "0.1.0"
