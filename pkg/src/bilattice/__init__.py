"""Exact symbolic engine for bicolored bosonic solvable lattice models."""

__version__ = "0.1.0"
