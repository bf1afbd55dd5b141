"""Exact verification of relativistic wave equations built from Lorentz-group representations."""

__version__ = "0.1.0"
