"""Stäckel-transform superintegrable systems: construction and verification."""

__version__ = "0.1.0"
