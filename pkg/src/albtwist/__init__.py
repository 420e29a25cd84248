"""Explicit twists of Albanese varieties of cyclic covers of the plane."""

__version__ = "0.1.0"
