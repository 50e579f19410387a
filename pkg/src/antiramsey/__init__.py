"""Exact simplicial chromatic polynomials, anti-Ramsey counts, Ehrhart and Hodge data."""

__version__ = "0.1.0"
