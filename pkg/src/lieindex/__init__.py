"""Exact Lie-theoretic computations behind the index tables of compact simple groups."""

__version__ = "0.1.0"
