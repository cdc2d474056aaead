"""Temporal interaction-network analytics for social-media corpora."""

__version__ = "0.1.0"
