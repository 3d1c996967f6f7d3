"""Locally complete 2-edge-colourings: recognition, certificates, and structure."""

__version__ = "0.1.0"
