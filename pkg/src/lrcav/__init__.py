"""Locally recoverable codes with all-symbol locality and availability."""

__version__ = "0.1.0"
