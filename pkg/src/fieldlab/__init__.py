"""Finite fields, field-table search, finite planes, block designs and codes."""

__version__ = "0.1.0"
