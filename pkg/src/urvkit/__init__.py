"""Unit rectangle visibility graphs: exact layouts, extraction and constructions."""

__version__ = "0.1.0"
