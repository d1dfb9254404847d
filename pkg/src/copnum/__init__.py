"""Cops and robbers on chess, royal and animal graphs."""

__version__ = "0.1.0"
