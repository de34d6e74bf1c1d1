"""Circumference and chordless cycles of small graphs."""

__version__ = "0.1.0"
