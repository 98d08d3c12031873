"""Data-syndrome codes: exact enumerators, bounds, CSS constructions, decoders."""

__version__ = "0.1.0"
