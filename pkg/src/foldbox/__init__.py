"""Finite double categories, foldings, I-category algebras and crossed modules."""

__version__ = "0.1.0"
