"""Kazhdan-Lusztig bases, cells and cell modules of parabolic Hecke algebras of type A."""

__version__ = "0.1.0"
