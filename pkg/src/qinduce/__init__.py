"""Exact normal ordering, Hopf-structure checks and induced representations
for finitely presented deformed Hopf algebras."""

__version__ = "0.1.0"
