"""Exact verification of topological complexity computations for the
basis-conjugating automorphism groups PΣ_n and the upper triangular McCool
groups PΣ_n⁺."""

__version__ = "0.1.0"
