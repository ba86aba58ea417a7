"""Finite-scale engine for comonoids, comodules, and contramodules over
sets and graded vector spaces, with brute-force certificates for every
structural theorem it implements."""

__version__ = "0.1.0"
