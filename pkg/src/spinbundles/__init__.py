"""Exact verification of spin bundle computations over CP^3 and the embedding RP^7 in R^11."""

__version__ = "0.1.0"
