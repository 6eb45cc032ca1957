"""Planar decompositions of graphs and the drawings they certify."""

__version__ = "0.1.0"
